// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gafkit/noise.hpp>

using namespace gafkit;

namespace {

// independent tail oracle: long plain summation plus an integral bracket
double tail_oracle(long n) {
    const long M = n + 2000000;
    double s = 0.0;
    for (long k = M; k > n; --k) s += 1.0 / (1.0 + static_cast<double>(k) * k);
    double lower = std::atan(1.0 / (static_cast<double>(M) + 1.0));
    double upper = std::atan(1.0 / static_cast<double>(M));
    return s + 0.5 * (lower + upper);
}

}  // namespace

TEST_CASE("noise determinism and prefix consistency") {
    auto a = sample_noise(0, 11, 3);
    auto b = sample_noise(0, 11, 3);
    REQUIRE(a.coeffs.size() == 1);
    CHECK(a.coeffs[0] == b.coeffs[0]);

    auto small = sample_noise(40, 7, 5);
    auto big = sample_noise(41, 7, 5);
    for (std::size_t k = 0; k < small.coeffs.size(); ++k) CHECK(small.coeffs[k] == big.coeffs[k]);
}

TEST_CASE("noise moments: unit complex variance, centered") {
    const long n = 100000;
    cplx mean = 0.0;
    double p2 = 0.0;
    auto v = sample_noise(n - 1, 2024, 0);
    for (auto z : v.coeffs) {
        mean += z;
        p2 += std::norm(z);
    }
    mean /= static_cast<double>(n);
    p2 /= static_cast<double>(n);
    CHECK(std::abs(mean.real()) < 0.01);
    CHECK(std::abs(mean.imag()) < 0.01);
    CHECK(p2 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("theta norm pinned values") {
    NoiseVector v;
    v.coeffs = {cplx(1.0, 0.0)};
    CHECK(theta_norm_sq(v) == doctest::Approx(1.0));
    v.coeffs = {cplx(0.0, 0.0), cplx(1.0, 0.0)};
    CHECK(theta_norm_sq(v) == doctest::Approx(0.5));

    ThetaWeights signedw{ThetaIndexing::SignedZ};
    // storage 0,1,2 carry Fourier indices 0, +1, -1: weights 1, 1/2, 1/2
    v.coeffs = {cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(2.0, 0.0)};
    CHECK(theta_norm_sq(v, signedw) == doctest::Approx(2.0));
}

TEST_CASE("mean theta norm of a truncated noise matches the weight sum") {
    const long n = 10;
    double predicted = 0.0;
    for (long k = 0; k <= n; ++k) predicted += 1.0 / (1.0 + static_cast<double>(k) * k);
    CHECK(predicted == doctest::Approx(1.981792822335175).epsilon(1e-12));

    const long trials = 10000;
    double mean = 0.0, m2 = 0.0;
    for (long t = 0; t < trials; ++t) {
        double v = theta_norm_sq(sample_noise(n, 5150, static_cast<std::uint64_t>(t)));
        mean += v;
        m2 += v * v;
    }
    mean /= trials;
    m2 /= trials;
    double se = std::sqrt((m2 - mean * mean) / trials);
    CHECK(std::abs(mean - predicted) < 3.0 * se);
}

TEST_CASE("theta tail against the brute-force oracle") {
    for (long n : {0L, 1L, 10L, 100L}) {
        CHECK(theta_tail(n) == doctest::Approx(tail_oracle(n)).epsilon(1e-10));
    }
    CHECK(theta_tail(100) <= 0.01);
    CHECK(theta_tail(100) == doctest::Approx(0.00994986).epsilon(1e-4));
}

TEST_CASE("wasserstein bound values and tail inequality") {
    auto b100 = wasserstein2_bound(100);
    CHECK(b100.bound == doctest::Approx(0.1));
    CHECK(b100.exact_tail <= 0.01);
    CHECK(wasserstein2_bound(1).bound == doctest::Approx(1.0));
    CHECK_THROWS_AS(wasserstein2_bound(0), DomainError);

    double prev = 2.0;
    for (long n : {1L, 2L, 5L, 10L, 50L, 200L, 1000L, 5000L}) {
        auto b = wasserstein2_bound(n);
        CHECK(b.bound <= prev);
        CHECK(b.exact_tail < 1.0 / static_cast<double>(n));
        prev = b.bound;
    }
}

TEST_CASE("concentration bound values") {
    CHECK(concentration_bound(100, 0.5) == doctest::Approx(2.0 * std::exp(-12.5)).epsilon(1e-12));
    CHECK(concentration_bound(100, 0.5) == doctest::Approx(7.46e-6).epsilon(2e-3));
    CHECK(concentration_bound(1, 1e-9) == doctest::Approx(1.0));
    CHECK(concentration_bound(1000, 0.1) == doctest::Approx(2.0 * std::exp(-5.0)).epsilon(1e-12));
    double prev = 2.0;
    for (long n : {1L, 4L, 16L, 64L, 256L}) {
        double b = concentration_bound(n, 0.4);
        CHECK(b <= prev);
        prev = b;
    }
}

TEST_CASE("lipschitz bound values") {
    CHECK(lipschitz_bound(1.0, 100) == doctest::Approx(0.1));
    CHECK(lipschitz_bound(0.0, 17) == doctest::Approx(0.0));
    CHECK(lipschitz_bound(2.0, 16) == doctest::Approx(0.5));
}

TEST_CASE("empirical tail exceedance") {
    CHECK(empirical_tail_exceedance(10, 500, 0.0, 200, 1) == doctest::Approx(1.0));

    // sharp regime: bound far below 1, observed frequency must respect it
    double freq = empirical_tail_exceedance(50, 2000, 1.0, 2000, 2);
    CHECK(freq == doctest::Approx(0.0));

    // vacuous regime passes trivially
    double f2 = empirical_tail_exceedance(10, 1000, 0.3, 500, 3);
    double bound = concentration_bound(10, 0.3);
    CHECK(bound == doctest::Approx(1.0));
    CHECK(f2 <= bound);

    CHECK_THROWS_AS(empirical_tail_exceedance(10, 10, 0.5, 10, 1), DomainError);
}
