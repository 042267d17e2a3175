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

#include <gafkit/fft.hpp>
#include <gafkit/quadrature.hpp>
#include <gafkit/rng.hpp>

using namespace gafkit;

TEST_CASE("philox4x32-10 known-answer vector") {
    auto r = detail::philox4x32_10({0u, 0u, 0u, 0u}, {0u, 0u});
    CHECK(r[0] == 0x6627e8d5u);
    CHECK(r[1] == 0xe169c58du);
    CHECK(r[2] == 0xbc57ac4cu);
    CHECK(r[3] == 0x9b00dbd8u);
}

TEST_CASE("complex gaussian determinism and key sensitivity") {
    cplx a = complex_gaussian(42, 7, 1234);
    cplx b = complex_gaussian(42, 7, 1234);
    CHECK(a == b);
    CHECK(complex_gaussian(42, 7, 1235) != a);
    CHECK(complex_gaussian(42, 8, 1234) != a);
    CHECK(complex_gaussian(43, 7, 1234) != a);
}

TEST_CASE("complex gaussian moments") {
    const long n = 100000;
    cplx mean = 0.0;
    double pow2 = 0.0;
    for (long k = 0; k < n; ++k) {
        cplx z = complex_gaussian(1, 0, static_cast<std::uint64_t>(k));
        mean += z;
        pow2 += std::norm(z);
    }
    mean /= static_cast<double>(n);
    pow2 /= static_cast<double>(n);
    CHECK(std::abs(mean.real()) < 0.01);
    CHECK(std::abs(mean.imag()) < 0.01);
    CHECK(pow2 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gauss-hermite integrates gaussian moments exactly") {
    auto rule = gauss_hermite(24);
    double m0 = 0, m2 = 0, m4 = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        m0 += rule.w[i];
        m2 += rule.w[i] * rule.x[i] * rule.x[i];
        m4 += rule.w[i] * std::pow(rule.x[i], 4);
    }
    CHECK(m0 == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-13));
    CHECK(m4 == doctest::Approx(0.75 * std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("generalized gauss-laguerre moments") {
    double alpha = 0.7;
    auto rule = gauss_laguerre(20, alpha);
    double m0 = 0, m1 = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        m0 += rule.w[i];
        m1 += rule.w[i] * rule.x[i];
    }
    CHECK(m0 == doctest::Approx(std::exp(std::lgamma(alpha + 1))).epsilon(1e-12));
    CHECK(m1 == doctest::Approx(std::exp(std::lgamma(alpha + 2))).epsilon(1e-12));
}

TEST_CASE("gauss-legendre on [0,2]") {
    auto rule = gauss_legendre(12, 0.0, 2.0);
    double m0 = 0, m3 = 0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        m0 += rule.w[i];
        m3 += rule.w[i] * std::pow(rule.x[i], 3);
    }
    CHECK(m0 == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(m3 == doctest::Approx(4.0).epsilon(1e-13));
}

static std::vector<cplx> naive_dft(const std::vector<cplx>& a, int sign) {
    std::vector<cplx> out(a.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j < a.size(); ++j)
            out[k] += a[j] * cis(sign * 2.0 * pi * static_cast<double>(j * k) /
                                 static_cast<double>(a.size()));
    return out;
}

TEST_CASE("dft matches the naive transform, power-of-two and Bluestein") {
    for (std::size_t n : {4u, 8u, 6u, 10u, 13u}) {
        std::vector<cplx> a(n);
        for (std::size_t j = 0; j < n; ++j) a[j] = complex_gaussian(5, 1, j);
        auto fast = dft(a, +1);
        auto slow = naive_dft(a, +1);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fast[k] - slow[k]) < 1e-10);
    }
}
