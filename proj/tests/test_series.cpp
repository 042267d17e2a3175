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

#include <gafkit/rng.hpp>
#include <gafkit/series.hpp>

using namespace gafkit;

TEST_CASE("psi closed forms") {
    CHECK(std::abs(psi(DictionaryFamily::weyl(0), 3, cplx(1.0)) - cplx(1.0 / std::sqrt(6.0))) <
          1e-14);
    CHECK(psi(DictionaryFamily::weyl(2), 1, cplx(0.7, 0.3)) == cplx(0.0));
    CHECK(std::abs(psi(DictionaryFamily::spherical(4), 2, cplx(1.0)) - cplx(std::sqrt(6.0))) <
          1e-14);
    CHECK(std::abs(psi(DictionaryFamily::hyperbolic(0.0), 5, cplx(0.5)) - cplx(std::pow(0.5, 5))) <
          1e-15);
    CHECK(psi(DictionaryFamily::shifted(3), 2, cplx(0.4)) == cplx(0.0));
    CHECK(std::abs(psi(DictionaryFamily::shifted(3), 5, cplx(0.4)) - cplx(0.16)) < 1e-15);
}

TEST_CASE("series evaluation basics") {
    AnalyticSeries s;
    s.dict = DictionaryFamily::weyl(0);
    s.coeffs = {cplx(1.0), cplx(0.0), cplx(0.0)};
    CHECK(std::abs(eval_series(s, cplx(3.0, -2.0)) - cplx(1.0)) < 1e-15);
    s.coeffs = {cplx(0.0), cplx(1.0)};
    CHECK(std::abs(eval_series(s, cplx(2.0)) - cplx(2.0)) < 1e-15);
    CHECK(std::abs(eval_series_derivative(s, cplx(2.0)) - cplx(1.0)) < 1e-15);
}

TEST_CASE("psi ladder consistency: eval_series of a unit vector equals psi") {
    for (auto dict : {DictionaryFamily::weyl(0), DictionaryFamily::weyl(2),
                      DictionaryFamily::hyperbolic(0.7), DictionaryFamily::spherical(6),
                      DictionaryFamily::shifted(1)}) {
        for (long j : {0L, 1L, 3L, 5L}) {
            if (dict.last_index() >= 0 && j > dict.last_index()) continue;
            AnalyticSeries s;
            s.dict = dict;
            s.coeffs.assign(8, 0.0);
            s.coeffs[static_cast<std::size_t>(j)] = 1.0;
            cplx z = (dict.domain() == SeriesDomain::Disk) ? cplx(0.41, -0.2) : cplx(1.3, 0.4);
            CHECK(std::abs(eval_series(s, z) - psi(dict, j, z)) < 1e-13);
        }
    }
}

TEST_CASE("polar FFT values: identity series on 4th roots of unity") {
    AnalyticSeries s;
    s.dict = DictionaryFamily::weyl(0);
    s.coeffs = {cplx(0.0), cplx(1.0)};
    auto vals = eval_polar_fft(s, 1.0, 4);
    REQUIRE(vals.size() == 4);
    CHECK(std::abs(vals[0] - cplx(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(vals[1] - cplx(0.0, 1.0)) < 1e-14);
    CHECK(std::abs(vals[2] - cplx(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(vals[3] - cplx(0.0, -1.0)) < 1e-14);
}

TEST_CASE("polar FFT equals Horner to 1e-9 relative") {
    AnalyticSeries s;
    s.dict = DictionaryFamily::hyperbolic(0.3);
    s.coeffs.resize(40);
    for (std::size_t k = 0; k < s.coeffs.size(); ++k) s.coeffs[k] = complex_gaussian(31, 0, k);
    for (std::size_t ntheta : {64u, 48u}) {
        auto vals = eval_polar_fft(s, 0.8, ntheta);
        for (std::size_t j = 0; j < ntheta; j += 5) {
            cplx z = 0.8 * cis(2.0 * pi * static_cast<double>(j) / static_cast<double>(ntheta));
            cplx direct = eval_series(s, z);
            CHECK(std::abs(vals[j] - direct) <= 1e-9 * (1.0 + std::abs(direct)));
        }
    }
    CHECK_THROWS_AS(eval_polar_fft(s, 0.5, 10), DomainError);
}

TEST_CASE("constant series on the circle") {
    AnalyticSeries s;
    s.dict = DictionaryFamily::weyl(0);
    s.coeffs = {cplx(2.5, -1.0)};
    auto vals = eval_polar_fft(s, 0.7, 8);
    for (auto v : vals) CHECK(std::abs(v - cplx(2.5, -1.0)) < 1e-14);
}

TEST_CASE("ck_and_tail pinned cases") {
    auto rep = ck_and_tail(DictionaryFamily::weyl(0), 0.0, 0);
    CHECK(rep.ck == doctest::Approx(1.0));
    CHECK(rep.tail == doctest::Approx(0.0));

    auto sph = ck_and_tail(DictionaryFamily::spherical(3), 2.5, 3);
    CHECK(sph.tail == doctest::Approx(0.0));
    CHECK(sph.bracket == doctest::Approx(0.0));
}

TEST_CASE("ck_and_tail against a brute-force oracle at radius 2") {
    // oracle: plain summation of (1+k^2) 4^k / k! far past any mass
    auto dict = DictionaryFamily::weyl(0);
    double R2 = 4.0;
    auto oracle_tail = [&](long n) {
        double s = 0.0;
        for (long k = 300; k > n; --k)
            s += (1.0 + static_cast<double>(k) * k) *
                 std::exp(static_cast<double>(k) * std::log(R2) - std::lgamma(k + 1.0));
        return s;
    };
    for (long n : {-1L, 0L, 5L, 20L, 60L}) {
        auto rep = ck_and_tail(dict, 2.0, n);
        CHECK(rep.tail == doctest::Approx(oracle_tail(n)).epsilon(1e-10));
    }
    long nmin = minimal_truncation(dict, 2.0, 1.0);
    CHECK(ck_and_tail(dict, 2.0, nmin).tail <= 1.0);
    CHECK(ck_and_tail(dict, 2.0, nmin - 1).tail > 1.0);
}

TEST_CASE("tail is nonincreasing in n and vanishes") {
    auto dict = DictionaryFamily::hyperbolic(0.5);
    double prev = std::numeric_limits<double>::infinity();
    for (long n : {-1L, 0L, 2L, 8L, 32L, 128L, 512L}) {
        double t = ck_and_tail(dict, 0.85, n).tail;
        CHECK(t <= prev + 1e-18);
        prev = t;
    }
    CHECK(prev < 1e-12);
}

TEST_CASE("sup bound from C_K controls evaluation") {
    for (int trial = 0; trial < 100; ++trial) {
        AnalyticSeries s;
        s.dict = (trial % 2 == 0) ? DictionaryFamily::weyl(0) : DictionaryFamily::hyperbolic(0.2);
        double radius = (trial % 2 == 0) ? 1.5 : 0.8;
        s.coeffs.resize(30);
        for (std::size_t k = 0; k < s.coeffs.size(); ++k)
            s.coeffs[k] = complex_gaussian(77, static_cast<std::uint64_t>(trial), k);
        double bound = series_sup_bound(s, radius);
        double u = uniform_double(78, static_cast<std::uint64_t>(trial), 0);
        cplx z = radius * std::sqrt(u) *
                 cis(2.0 * pi * uniform_double(78, static_cast<std::uint64_t>(trial), 1));
        CHECK(std::abs(eval_series(s, z)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS(ck_and_tail(DictionaryFamily::hyperbolic(0.0), 1.0, 10), DomainError);
    CHECK_THROWS_AS(ck_and_tail(DictionaryFamily::shifted(2), 1.2, 10), DomainError);
    CHECK_NOTHROW(ck_and_tail(DictionaryFamily::weyl(0), 3.0, 10));
}
