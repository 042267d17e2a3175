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

#include <gafkit/gaf.hpp>
#include <gafkit/zeros.hpp>

using namespace gafkit;

namespace {

/// Weyl(0) series with prescribed plain coefficients b_m.
AnalyticSeries from_plain(const std::vector<cplx>& b) {
    AnalyticSeries s;
    s.dict = DictionaryFamily::weyl(0);
    s.coeffs.resize(b.size());
    for (std::size_t m = 0; m < b.size(); ++m)
        s.coeffs[m] = b[m] * std::exp(0.5 * std::lgamma(static_cast<double>(m) + 1.0));
    return s;
}

double hausdorff(const std::vector<ZeroPoint>& A, const std::vector<ZeroPoint>& B) {
    auto one_sided = [](const std::vector<ZeroPoint>& X, const std::vector<ZeroPoint>& Y) {
        double worst = 0.0;
        for (const auto& x : X) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& y : Y) best = std::min(best, std::abs(x.point - y.point));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(A, B), one_sided(B, A));
}

}  // namespace

TEST_CASE("winding number pinned cases") {
    // F(z) = z on the unit square centered at the origin
    auto fz = from_plain({cplx(0.0), cplx(1.0)});
    CHECK(winding_number(fz, Rect{-0.5, 0.5, -0.5, 0.5}) == 1);
    CHECK(winding_number(fz, Rect{0.25, 1.0, 0.25, 1.0}) == 0);

    // F(z) = z^2 - 1 on [-2,2]^2
    auto fz21 = from_plain({cplx(-1.0), cplx(0.0), cplx(1.0)});
    CHECK(winding_number(fz21, Rect{-2.0, 2.0, -2.0, 2.0}) == 2);

    // F(z) = z^2: double zero counted with multiplicity
    auto fz2 = from_plain({cplx(0.0), cplx(0.0), cplx(1.0)});
    CHECK(winding_number(fz2, Rect{-0.1, 0.1, -0.1, 0.1}) == 2);
}

TEST_CASE("winding additivity over quadrants") {
    auto s = sample_gaf(GafModel::planar(1.0), 60, 21, 0);
    Rect cell{-1.3, 1.1, -0.9, 1.2};
    long whole = winding_number(s, cell);
    cplx c = cell.center();
    long sum = winding_number(s, Rect{cell.x0, c.real(), cell.y0, c.imag()}) +
               winding_number(s, Rect{c.real(), cell.x1, cell.y0, c.imag()}) +
               winding_number(s, Rect{cell.x0, c.real(), c.imag(), cell.y1}) +
               winding_number(s, Rect{c.real(), cell.x1, c.imag(), cell.y1});
    CHECK(whole == sum);
}

TEST_CASE("locate_zeros on a constructed polynomial") {
    // (z - 0.5)(z + 0.25i) = z^2 + (-0.5 + 0.25i) z - 0.125i
    auto s = from_plain({cplx(0.0, -0.125), cplx(-0.5, 0.25), cplx(1.0)});
    auto zs = locate_zeros(s, Rect{-1.0, 1.0, -1.0, 1.0}, 16);
    REQUIRE(zs.points.size() == 2);
    CHECK(std::abs(zs.points[0].point - cplx(0.0, -0.25)) < 1e-12);
    CHECK(std::abs(zs.points[1].point - cplx(0.5, 0.0)) < 1e-12);
    for (const auto& p : zs.points) CHECK(p.residual < 1e-12);
}

TEST_CASE("locate_zeros finds a double zero by subdivision") {
    auto s = from_plain({cplx(0.0), cplx(0.0), cplx(1.0)});  // z^2
    auto zs = locate_zeros(s, Rect{-0.4, 0.45, -0.4, 0.45}, 8);
    CHECK(zs.count_with_multiplicity() == 2);
    REQUIRE(!zs.points.empty());
    CHECK(std::abs(zs.points[0].point) < 1e-5);
}

TEST_CASE("spherical sample: exactly N zeros, none at infinity") {
    int N = 12;
    auto s = sample_gaf(GafModel::spherical(N), N, 4, 9);
    // projective check: the leading coefficient never vanishes in practice
    CHECK(std::abs(s.coeffs.back()) > 0.0);
    auto b = monomial_coeffs(s);
    auto roots = poly_roots_oracle(b);
    CHECK(roots.size() == static_cast<std::size_t>(N));
    // all roots inside a window large enough for the Cauchy bound
    double bound = 0.0;
    for (std::size_t m = 0; m + 1 < b.size(); ++m)
        bound = std::max(bound, std::abs(b[m] / b.back()));
    bound += 1.0;
    for (cplx r : roots) CHECK(std::abs(r) <= bound);
}

TEST_CASE("poly_roots_oracle pinned and residual checks") {
    auto r1 = poly_roots_oracle({cplx(-1.0), cplx(0.0), cplx(1.0)});
    std::sort(r1.begin(), r1.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    REQUIRE(r1.size() == 2);
    CHECK(std::abs(r1[0] - cplx(-1.0)) < 1e-13);
    CHECK(std::abs(r1[1] - cplx(1.0)) < 1e-13);

    auto r2 = poly_roots_oracle({cplx(0.0), cplx(1.0)});
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0]) == 0.0);

    // random degree-50 polynomial: substituted residuals stay tiny
    std::vector<cplx> c(51);
    double norm = 0.0;
    for (std::size_t m = 0; m < c.size(); ++m) {
        c[m] = complex_gaussian(2222, 0, m);
        norm = std::max(norm, std::abs(c[m]));
    }
    auto roots = poly_roots_oracle(c);
    REQUIRE(roots.size() == 50);
    detail::PolyView P(c);
    for (cplx r : roots) CHECK(std::abs(P(r)) < 1e-10 * norm * std::pow(1.0 + std::abs(r), 50));

    CHECK_THROWS_AS(poly_roots_oracle(std::vector<cplx>(600, cplx(1.0))), DomainError);
}

TEST_CASE("subdivision and oracle agree on truncated planar samples") {
    Rect window{-2.0, 2.0, -2.0, 2.0};
    for (std::uint64_t stream = 0; stream < 5; ++stream) {
        auto s = sample_gaf(GafModel::planar(1.0), 200, 300, stream);
        auto sub = locate_zeros(s, window, 48);
        auto orc = oracle_zeros(s, window);
        CHECK(sub.points.size() == orc.points.size());
        CHECK(hausdorff(sub.points, orc.points) < 1e-9);

        long total_winding = winding_number(s, window);
        CHECK(total_winding == sub.count_with_multiplicity());
    }
}

TEST_CASE("locate_zeros enforces the truncation tail precondition") {
    auto s = sample_gaf(GafModel::planar(1.0), 6, 5, 5);
    CHECK_THROWS_AS(locate_zeros(s, Rect{-3.0, 3.0, -3.0, 3.0}, 16), AccuracyError);
}

TEST_CASE("planar-higher samples carry the excluded deterministic zero") {
    auto s = sample_gaf(GafModel::planar_higher(2), 80, 6, 6);
    auto zs = locate_zeros(s, Rect{-1.5, 1.5, -1.5, 1.5}, 24);
    REQUIRE(zs.excluded_deterministic.size() == 1);
    CHECK(zs.excluded_deterministic[0].second == 2);
}

TEST_CASE("rouche certificate fields and probability formula") {
    long n = 300;
    auto s = sample_gaf(GafModel::planar(1.0), n, 77, 3);
    auto cert = rouche_certify(s, Curve::circle(cplx(0.0), 1.0), n, 0.1);
    CHECK(cert.tail_ok);
    if (cert.eps > 0.0) {
        double expect =
            std::max(0.0, 1.0 - std::min(1.0, 2.0 * std::exp(-0.5 * static_cast<double>(n) *
                                                             cert.eps * cert.eps)));
        CHECK(cert.prob_bound == doctest::Approx(expect));
        // certified floor really is a lower bound on a fine sampling
        detail::PolyView F(s);
        double fine = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 20000; ++i)
            fine = std::min(fine, std::abs(F(cis(2.0 * pi * i / 20000.0))));
        CHECK(cert.eps <= fine);
    }

    // n eps^2 = 25 pins the stated probability
    CHECK(1.0 - std::min(1.0, 2.0 * std::exp(-12.5)) == doctest::Approx(0.9999925).epsilon(1e-6));

    // vacuous clamp at tiny n
    auto s1 = sample_gaf(GafModel::planar(1.0), 1, 78, 0);
    auto cert1 = rouche_certify(s1, Curve::circle(cplx(0.0), 0.5), 1, 0.1);
    if (cert1.eps > 0.0 && cert1.eps * cert1.eps * 1.0 < 2.0 * std::log(2.0))
        CHECK(cert1.vacuous);

    // tail refusal names a workable truncation
    auto sh = sample_gaf(GafModel::hyperbolic(0.0), 3, 79, 0);
    CHECK_THROWS_AS(rouche_certify(sh, Curve::circle(cplx(0.0), 0.9), 3, 0.1), AccuracyError);
}

TEST_CASE("certified counts survive a recount at four times the truncation") {
    long n = 280;
    int certified = 0, agreed = 0;
    for (std::uint64_t stream = 0; stream < 40 && certified < 25; ++stream) {
        auto s = sample_gaf(GafModel::planar(1.0), n, 500, stream);
        auto cert = rouche_certify(s, Curve::circle(cplx(0.0), 1.0), n, 0.1);
        if (cert.vacuous || cert.prob_bound < 0.999) continue;
        ++certified;
        auto s4 = sample_gaf(GafModel::planar(1.0), 4 * n, 500, stream);
        long recount = count_zeros_inside(s4, Curve::circle(cplx(0.0), 1.0));
        if (recount == cert.count) ++agreed;
    }
    CHECK(certified > 0);
    CHECK(agreed == certified);
}
