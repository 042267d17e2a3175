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

#ifndef GAFKIT_ZEROS_HPP
#define GAFKIT_ZEROS_HPP

// Zero location for truncated series: argument-principle subdivision with
// Newton refinement, a simultaneous-iteration polynomial-root oracle for
// cross-checks, and the probabilistic Rouche zero-count certificate.

#include <algorithm>
#include <optional>
#include <string>

#include "common.hpp"
#include "noise.hpp"
#include "series.hpp"

namespace gafkit {

/// boundary sampling ran into a (near-)zero of the function on the contour
class BoundaryZeroError : public std::runtime_error {
public:
    explicit BoundaryZeroError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroPoint {
    cplx point;
    double residual = 0.0;
    int multiplicity = 1;
};

enum class ZeroMethod { Subdivision, Oracle };

struct ZeroSet {
    std::vector<ZeroPoint> points;  // lexicographic by (re, im)
    Rect window;
    ZeroMethod method = ZeroMethod::Subdivision;
    std::vector<std::pair<cplx, int>> excluded_deterministic;
    std::vector<std::string> diagnostics;

    long count_with_multiplicity() const {
        long c = 0;
        for (const auto& p : points) c += p.multiplicity;
        return c;
    }
};

namespace detail {

/// Plain-coefficient view of a series with its derivative, the workhorse for
/// repeated evaluation.
struct PolyView {
    std::vector<cplx> b, db;

    explicit PolyView(const AnalyticSeries& s) : b(monomial_coeffs(s)), db(derivative_coeffs(b)) {}
    explicit PolyView(std::vector<cplx> coeffs) : b(std::move(coeffs)), db(derivative_coeffs(b)) {}
    cplx operator()(cplx z) const { return horner(b, z); }
    cplx deriv(cplx z) const { return horner(db, z); }

    /// coefficient bound on sup |F'| over the closed disk |z| <= R
    double deriv_bound(double R) const {
        double m1 = 0.0, rm = 1.0;
        for (std::size_t m = 1; m < b.size(); ++m) {
            m1 += static_cast<double>(m) * std::abs(b[m]) * rm;
            rm *= R;
        }
        return m1;
    }
};

/// Phase increment of F along [za, zb].  A segment is accepted once the
/// derivative bound certifies the phase cannot swing past pi/2 on it
/// (|delta z| * sup|F'| <= 0.4 max(|fa|,|fb|) forces inf |F| >= 0.6 max and
/// total phase variation <= 2/3); otherwise it splits.  A vanishing sample
/// means the contour grazes a zero.
inline double edge_phase(const PolyView& F, cplx za, cplx zb, cplx fa, cplx fb, double floor,
                         double m1, int depth) {
    double d = std::arg(fb / fa);
    double len = std::abs(zb - za);
    if (std::abs(d) <= 0.5 * pi && len * m1 <= 0.4 * std::max(std::abs(fa), std::abs(fb)))
        return d;
    if (depth > 48)
        throw BoundaryZeroError("winding: phase refinement budget exceeded on an edge");
    cplx zm = 0.5 * (za + zb);
    cplx fm = F(zm);
    if (std::abs(fm) < floor)
        throw BoundaryZeroError("winding: contour passes too close to a zero");
    return edge_phase(F, za, zm, fa, fm, floor, m1, depth + 1) +
           edge_phase(F, zm, zb, fm, fb, floor, m1, depth + 1);
}

inline double contour_phase(const PolyView& F, const std::vector<cplx>& nodes, double floor,
                            double m1) {
    std::vector<cplx> vals(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        vals[i] = F(nodes[i]);
        if (std::abs(vals[i]) < floor)
            throw BoundaryZeroError("winding: contour passes too close to a zero");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::size_t j = (i + 1) % nodes.size();
        total += edge_phase(F, nodes[i], nodes[j], vals[i], vals[j], floor, m1, 0);
    }
    return total;
}

inline long phase_to_winding(double total) {
    long w = std::lround(total / (2.0 * pi));
    if (std::abs(total - 2.0 * pi * static_cast<double>(w)) > 0.5)
        throw BoundaryZeroError("winding: phase total far from a multiple of 2 pi");
    return w;
}

inline long winding_rect(const PolyView& F, const Rect& cell, double floor, double m1) {
    std::vector<cplx> nodes = {cplx(cell.x0, cell.y0), cplx(cell.x1, cell.y0),
                               cplx(cell.x1, cell.y1), cplx(cell.x0, cell.y1)};
    return phase_to_winding(contour_phase(F, nodes, floor, m1));
}

inline long winding_circle(const PolyView& F, cplx center, double radius, double floor,
                           double m1) {
    std::vector<cplx> nodes(16);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        nodes[i] = center + radius * cis(2.0 * pi * static_cast<double>(i) / 16.0);
    return phase_to_winding(contour_phase(F, nodes, floor, m1));
}

}  // namespace detail

/// Exact integer winding of the series along the rectangle boundary: the
/// number of zeros inside, multiplicity counted.  Boundary sampling refines
/// adaptively; a boundary that grazes a zero raises BoundaryZeroError.
inline long winding_number(const AnalyticSeries& s, const Rect& cell) {
    detail::PolyView F(s);
    double scale = 0.0;
    for (cplx z : {cplx(cell.x0, cell.y0), cplx(cell.x1, cell.y0), cplx(cell.x1, cell.y1),
                   cplx(cell.x0, cell.y1), cell.center()})
        scale = std::max(scale, std::abs(F(z)));
    return detail::winding_rect(F, cell, 1e-13 * (scale + 1e-300), F.deriv_bound(cell.max_abs()));
}

namespace detail {

struct Locator {
    const PolyView& F;
    double floor;
    double fscale;
    double m1;   // derivative bound over the window
    double sep;  // merge radius for coincident finds
    std::vector<ZeroPoint> found;
    std::vector<std::string> diagnostics;

    void record(cplx z, int mult) {
        double res = std::abs(F(z));
        for (auto& p : found) {
            if (std::abs(p.point - z) < sep) {
                p.multiplicity = std::max(p.multiplicity, mult);
                return;
            }
        }
        found.push_back({z, res, mult});
    }

    /// Newton with a quadtree fallback; returns nullopt when the cell carries
    /// no convergent simple zero.
    std::optional<cplx> newton(cplx z0, const Rect& cell) const {
        cplx z = z0;
        for (int it = 0; it < 100; ++it) {
            cplx f = F(z);
            if (std::abs(f) <= 1e-12 * fscale) return z;
            cplx df = F.deriv(z);
            if (!(std::abs(df) > 0.0)) break;
            cplx step = f / df;
            double limit = 2.0 * (cell.width() + cell.height());
            if (std::abs(step) > limit) step *= limit / std::abs(step);
            z -= step;
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
        }
        return std::nullopt;
    }

    void subdivide(const Rect& cell, long expect, int depth) {
        if (expect <= 0) return;
        if (expect == 1 || depth >= 26) {
            auto z = newton(cell.center(), cell);
            if (z && expect == 1) {
                record(*z, 1);
                return;
            }
            if (depth >= 26) {
                // quadtree pinned the zero to a tiny box; take the center
                record(cell.center(), static_cast<int>(expect));
                if (expect > 1)
                    diagnostics.push_back("multiple zero of order " + std::to_string(expect) +
                                          " pinned by subdivision");
                return;
            }
        }
        // one more subdivision level; jitter the split when a zero sits on an
        // internal edge
        for (double jitter : {0.5, 0.5314231200171784, 0.4722960243125594}) {
            double xm = cell.x0 + jitter * cell.width();
            double ym = cell.y0 + jitter * cell.height();
            Rect quads[4] = {{cell.x0, xm, cell.y0, ym},
                             {xm, cell.x1, cell.y0, ym},
                             {cell.x0, xm, ym, cell.y1},
                             {xm, cell.x1, ym, cell.y1}};
            long winds[4];
            bool ok = true;
            long total = 0;
            for (int i = 0; i < 4 && ok; ++i) {
                try {
                    winds[i] = winding_rect(F, quads[i], floor, F.deriv_bound(quads[i].max_abs()));
                    total += winds[i];
                } catch (const BoundaryZeroError&) {
                    ok = false;
                }
            }
            if (ok && total == expect) {
                for (int i = 0; i < 4; ++i) subdivide(quads[i], winds[i], depth + 1);
                return;
            }
        }
        diagnostics.push_back("cell at (" + std::to_string(cell.center().real()) + "," +
                              std::to_string(cell.center().imag()) +
                              ") unresolved; reported at cell center");
        record(cell.center(), static_cast<int>(expect));
    }
};

}  // namespace detail

/// Subdivision zero location: grid x grid cells, winding per cell from
/// shared-edge phases, Newton refinement per nonempty cell, deterministic
/// lexicographic ordering.  The truncation tail over the window must already
/// be below tolerance (checked through ck_and_tail).
inline ZeroSet locate_zeros(const AnalyticSeries& s, const Rect& window, int grid = 64,
                            double tail_tol = 1e-8) {
    require(grid >= 1, "locate_zeros: grid must be positive");
    if (s.dict.domain() == SeriesDomain::Disk)
        require(window.max_abs() < 1.0, "locate_zeros: window must sit strictly inside the disk");
    // the tail criterion concerns truncations of sampled transforms; a user
    // polynomial is its own ground truth
    if (s.provenance != Provenance::UserSignal) {
        auto rep = ck_and_tail(s.dict, window.max_abs(), static_cast<long>(s.coeffs.size()) - 1);
        if (rep.tail > tail_tol)
            throw AccuracyError("locate_zeros: truncation tail " + std::to_string(rep.tail) +
                                " exceeds tolerance; truncation " +
                                std::to_string(minimal_truncation(s.dict, window.max_abs(), tail_tol)) +
                                " is required");
    }

    detail::PolyView F(s);
    const std::size_t g = static_cast<std::size_t>(grid);
    std::vector<double> xs(g + 1), ys(g + 1);
    for (std::size_t i = 0; i <= g; ++i) {
        xs[i] = window.x0 + window.width() * static_cast<double>(i) / static_cast<double>(g);
        ys[i] = window.y0 + window.height() * static_cast<double>(i) / static_cast<double>(g);
    }

    ZeroSet out;
    out.window = window;
    out.method = ZeroMethod::Subdivision;
    for (auto dz : s.deterministic_zeros)
        if (window.contains(dz.first)) out.excluded_deterministic.push_back(dz);

    // function scale over the lattice fixes the zero floor and residual scale
    std::vector<std::vector<cplx>> fval(g + 1, std::vector<cplx>(g + 1));
    double fscale = 0.0;
    for (std::size_t i = 0; i <= g; ++i)
        for (std::size_t j = 0; j <= g; ++j) {
            fval[i][j] = F(cplx(xs[i], ys[j]));
            fscale = std::max(fscale, std::abs(fval[i][j]));
        }
    double floor = 1e-13 * (fscale + 1e-300);

    // radial derivative bounds: an edge near the center must not inherit the
    // loose bound from the window corners
    auto edge_m1 = [&](cplx a, cplx bpt) {
        return F.deriv_bound(std::max(std::abs(a), std::abs(bpt)));
    };
    const double m1 = F.deriv_bound(window.max_abs());
    detail::Locator loc{F,  floor, fscale, m1, 1e-9 * (window.width() + window.height()),
                        {}, {}};

    // shared-edge phases; a grazing zero nudges the whole lattice once
    std::vector<std::vector<double>> hphase(g, std::vector<double>(g + 1));
    std::vector<std::vector<double>> vphase(g + 1, std::vector<double>(g));
    for (int attempt = 0;; ++attempt) {
        try {
            for (std::size_t i = 0; i < g; ++i)
                for (std::size_t j = 0; j <= g; ++j)
                    hphase[i][j] = detail::edge_phase(
                        F, cplx(xs[i], ys[j]), cplx(xs[i + 1], ys[j]), fval[i][j], fval[i + 1][j],
                        floor, edge_m1(cplx(xs[i], ys[j]), cplx(xs[i + 1], ys[j])), 0);
            for (std::size_t i = 0; i <= g; ++i)
                for (std::size_t j = 0; j < g; ++j)
                    vphase[i][j] = detail::edge_phase(
                        F, cplx(xs[i], ys[j]), cplx(xs[i], ys[j + 1]), fval[i][j], fval[i][j + 1],
                        floor, edge_m1(cplx(xs[i], ys[j]), cplx(xs[i], ys[j + 1])), 0);
            break;
        } catch (const BoundaryZeroError&) {
            if (attempt >= 4)
                throw AccuracyError("locate_zeros: lattice keeps grazing zeros after perturbation");
            // shift interior lines by a half-step fraction and resample
            double fx = window.width() / static_cast<double>(g) *
                        (0.37 + 0.11 * static_cast<double>(attempt));
            double fy = window.height() / static_cast<double>(g) *
                        (0.23 + 0.13 * static_cast<double>(attempt));
            for (std::size_t i = 1; i < g; ++i) xs[i] = std::min(xs[i] + fx, window.x1);
            for (std::size_t j = 1; j < g; ++j) ys[j] = std::min(ys[j] + fy, window.y1);
            fscale = 0.0;
            for (std::size_t i = 0; i <= g; ++i)
                for (std::size_t j = 0; j <= g; ++j) {
                    fval[i][j] = F(cplx(xs[i], ys[j]));
                    fscale = std::max(fscale, std::abs(fval[i][j]));
                }
            floor = 1e-13 * (fscale + 1e-300);
            loc.floor = floor;
            loc.fscale = fscale;
        }
    }

    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            double total = hphase[i][j] + vphase[i + 1][j] - hphase[i][j + 1] - vphase[i][j];
            long w = std::lround(total / (2.0 * pi));
            if (w <= 0) continue;
            Rect cell{xs[i], xs[i + 1], ys[j], ys[j + 1]};
            if (w == 1) {
                auto z = loc.newton(cell.center(), cell);
                if (z)
                    loc.record(*z, 1);
                else
                    loc.subdivide(cell, w, 0);
            } else {
                loc.subdivide(cell, w, 0);
            }
        }
    }

    // a.s.-simple zeros: flag numerically suspicious derivative collapse
    double cellsize = std::max(window.width(), window.height()) / static_cast<double>(g);
    for (const auto& p : loc.found)
        if (std::abs(F.deriv(p.point)) * cellsize < 1e-8 * fscale)
            loc.diagnostics.push_back("zero with near-vanishing derivative at (" +
                                      std::to_string(p.point.real()) + "," +
                                      std::to_string(p.point.imag()) + ")");

    out.points = std::move(loc.found);
    out.diagnostics = std::move(loc.diagnostics);
    std::sort(out.points.begin(), out.points.end(), [](const ZeroPoint& a, const ZeroPoint& b) {
        if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
        return a.point.imag() < b.point.imag();
    });
    return out;
}

// ---------------------------------------------------------------------------
// polynomial-root oracle (simultaneous iteration, Aberth-Ehrlich)
// ---------------------------------------------------------------------------

/// All complex roots of sum_m coeffs[m] z^m, degree <= 512; independent
/// brute-force cross-check for the subdivision path.
inline std::vector<cplx> poly_roots_oracle(std::vector<cplx> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    require(!coeffs.empty(), "poly_roots_oracle: zero polynomial");
    std::size_t zeros_at_origin = 0;
    while (zeros_at_origin + 1 < coeffs.size() && std::abs(coeffs[zeros_at_origin]) == 0.0)
        ++zeros_at_origin;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros_at_origin));
    const std::size_t d = coeffs.size() - 1;
    require(d + zeros_at_origin <= 512, "poly_roots_oracle: degree above 512; use the subdivision path");

    std::vector<cplx> roots(zeros_at_origin, cplx(0.0, 0.0));
    if (d == 0) return roots;

    double cmax = 0.0;
    for (const auto& c : coeffs) cmax = std::max(cmax, std::abs(c));
    for (auto& c : coeffs) c /= cmax;
    detail::PolyView P(coeffs);

    // Fujiwara bound keeps the starting ring sane even when the leading
    // coefficient sits many orders below the peak
    double loglead = std::log(std::abs(coeffs.back()));
    double fuji = 0.0;
    for (std::size_t k = 1; k <= d; ++k) {
        double cm = std::abs(coeffs[d - k]);
        if (cm == 0.0) continue;
        fuji = std::max(fuji, std::exp((std::log(cm) - loglead) / static_cast<double>(k)));
    }
    double radius = 2.0 * fuji + 1e-6;

    std::vector<cplx> z(d);
    for (std::size_t i = 0; i < d; ++i)
        z[i] = 0.7 * radius *
               cis(2.0 * pi * (static_cast<double>(i) + 0.5) / static_cast<double>(d) + 0.4);

    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            cplx p = P(z[i]);
            cplx dp = P.deriv(z[i]);
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) ||
                !std::isfinite(dp.real()) || !std::isfinite(dp.imag())) {
                z[i] *= 0.7;  // walked into overflow territory; pull back in
                worst = 1.0;
                continue;
            }
            cplx ratio = (std::abs(dp) > 0.0) ? p / dp : cplx(1e-3, 1e-3);
            cplx sum = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            cplx w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[i] -= w;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    // Newton polish
    for (std::size_t i = 0; i < d; ++i)
        for (int it = 0; it < 3; ++it) {
            cplx dp = P.deriv(z[i]);
            if (!(std::abs(dp) > 0.0)) break;
            z[i] -= P(z[i]) / dp;
        }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

/// Zero set of a truncated series through the root oracle: re-scaled to the
/// window radius, filtered to the window, Newton-polished on the series.
inline ZeroSet oracle_zeros(const AnalyticSeries& s, const Rect& window, double tail_tol = 1e-8) {
    if (s.dict.domain() == SeriesDomain::Disk)
        require(window.max_abs() < 1.0, "oracle_zeros: window must sit strictly inside the disk");
    if (s.provenance != Provenance::UserSignal) {
        auto rep = ck_and_tail(s.dict, window.max_abs(), static_cast<long>(s.coeffs.size()) - 1);
        if (rep.tail > tail_tol)
            throw AccuracyError("oracle_zeros: truncation tail above tolerance; truncation " +
                                std::to_string(minimal_truncation(s.dict, window.max_abs(), tail_tol)) +
                                " is required");
    }
    std::vector<cplx> b = monomial_coeffs(s);
    // scale the variable to the window radius so extreme powers stay graded
    double scale = std::max(window.max_abs(), 1e-12);
    double sm = 1.0, bmax = 0.0;
    for (auto& c : b) {
        c *= sm;
        sm *= scale;
        bmax = std::max(bmax, std::abs(c));
    }
    // the graded tail below 1e-20 of the peak cannot move roots in the unit
    // scale disk past what the Newton polish repairs, and keeping it would
    // wreck the oracle's starting radius
    while (!b.empty() && std::abs(b.back()) < 1e-20 * bmax) b.pop_back();
    auto roots = poly_roots_oracle(b);

    detail::PolyView F(s);
    ZeroSet out;
    out.window = window;
    out.method = ZeroMethod::Oracle;
    for (auto dz : s.deterministic_zeros)
        if (window.contains(dz.first)) out.excluded_deterministic.push_back(dz);
    for (cplx u : roots) {
        cplx zr = u * scale;
        if (!window.contains(zr)) continue;
        for (int it = 0; it < 4; ++it) {
            cplx dp = F.deriv(zr);
            if (!(std::abs(dp) > 0.0)) break;
            zr -= F(zr) / dp;
        }
        if (!window.contains(zr)) continue;
        out.points.push_back({zr, std::abs(F(zr)), 1});
    }
    std::sort(out.points.begin(), out.points.end(), [](const ZeroPoint& a, const ZeroPoint& b2) {
        if (a.point.real() != b2.point.real()) return a.point.real() < b2.point.real();
        return a.point.imag() < b2.point.imag();
    });
    return out;
}

// ---------------------------------------------------------------------------
// Rouche certification
// ---------------------------------------------------------------------------

struct Curve {
    enum class Kind { Rectangle, Circle } kind = Kind::Circle;
    Rect rect;
    cplx center{0.0, 0.0};
    double radius = 1.0;

    static Curve circle(cplx center, double radius) {
        require(radius > 0.0, "Curve: radius must be positive");
        Curve c;
        c.kind = Kind::Circle;
        c.center = center;
        c.radius = radius;
        return c;
    }
    static Curve rectangle(const Rect& r) {
        require(r.width() > 0.0 && r.height() > 0.0, "Curve: degenerate rectangle");
        Curve c;
        c.kind = Kind::Rectangle;
        c.rect = r;
        return c;
    }
    double max_abs() const {
        return kind == Kind::Circle ? std::abs(center) + radius : rect.max_abs();
    }
    cplx point_at(double t) const {  // t in [0,1)
        if (kind == Kind::Circle) return center + radius * cis(2.0 * pi * t);
        double per = 2.0 * (rect.width() + rect.height());
        double s = t * per;
        if (s < rect.width()) return {rect.x0 + s, rect.y0};
        s -= rect.width();
        if (s < rect.height()) return {rect.x1, rect.y0 + s};
        s -= rect.height();
        if (s < rect.width()) return {rect.x1 - s, rect.y1};
        s -= rect.width();
        return {rect.x0, rect.y1 - s};
    }
    double perimeter() const {
        return kind == Kind::Circle ? 2.0 * pi * radius : 2.0 * (rect.width() + rect.height());
    }
};

struct RoucheCertificate {
    Curve curve;
    long n = 0;            // truncation the certificate speaks about
    double eps = 0.0;      // certified boundary modulus floor
    bool tail_ok = false;  // weighted dictionary tail beyond n at most 1
    double tail = 0.0;
    long count = 0;        // zeros of the truncated transform inside the curve
    double prob_bound = 0.0;  // the full transform shares the count with at least this probability
    bool vacuous = true;
};

/// Certify that the truncated series and the untruncated transform share the
/// zero count inside the curve, with probability from the concentration
/// bound.  The boundary floor is certified between samples through a
/// derivative bound along the curve; sampling doubles until the floor
/// stabilizes.
inline RoucheCertificate rouche_certify(const AnalyticSeries& s_n, const Curve& curve, long n,
                                        double safety = 0.1) {
    require(static_cast<long>(s_n.coeffs.size()) == n + 1,
            "rouche_certify: series must carry exactly n+1 coefficients");
    require(safety >= 0.0 && safety < 1.0, "rouche_certify: safety must lie in [0,1)");
    double R = curve.max_abs();
    if (s_n.dict.domain() == SeriesDomain::Disk)
        require(R < 1.0, "rouche_certify: curve must sit strictly inside the disk");

    RoucheCertificate cert;
    cert.curve = curve;
    cert.n = n;
    auto rep = ck_and_tail(s_n.dict, R, n);
    cert.tail = rep.tail;
    cert.tail_ok = rep.tail <= 1.0;
    if (!cert.tail_ok)
        throw AccuracyError("rouche_certify: weighted tail above 1; truncation " +
                            std::to_string(minimal_truncation(s_n.dict, R, 1.0)) +
                            " is required for this window");

    detail::PolyView F(s_n);
    // sup of |F'| along the curve from the coefficient bound on |z| <= R
    double m1 = 0.0, rm = 1.0;
    for (std::size_t m = 1; m < F.b.size(); ++m) {
        m1 += static_cast<double>(m) * std::abs(F.b[m]) * rm;
        rm *= R;
    }

    double floor = -1.0, prev_floor = -2.0;
    for (std::size_t samples = 256; samples <= 65536; samples *= 2) {
        double minmod = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < samples; ++i)
            minmod = std::min(minmod,
                              std::abs(F(curve.point_at(static_cast<double>(i) /
                                                        static_cast<double>(samples)))));
        double step = curve.perimeter() / static_cast<double>(samples);
        prev_floor = floor;
        floor = minmod - 0.5 * step * m1;
        if (floor > 0.0 && prev_floor > 0.0 &&
            std::abs(floor - prev_floor) < 0.01 * floor)
            break;
    }
    if (!(floor > 0.0)) {
        cert.eps = 0.0;
        cert.prob_bound = 0.0;
        cert.vacuous = true;
        return cert;  // refused: no certified boundary modulus
    }
    cert.eps = floor * (1.0 - safety);

    double fl = 1e-13 * (cert.eps + 1.0);
    cert.count = (curve.kind == Curve::Kind::Circle)
                     ? detail::winding_circle(F, curve.center, curve.radius, fl, m1)
                     : detail::winding_rect(F, curve.rect, fl, m1);

    double p = 1.0 - std::min(1.0, 2.0 * std::exp(-0.5 * static_cast<double>(n) * cert.eps * cert.eps));
    cert.prob_bound = std::max(0.0, p);
    cert.vacuous = cert.prob_bound <= 0.0;
    return cert;
}

/// Zero count of an arbitrary series inside a curve (used for recounts at a
/// larger truncation).
inline long count_zeros_inside(const AnalyticSeries& s, const Curve& curve) {
    detail::PolyView F(s);
    double scale = 0.0;
    for (int i = 0; i < 8; ++i)
        scale = std::max(scale, std::abs(F(curve.point_at(i / 8.0))));
    double fl = 1e-13 * (scale + 1e-300);
    double m1 = F.deriv_bound(curve.max_abs());
    return (curve.kind == Curve::Kind::Circle)
               ? detail::winding_circle(F, curve.center, curve.radius, fl, m1)
               : detail::winding_rect(F, curve.rect, fl, m1);
}

}  // namespace gafkit

#endif
