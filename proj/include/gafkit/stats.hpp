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

#ifndef GAFKIT_STATS_HPP
#define GAFKIT_STATS_HPP

// Zero statistics: empirical first intensities against closed-form expected
// counts, determinantal two-point checks for the alpha = 0 hyperbolic case,
// isometry-invariance counts, and the local-extrema experiment.

#include <cstdio>
#include <functional>

#include "common.hpp"
#include "gaf.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "transforms.hpp"
#include "zeros.hpp"

namespace gafkit {

enum class RegionKind { Rectangle, CenteredDisk, Annulus };

struct RegionSpec {
    RegionKind kind = RegionKind::CenteredDisk;
    Rect rect;
    double r0 = 0.0, r1 = 1.0;

    static RegionSpec rectangle(const Rect& r) {
        require(r.width() > 0.0 && r.height() > 0.0, "RegionSpec: degenerate rectangle");
        RegionSpec s;
        s.kind = RegionKind::Rectangle;
        s.rect = r;
        return s;
    }
    static RegionSpec centered_disk(double r) {
        require(r > 0.0, "RegionSpec: disk radius must be positive");
        RegionSpec s;
        s.kind = RegionKind::CenteredDisk;
        s.r1 = r;
        return s;
    }
    static RegionSpec annulus(double r0, double r1) {
        require(0.0 <= r0 && r0 < r1, "RegionSpec: need 0 <= r0 < r1");
        RegionSpec s;
        s.kind = RegionKind::Annulus;
        s.r0 = r0;
        s.r1 = r1;
        return s;
    }

    bool contains(cplx z) const {
        switch (kind) {
            case RegionKind::Rectangle: return rect.contains(z);
            case RegionKind::CenteredDisk: return std::abs(z) <= r1;
            case RegionKind::Annulus: return std::abs(z) >= r0 && std::abs(z) <= r1;
        }
        return false;
    }
    double max_abs() const {
        return kind == RegionKind::Rectangle ? rect.max_abs() : r1;
    }
    double lebesgue_area() const {
        switch (kind) {
            case RegionKind::Rectangle: return rect.area();
            case RegionKind::CenteredDisk: return pi * r1 * r1;
            case RegionKind::Annulus: return pi * (r1 * r1 - r0 * r0);
        }
        return 0.0;
    }
    std::string describe() const {
        char buf[96];
        switch (kind) {
            case RegionKind::Rectangle:
                std::snprintf(buf, sizeof buf, "rect[%g,%g]x[%g,%g]", rect.x0, rect.x1, rect.y0,
                              rect.y1);
                break;
            case RegionKind::CenteredDisk:
                std::snprintf(buf, sizeof buf, "disk r<=%g", r1);
                break;
            case RegionKind::Annulus:
                std::snprintf(buf, sizeof buf, "annulus %g<=r<=%g", r0, r1);
                break;
        }
        return buf;
    }
};

/// Closed-form first intensity rho_1 of the model's random zeros.
inline double zero_intensity(const GafModel& model, cplx z) {
    double r2 = std::norm(z);
    switch (model.kind) {
        case GafKind::Planar:
            return 1.0 / (pi * model.ell * model.ell);
        case GafKind::Hyperbolic:
            require(r2 < 1.0, "zero_intensity: point outside the disk");
            return (model.alpha + 1.0) / (pi * sqr(1.0 - r2));
        case GafKind::Spherical:
            return static_cast<double>(model.N) / (pi * sqr(1.0 + r2));
        case GafKind::PlanarHigher:
            if (model.N == 0) return 1.0 / pi;
            if (model.N == 1) return (1.0 / pi) * (1.0 + 1.0 / sqr(1.0 + r2));
            // general order through the Edelman-Kostlan stencil
            require(std::abs(z) > 1e-3, "zero_intensity: kernel degenerates at the origin");
            return edelman_kostlan_intensity(covariance_kernel(model), z, 1e-3);
    }
    return 0.0;
}

namespace detail {

/// integral of a radial density rho(|z|) over a disk/annulus
template <typename Rho>
double radial_integral(Rho&& rho, double r0, double r1) {
    auto rule = gauss_legendre(96, r0, r1);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.w[i] * rho(rule.x[i]) * 2.0 * pi * rule.x[i];
    return s;
}

/// tensor quadrature of a planar density over a rectangle
template <typename Rho>
double rect_integral(Rho&& rho, const Rect& r) {
    auto rx = gauss_legendre(48, r.x0, r.x1);
    auto ry = gauss_legendre(48, r.y0, r.y1);
    double s = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i)
        for (std::size_t j = 0; j < ry.size(); ++j)
            s += rx.w[i] * ry.w[j] * rho(cplx(rx.x[i], ry.x[j]));
    return s;
}

}  // namespace detail

/// Expected number of random zeros in the region (closed forms on the radial
/// regions, tensor quadrature of the intensity on rectangles).
inline double expected_count(const GafModel& model, const RegionSpec& region) {
    if (model.kind == GafKind::Hyperbolic)
        require(region.max_abs() < 1.0, "expected_count: region leaves the disk");
    auto disk_count = [&](double r) -> double {
        switch (model.kind) {
            case GafKind::Planar:
                return r * r / (model.ell * model.ell);
            case GafKind::Hyperbolic:
                return (model.alpha + 1.0) * r * r / (1.0 - r * r);
            case GafKind::Spherical:
                return static_cast<double>(model.N) * r * r / (1.0 + r * r);
            case GafKind::PlanarHigher:
                if (model.N == 0) return r * r;
                if (model.N == 1) return r * r + r * r / (1.0 + r * r);
                return detail::radial_integral(
                    [&](double s) { return zero_intensity(model, cplx(s, 0.0)); }, 1e-3, r);
        }
        return 0.0;
    };
    switch (region.kind) {
        case RegionKind::CenteredDisk:
            return disk_count(region.r1);
        case RegionKind::Annulus:
            return disk_count(region.r1) - disk_count(region.r0);
        case RegionKind::Rectangle:
            if (model.kind == GafKind::Planar)
                return region.rect.area() / (pi * model.ell * model.ell);
            return detail::rect_integral([&](cplx z) { return zero_intensity(model, z); },
                                         region.rect);
    }
    return 0.0;
}

/// Area of the region in the model's invariant metric (reporting column; the
/// determinantal normalizations always use Lebesgue measure).
inline double invariant_metric_area(const GafModel& model, const RegionSpec& region) {
    auto density = [&](double r2) -> double {
        switch (model.kind) {
            case GafKind::Hyperbolic: return 1.0 / sqr(1.0 - r2);
            case GafKind::Spherical: return 1.0 / sqr(1.0 + r2);
            default: return 1.0;
        }
    };
    auto disk_area = [&](double r) -> double {
        switch (model.kind) {
            case GafKind::Hyperbolic: return pi * r * r / (1.0 - r * r);
            case GafKind::Spherical: return pi * r * r / (1.0 + r * r);
            default: return pi * r * r;
        }
    };
    switch (region.kind) {
        case RegionKind::CenteredDisk: return disk_area(region.r1);
        case RegionKind::Annulus: return disk_area(region.r1) - disk_area(region.r0);
        case RegionKind::Rectangle:
            return detail::rect_integral([&](cplx z) { return density(std::norm(z)); },
                                         region.rect);
    }
    return 0.0;
}

struct IntensityBin {
    RegionSpec region;
    double metric_area = 0.0;
    double observed = 0.0;
    double predicted = 0.0;
    double stderr_mean = 0.0;
};

struct IntensityReport {
    std::vector<IntensityBin> bins;
    long trials = 0;
};

/// Deterministic per-trial zero sets of a truncated model sample over a
/// window, through the polynomial-root oracle (the subdivision locator
/// cross-checks it elsewhere).
inline std::function<ZeroSet(std::uint64_t)> gaf_zero_sampler(const GafModel& model,
                                                              const Rect& window, long truncation,
                                                              std::uint64_t seed) {
    long n = truncation;
    if (model.kind == GafKind::Spherical) {
        n = model.N;
    } else if (n <= 0) {
        n = minimal_truncation(model.dictionary(), window.max_abs(), 1e-8);
    }
    return [model, window, n, seed](std::uint64_t stream) {
        auto s = sample_gaf(model, n, seed, stream);
        return oracle_zeros(s, window);
    };
}

/// Monte Carlo mean counts per region with standard errors.
inline IntensityReport empirical_intensity(const std::function<ZeroSet(std::uint64_t)>& sampler,
                                           const GafModel& model,
                                           const std::vector<RegionSpec>& regions, long trials,
                                           int workers = 1) {
    require(trials >= 1, "empirical_intensity: need at least one trial");
    std::vector<std::vector<long>> counts(regions.size(), std::vector<long>(trials, 0));
    parallel_trials(trials, workers, [&](long t) {
        ZeroSet zs = sampler(static_cast<std::uint64_t>(t));
        for (std::size_t r = 0; r < regions.size(); ++r) {
            long c = 0;
            for (const auto& p : zs.points)
                if (regions[r].contains(p.point)) c += p.multiplicity;
            counts[r][static_cast<std::size_t>(t)] = c;
        }
    });
    IntensityReport rep;
    rep.trials = trials;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        double mean = 0.0, m2 = 0.0;
        for (long t = 0; t < trials; ++t) mean += static_cast<double>(counts[r][t]);
        mean /= static_cast<double>(trials);
        for (long t = 0; t < trials; ++t) m2 += sqr(static_cast<double>(counts[r][t]) - mean);
        double se = (trials > 1) ? std::sqrt(m2 / (static_cast<double>(trials) *
                                                   (static_cast<double>(trials) - 1.0)))
                                 : 0.0;
        rep.bins.push_back({regions[r], invariant_metric_area(model, regions[r]), mean,
                            expected_count(model, regions[r]), se});
    }
    return rep;
}

struct TwoPointCheck {
    double observed = 0.0;
    double predicted = 0.0;
    double stderr_obs = 0.0;
    long pair_events = 0;
};

/// Bergman kernel of the unit disk.
inline cplx bergman_kernel(cplx z, cplx w) {
    cplx d = cplx(1.0) - z * std::conj(w);
    return 1.0 / (pi * d * d);
}

/// rho_2 estimate for the alpha = 0 hyperbolic zeros: ordered pairs falling
/// in small disks around z and w, Lebesgue-normalized, against the
/// determinant of the Bergman kernel.
inline TwoPointCheck dpp_two_point_check(cplx z, cplx w, long trials, double binradius,
                                         long truncation, std::uint64_t seed, int workers = 1,
                                         double window_radius = 0.0) {
    require(trials >= 2, "dpp_two_point_check: need at least two trials");
    require(binradius > 0.0, "dpp_two_point_check: bin radius must be positive");
    require(std::abs(z - w) > 2.0 * binradius, "dpp_two_point_check: bins overlap");
    // truncation must be faithful out to the bin rims plus a small margin
    double h = window_radius > 0.0
                   ? window_radius
                   : std::max(std::abs(z), std::abs(w)) + 2.0 * binradius + 0.02;
    require(std::max(std::abs(z), std::abs(w)) + 2.0 * binradius <= h,
            "dpp_two_point_check: bins must sit well inside the faithful radius");
    require(h < 0.95, "dpp_two_point_check: bins too close to the disk boundary");

    GafModel model = GafModel::hyperbolic(0.0);
    long n = truncation > 0 ? truncation : minimal_truncation(model.dictionary(), h, 1e-8);

    // bin counts by the argument principle on the bin circles: exact integers
    // without any root finding.  A contour grazing a zero backs off to a
    // marginally smaller circle (area corrected per trial).
    std::vector<double> events(trials, 0.0);
    parallel_trials(trials, workers, [&](long t) {
        auto s = sample_gaf(model, n, seed, static_cast<std::uint64_t>(t));
        detail::PolyView F(s);
        auto count_in = [&](cplx c) -> std::pair<long, double> {
            double r = binradius;
            for (int attempt = 0; attempt < 6; ++attempt) {
                try {
                    double scale = std::abs(F(c +  r * 1.0)) + std::abs(F(c - r)) + 1e-300;
                    long cnt = detail::winding_circle(F, c, r, 1e-13 * scale,
                                                      F.deriv_bound(std::abs(c) + r));
                    return {cnt, r};
                } catch (const BoundaryZeroError&) {
                    r *= 0.985;
                }
            }
            throw AccuracyError("dpp_two_point_check: bin contour keeps grazing zeros");
        };
        auto [na, ra] = count_in(z);
        auto [nb, rb] = count_in(w);
        // normalize by the areas actually used this trial
        double corr = sqr(binradius * binradius / (ra * rb));
        events[static_cast<std::size_t>(t)] = static_cast<double>(na * nb) * corr;
    });

    double area = pi * binradius * binradius;
    double mean = 0.0, m2 = 0.0;
    long total = 0;
    for (long t = 0; t < trials; ++t) {
        mean += events[t];
        total += std::lround(events[t]);
    }
    mean /= static_cast<double>(trials);
    for (long t = 0; t < trials; ++t) m2 += sqr(events[t] - mean);
    double se_mean = std::sqrt(m2 / (static_cast<double>(trials) * (static_cast<double>(trials) - 1.0)));

    TwoPointCheck out;
    out.observed = mean / (area * area);
    out.stderr_obs = se_mean / (area * area);
    out.pair_events = total;
    cplx kzz = bergman_kernel(z, z), kww = bergman_kernel(w, w), kzw = bergman_kernel(z, w);
    out.predicted = (kzz * kww).real() - std::norm(kzw);
    return out;
}

struct InvarianceCheck {
    double mean_region = 0.0, se_region = 0.0;
    double mean_image = 0.0, se_image = 0.0;
    double se_diff = 0.0;  // matched-sample standard error of the difference
};

/// Mean zero counts in a region versus its isometric image, matched samples.
/// A zero lies in g(region) exactly when its preimage lies in the region.
inline InvarianceCheck invariance_test(const GafModel& model, const Isometry& g,
                                       const RegionSpec& region, long trials, long truncation,
                                       std::uint64_t seed, const Rect& window, int workers = 1) {
    require(trials >= 2, "invariance_test: need at least two trials");
    Isometry ginv = g.inverse();
    // the image region must stay inside the sampled window
    for (int i = 0; i < 64; ++i) {
        double t = static_cast<double>(i) / 64.0;
        cplx zb;
        switch (region.kind) {
            case RegionKind::Rectangle: {
                Curve c = Curve::rectangle(region.rect);
                zb = c.point_at(t);
                break;
            }
            default:
                zb = region.r1 * cis(2.0 * pi * t);
        }
        cplx img = apply_isometry(g, zb);
        require(!is_point_at_infinity(img) && window.contains(img),
                "invariance_test: image region leaves the sampling window");
    }

    auto sampler = gaf_zero_sampler(model, window, truncation, seed);
    std::vector<long> ca(trials, 0), cb(trials, 0);
    parallel_trials(trials, workers, [&](long t) {
        ZeroSet zs = sampler(static_cast<std::uint64_t>(t));
        long a = 0, b = 0;
        for (const auto& p : zs.points) {
            if (region.contains(p.point)) a += p.multiplicity;
            cplx pre = apply_isometry(ginv, p.point);
            if (!is_point_at_infinity(pre) && region.contains(pre)) b += p.multiplicity;
        }
        ca[static_cast<std::size_t>(t)] = a;
        cb[static_cast<std::size_t>(t)] = b;
    });

    InvarianceCheck out;
    double da = 0.0, db = 0.0, dd = 0.0;
    for (long t = 0; t < trials; ++t) {
        out.mean_region += static_cast<double>(ca[t]);
        out.mean_image += static_cast<double>(cb[t]);
    }
    out.mean_region /= static_cast<double>(trials);
    out.mean_image /= static_cast<double>(trials);
    for (long t = 0; t < trials; ++t) {
        da += sqr(static_cast<double>(ca[t]) - out.mean_region);
        db += sqr(static_cast<double>(cb[t]) - out.mean_image);
        dd += sqr(static_cast<double>(ca[t] - cb[t]) - (out.mean_region - out.mean_image));
    }
    double denom = static_cast<double>(trials) * (static_cast<double>(trials) - 1.0);
    out.se_region = std::sqrt(da / denom);
    out.se_image = std::sqrt(db / denom);
    out.se_diff = std::sqrt(dd / denom);
    return out;
}

/// Local extrema of the Bargmann transform of white noise: zeros of the
/// first higher-order series (the term-wise derivative of the order-zero
/// series), binned against the closed-form density.
inline IntensityReport extrema_experiment(long trials, long truncation,
                                          const std::vector<RegionSpec>& annuli,
                                          std::uint64_t seed, int workers = 1) {
    GafModel model = GafModel::planar_higher(1);
    double rmax = 0.0;
    for (const auto& a : annuli) {
        bool avoids_origin = (a.kind == RegionKind::Annulus && a.r0 > 0.0) ||
                             (a.kind == RegionKind::Rectangle && !a.rect.contains(cplx(0.0, 0.0)));
        require(avoids_origin,
                "extrema_experiment: regions must avoid the deterministic origin zero");
        rmax = std::max(rmax, a.max_abs());
    }
    Rect window{-rmax * 1.05 - 0.1, rmax * 1.05 + 0.1, -rmax * 1.05 - 0.1, rmax * 1.05 + 0.1};
    auto sampler = gaf_zero_sampler(model, window, truncation, seed);
    return empirical_intensity(sampler, model, annuli, trials, workers);
}

/// Zero set of the spherical STFT of white noise in the Krawtchouk basis:
/// the equality-in-law counterpart of direct spherical sampling.
inline ZeroSet krawtchouk_stft_zeros(int N, double p, std::uint64_t seed, std::uint64_t stream,
                                     const Rect& window) {
    auto fam = BasisFamily::krawtchouk(N, p);
    NoiseVector xi = sample_noise(N, seed, stream);
    // white noise in the Krawtchouk basis, materialized on the sites
    std::vector<cplx> values(static_cast<std::size_t>(N) + 1, 0.0);
    for (int x = 0; x <= N; ++x) {
        auto fk = eval_basis_all(fam, N, static_cast<double>(x));
        cplx v = 0.0;
        for (int k = 0; k <= N; ++k) v += xi.coeffs[static_cast<std::size_t>(k)] * fk[static_cast<std::size_t>(k)];
        values[static_cast<std::size_t>(x)] = v;
    }
    // ell_S^{(N)} of the noise: a degree-N polynomial in the spherical dictionary
    AnalyticSeries s;
    s.dict = DictionaryFamily::spherical(N);
    s.coeffs.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int x = 0; x <= N; ++x)
        s.coeffs[static_cast<std::size_t>(x)] = std::conj(values[static_cast<std::size_t>(x)]);
    s.provenance = Provenance::TransformedNoise;
    return oracle_zeros(s, window);
}

}  // namespace gafkit

#endif
