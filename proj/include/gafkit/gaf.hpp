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

#ifndef GAFKIT_GAF_HPP
#define GAFKIT_GAF_HPP

// The four Gaussian analytic function models: direct samplers, closed-form
// covariance kernels, domain isometries, the multiplier-times-precomposition
// transport identities, and the Edelman-Kostlan intensity.

#include <functional>

#include "common.hpp"
#include "noise.hpp"
#include "powerseries.hpp"
#include "series.hpp"

namespace gafkit {

enum class GafKind { Planar, PlanarHigher, Hyperbolic, Spherical };

struct GafModel {
    GafKind kind = GafKind::Planar;
    double ell = 1.0;    // planar scale, > 0
    int N = 0;           // planar-higher order / spherical degree
    double alpha = 0.0;  // hyperbolic parameter, > -1

    static GafModel planar(double ell = 1.0) {
        require(ell > 0.0, "planar GAF: ell must be positive");
        GafModel m{GafKind::Planar};
        m.ell = ell;
        return m;
    }
    static GafModel planar_higher(int N) {
        require(N >= 0, "planar-higher GAF: N must be nonnegative");
        GafModel m{GafKind::PlanarHigher};
        m.N = N;
        return m;
    }
    static GafModel hyperbolic(double alpha) {
        require(alpha > -1.0, "hyperbolic GAF: alpha must exceed -1");
        GafModel m{GafKind::Hyperbolic};
        m.alpha = alpha;
        return m;
    }
    static GafModel spherical(int N) {
        require(N >= 1, "spherical GAF: N must be positive");
        GafModel m{GafKind::Spherical};
        m.N = N;
        return m;
    }

    SeriesDomain domain() const {
        switch (kind) {
            case GafKind::Hyperbolic: return SeriesDomain::Disk;
            case GafKind::Spherical: return SeriesDomain::ExtendedPlane;
            default: return SeriesDomain::Plane;
        }
    }
    DictionaryFamily dictionary() const {
        switch (kind) {
            case GafKind::Planar: return DictionaryFamily::weyl(0);
            case GafKind::PlanarHigher: return DictionaryFamily::weyl(N);
            case GafKind::Hyperbolic: return DictionaryFamily::hyperbolic(alpha);
            case GafKind::Spherical: return DictionaryFamily::spherical(N);
        }
        return DictionaryFamily::weyl(0);
    }
    bool in_domain(cplx z) const {
        return kind != GafKind::Hyperbolic || std::abs(z) < 1.0;
    }
};

/// Truncated sample of the model.  The planar-higher sample stores the random
/// factor of the series; its non-random zero of order N at the origin rides
/// along in deterministic_zeros so statistics can exclude it.
inline AnalyticSeries sample_gaf(const GafModel& model, long truncation, std::uint64_t seed,
                                 std::uint64_t stream) {
    require(truncation >= 0, "sample_gaf: truncation must be nonnegative");
    AnalyticSeries s;
    s.dict = model.dictionary();
    s.provenance = Provenance::DirectGafSample;
    long n = truncation;
    if (model.kind == GafKind::Spherical) n = model.N;
    s.coeffs.resize(static_cast<std::size_t>(n) + 1, 0.0);
    for (long k = 0; k <= n; ++k) {
        if (!s.dict.active(k)) continue;  // leading zeros of the shifted family
        cplx xi = complex_gaussian(seed, stream, static_cast<std::uint64_t>(k));
        if (model.kind == GafKind::Planar)
            s.coeffs[static_cast<std::size_t>(k)] = xi * std::pow(model.ell, -static_cast<double>(k));
        else
            s.coeffs[static_cast<std::size_t>(k)] = xi;
    }
    if (model.kind == GafKind::PlanarHigher && model.N >= 1)
        s.deterministic_zeros.push_back({cplx(0.0, 0.0), model.N});
    return s;
}

/// Laguerre polynomial L_N^{(0)} at a complex argument.
inline cplx laguerre0(int N, cplx x) {
    cplx lm1 = 0.0, l0 = 1.0;
    for (int k = 0; k < N; ++k) {
        cplx ln = ((2.0 * k + 1.0 - x) * l0 - static_cast<double>(k) * lm1) / (k + 1.0);
        lm1 = l0;
        l0 = ln;
    }
    return l0;
}

/// Closed-form covariance E[GAF(z) conj(GAF(w))].
inline cplx covariance(const GafModel& model, cplx z, cplx w) {
    cplx zw = z * std::conj(w);
    switch (model.kind) {
        case GafKind::Planar:
            return std::exp(zw / (model.ell * model.ell));
        case GafKind::PlanarHigher: {
            cplx v = std::exp(std::lgamma(model.N + 1.0)) * std::pow(zw, model.N) * std::exp(zw);
            return v * laguerre0(model.N, -zw);
        }
        case GafKind::Hyperbolic:
            require(std::abs(z) < 1.0 && std::abs(w) < 1.0,
                    "hyperbolic covariance: points must lie inside the disk");
            // the binomial series sum_k Gamma(k+a+1)/k! t^k carries a
            // Gamma(a+1) next to (1-t)^{-(a+1)}; it is invisible at a = 0
            return std::exp(std::lgamma(model.alpha + 1.0)) *
                   cpow_real(cplx(1.0) - zw, -(model.alpha + 1.0));
        case GafKind::Spherical:
            return std::pow(cplx(1.0) + zw, model.N);
    }
    return 0.0;
}

/// Sample value of the GAF itself (deterministic factor included).
inline cplx eval_gaf(const AnalyticSeries& s, cplx z) { return eval_with_deterministic(s, z); }

/// Monte Carlo estimate of E[GAF(z) conj(GAF(w))] over independent streams.
inline cplx empirical_covariance(const GafModel& model, cplx z, cplx w, long trials,
                                 long truncation, std::uint64_t seed) {
    require(trials >= 2, "empirical_covariance: need at least two trials");
    cplx acc = 0.0;
    for (long t = 0; t < trials; ++t) {
        AnalyticSeries s = sample_gaf(model, truncation, seed, static_cast<std::uint64_t>(t));
        acc += eval_gaf(s, z) * std::conj(eval_gaf(s, w));
    }
    return acc / static_cast<double>(trials);
}

// ---------------------------------------------------------------------------
// Isometries of the plane, the hyperbolic disk, and the sphere.
// ---------------------------------------------------------------------------

enum class IsomDomain { Plane, Disk, Sphere };

inline cplx point_at_infinity() {
    return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}
inline bool is_point_at_infinity(cplx z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

struct Isometry {
    IsomDomain dom = IsomDomain::Plane;
    cplx a{1.0, 0.0}, b{0.0, 0.0};

    /// z -> a z + b with |a| = 1
    static Isometry plane(cplx alpha, cplx beta) {
        require(std::abs(std::abs(alpha) - 1.0) < 1e-12, "plane isometry: |alpha| must be 1");
        return {IsomDomain::Plane, alpha, beta};
    }
    /// z -> (a z + b)/(conj(b) z + conj(a)) with |a|^2 - |b|^2 = 1
    static Isometry disk(cplx a, cplx b) {
        require(std::abs(std::norm(a) - std::norm(b) - 1.0) < 1e-10,
                "disk isometry: need |a|^2 - |b|^2 = 1");
        return {IsomDomain::Disk, a, b};
    }
    /// z -> (a z + b)/(-conj(b) z + conj(a)) with |a|^2 + |b|^2 = 1
    static Isometry sphere(cplx a, cplx b) {
        require(std::abs(std::norm(a) + std::norm(b) - 1.0) < 1e-10,
                "sphere isometry: need |a|^2 + |b|^2 = 1");
        return {IsomDomain::Sphere, a, b};
    }

    Isometry inverse() const {
        switch (dom) {
            case IsomDomain::Plane: return {dom, std::conj(a), -b * std::conj(a)};
            case IsomDomain::Disk: return {dom, std::conj(a), -b};
            case IsomDomain::Sphere: return {dom, std::conj(a), -b};
        }
        return *this;
    }
    /// (*this) after g: z -> (*this)(g(z))
    Isometry compose(const Isometry& g) const {
        require(dom == g.dom, "compose: isometries act on different domains");
        switch (dom) {
            case IsomDomain::Plane: return {dom, a * g.a, a * g.b + b};
            case IsomDomain::Disk: return {dom, a * g.a + b * std::conj(g.b), a * g.b + b * std::conj(g.a)};
            case IsomDomain::Sphere: return {dom, a * g.a - b * std::conj(g.b), a * g.b + b * std::conj(g.a)};
        }
        return *this;
    }
};

inline cplx apply_isometry(const Isometry& g, cplx z) {
    switch (g.dom) {
        case IsomDomain::Plane:
            if (is_point_at_infinity(z)) return point_at_infinity();
            return g.a * z + g.b;
        case IsomDomain::Disk: {
            require(!is_point_at_infinity(z) && std::abs(z) <= 1.0 + 1e-12,
                    "disk isometry: point outside the closed disk");
            return (g.a * z + g.b) / (std::conj(g.b) * z + std::conj(g.a));
        }
        case IsomDomain::Sphere: {
            if (is_point_at_infinity(z)) {
                if (std::abs(g.b) == 0.0) return point_at_infinity();
                return g.a / (-std::conj(g.b));
            }
            cplx den = -std::conj(g.b) * z + std::conj(g.a);
            if (std::abs(den) == 0.0) return point_at_infinity();
            return (g.a * z + g.b) / den;
        }
    }
    return z;
}

// ---------------------------------------------------------------------------
// Invariance transport: multiplier(z) * GAF(T z) has the law of GAF(z).
// The multipliers below are the kernel-preserving ones:
//     multiplier(z) * kernel(Tz, Tw) * conj(multiplier(w)) == kernel(z, w).
// ---------------------------------------------------------------------------

enum class TransportKind { CharlierShift, MeixnerMap, KrawtchoukMap };

struct TransportMap {
    TransportKind kind = TransportKind::CharlierShift;
    double a = 1.0;      // Charlier
    double alpha = 0.0;  // Meixner
    double c = 0.5;      // Meixner
    int N = 1;           // Krawtchouk
    double p = 0.5;      // Krawtchouk

    static TransportMap charlier_shift(double a) {
        require(a > 0.0, "CharlierShift: a must be positive");
        TransportMap t{TransportKind::CharlierShift};
        t.a = a;
        return t;
    }
    static TransportMap meixner_map(double alpha, double c) {
        require(alpha > -1.0 && c > 0.0 && c < 1.0, "MeixnerMap: need alpha > -1, c in (0,1)");
        TransportMap t{TransportKind::MeixnerMap};
        t.alpha = alpha;
        t.c = c;
        return t;
    }
    static TransportMap krawtchouk_map(int N, double p) {
        require(N >= 1 && p > 0.0 && p < 1.0, "KrawtchoukMap: need N >= 1, p in (0,1)");
        TransportMap t{TransportKind::KrawtchoukMap};
        t.N = N;
        t.p = p;
        return t;
    }

    GafModel target() const {
        switch (kind) {
            case TransportKind::CharlierShift: return GafModel::planar(1.0);
            case TransportKind::MeixnerMap: return GafModel::hyperbolic(alpha);
            case TransportKind::KrawtchoukMap: return GafModel::spherical(N);
        }
        return GafModel::planar(1.0);
    }
    double q() const { return std::sqrt((1.0 - p) / p); }

    cplx map(cplx z) const {
        switch (kind) {
            case TransportKind::CharlierShift: return std::sqrt(a) - z;
            case TransportKind::MeixnerMap: {
                double sc = std::sqrt(c);
                return (sc - z) / (cplx(1.0) - sc * z);
            }
            case TransportKind::KrawtchoukMap: return (cplx(1.0) - q() * z) / (q() + z);
        }
        return z;
    }
    cplx multiplier(cplx z) const {
        switch (kind) {
            case TransportKind::CharlierShift:
                return std::exp(-0.5 * a + std::sqrt(a) * z);
            case TransportKind::MeixnerMap: {
                double sc = std::sqrt(c);
                return std::pow(1.0 - c, 0.5 * (alpha + 1.0)) *
                       cpow_real(cplx(1.0) - sc * z, -(alpha + 1.0));
            }
            case TransportKind::KrawtchoukMap:
                return std::pow((q() + z) / std::sqrt(1.0 + q() * q()), N);
        }
        return 1.0;
    }
};

/// multiplier(z) * sample(T z), re-expanded in the model's own dictionary.
/// Exact polynomial algebra for the spherical map.  The planar and
/// hyperbolic maps re-expand by sampling the composed function on a circle
/// and reading coefficients off one discrete Fourier transform: the composed
/// function is stable to evaluate pointwise, whereas accumulating its Taylor
/// terms k by k cancels catastrophically once the per-term pole order grows.
inline AnalyticSeries invariance_transport(const GafModel& model, const TransportMap& t,
                                           const AnalyticSeries& sample, double window_radius = 0.0) {
    // the map must aim at the sampled model
    switch (t.kind) {
        case TransportKind::CharlierShift:
            require(model.kind == GafKind::Planar && model.ell == 1.0,
                    "CharlierShift transports the planar GAF with ell = 1");
            break;
        case TransportKind::MeixnerMap:
            require(model.kind == GafKind::Hyperbolic && model.alpha == t.alpha,
                    "MeixnerMap transports the hyperbolic GAF of matching alpha");
            break;
        case TransportKind::KrawtchoukMap:
            require(model.kind == GafKind::Spherical && model.N == t.N,
                    "KrawtchoukMap transports the spherical GAF of matching N");
            break;
    }
    require(sample.dict == model.dictionary(), "invariance_transport: sample/model dictionary mismatch");

    AnalyticSeries out;
    out.dict = sample.dict;
    out.provenance = Provenance::TransformedNoise;

    if (t.kind == TransportKind::KrawtchoukMap) {
        // (q+z)^N/(1+q^2)^{N/2} * sum_k c_k sqrt(C(N,k)) ((1-qz)/(q+z))^k: a degree-N polynomial
        double q = t.q();
        pseries::Series acc;
        for (long k = 0; k < static_cast<long>(sample.coeffs.size()); ++k) {
            cplx ck = sample.coeffs[static_cast<std::size_t>(k)];
            if (ck == cplx(0.0, 0.0)) continue;
            double w = std::exp(sample.dict.log_weight(k));
            auto up = pseries::linear_power(cplx(1.0), cplx(-q), static_cast<int>(k));
            auto down = pseries::linear_power(cplx(q), cplx(1.0), t.N - static_cast<int>(k));
            auto term = pseries::truncated_product(up, down, static_cast<std::size_t>(t.N) + 1);
            pseries::add_into(acc, pseries::scaled(term, ck * w));
        }
        double norm = std::pow(1.0 + q * q, -0.5 * t.N);
        acc = pseries::scaled(acc, cplx(norm));
        out.coeffs.assign(static_cast<std::size_t>(t.N) + 1, 0.0);
        for (long k = 0; k <= t.N && k < static_cast<long>(acc.size()); ++k)
            out.coeffs[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)] /
                                                      std::exp(out.dict.log_weight(k));
        return out;
    }

    const double radius = window_radius > 0.0
                              ? window_radius
                              : (t.kind == TransportKind::CharlierShift ? 2.0 : 0.9);
    if (t.kind == TransportKind::MeixnerMap)
        require(radius < 1.0, "MeixnerMap: re-expansion window must sit inside the disk");

    auto composed = [&](cplx z) { return t.multiplier(z) * eval_series(sample, t.map(z)); };

    std::size_t m = 1;
    while (m < 4 * (sample.coeffs.size() + 64)) m <<= 1;
    for (int grow = 0; grow < 6; ++grow) {
        std::vector<cplx> vals(m);
        double fmax = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            vals[i] = composed(radius * cis(2.0 * pi * static_cast<double>(i) / static_cast<double>(m)));
            fmax = std::max(fmax, std::abs(vals[i]));
        }
        std::vector<cplx> hat = dft(std::move(vals), -1);
        // plain coefficients b_j = hat_j / (m r^j); keep them while the
        // circle values still see them, drop the dead tail
        pseries::Series b;
        double rj = 1.0;
        std::size_t live = 0;
        for (std::size_t j = 0; j < m / 2; ++j) {
            cplx bj = hat[j] / (static_cast<double>(m) * rj);
            b.push_back(bj);
            if (std::abs(bj) * rj > 1e-13 * (fmax + 1e-300)) live = j + 1;
            rj *= radius;
        }
        b.resize(std::max<std::size_t>(live, 1));
        // fidelity check at off-grid points; aliasing shows up here
        bool ok = true;
        for (int probe = 0; probe < 5 && ok; ++probe) {
            cplx z = radius * (0.35 + 0.12 * probe) * cis(0.7 + 1.3 * probe);
            cplx want = composed(z);
            cplx got = 0.0, zp = 1.0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                got += b[j] * zp;
                zp *= z;
            }
            ok = std::abs(got - want) <= 1e-10 * (fmax + std::abs(want));
        }
        if (ok) {
            out.coeffs.assign(b.size(), 0.0);
            for (long k = 0; k < static_cast<long>(b.size()); ++k)
                out.coeffs[static_cast<std::size_t>(k)] =
                    b[static_cast<std::size_t>(k)] / std::exp(out.dict.log_weight(k));
            return out;
        }
        m <<= 1;
    }
    throw AccuracyError("invariance_transport: re-expansion did not close; a larger truncation (beyond " +
                        std::to_string(m / 2) + " coefficients) is required");
}

/// First intensity by the Edelman-Kostlan formula: (1/4pi) Laplacian of
/// log kernel(z,z), five-point stencil, second order in h.
inline double edelman_kostlan_intensity(const std::function<cplx(cplx, cplx)>& kernel, cplx z,
                                        double h = 1e-3) {
    require(h > 0.0, "edelman_kostlan_intensity: h must be positive");
    auto logk = [&](cplx u) {
        cplx v = kernel(u, u);
        double re = v.real();
        if (!(re > 0.0) || !std::isfinite(re))
            throw DomainError("edelman_kostlan_intensity: kernel not positive at the evaluation point");
        return std::log(re);
    };
    double lap = (logk(z + h) + logk(z - h) + logk(z + cplx(0.0, h)) + logk(z - cplx(0.0, h)) -
                  4.0 * logk(z)) /
                 (h * h);
    return lap / (4.0 * pi);
}

inline std::function<cplx(cplx, cplx)> covariance_kernel(const GafModel& model) {
    return [model](cplx z, cplx w) { return covariance(model, z, w); };
}

}  // namespace gafkit

#endif
