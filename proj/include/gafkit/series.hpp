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

#ifndef GAFKIT_SERIES_HPP
#define GAFKIT_SERIES_HPP

// Dictionary families Psi_k and the coefficient series built on them.  Every
// family here is a weighted monomial ladder: Psi_k(z) = w_k z^{k-k0} for
// k >= k0 and 0 below, so a series reduces to a plain power series once the
// weights are folded in.  The ladder ratios w_{k+1}/w_k are closed forms,
// which keeps evaluation stable for indices in the thousands.

#include "common.hpp"
#include "fft.hpp"

namespace gafkit {

enum class DictKind { WeylMonomial, HyperbolicMonomial, SphericalMonomial, ShiftedMonomial };
enum class SeriesDomain { Plane, Disk, ExtendedPlane };
enum class Provenance { DirectGafSample, TransformedNoise, UserSignal };

struct DictionaryFamily {
    DictKind kind = DictKind::WeylMonomial;
    int N = 0;           // index shift (Weyl/Shifted) or degree (Spherical)
    double alpha = 0.0;  // hyperbolic parameter, > -1

    static DictionaryFamily weyl(int N) {
        require(N >= 0, "WeylMonomial: N must be nonnegative");
        return {DictKind::WeylMonomial, N, 0.0};
    }
    static DictionaryFamily hyperbolic(double alpha) {
        require(alpha > -1.0, "HyperbolicMonomial: alpha must exceed -1");
        return {DictKind::HyperbolicMonomial, 0, alpha};
    }
    static DictionaryFamily spherical(int N) {
        require(N >= 1, "SphericalMonomial: N must be positive");
        return {DictKind::SphericalMonomial, N, 0.0};
    }
    static DictionaryFamily shifted(int N) {
        require(N >= 0, "ShiftedMonomial: N must be nonnegative");
        return {DictKind::ShiftedMonomial, N, 0.0};
    }

    SeriesDomain domain() const {
        switch (kind) {
            case DictKind::WeylMonomial: return SeriesDomain::Plane;
            case DictKind::SphericalMonomial: return SeriesDomain::ExtendedPlane;
            default: return SeriesDomain::Disk;
        }
    }
    /// first index with a nonzero dictionary function
    int first_index() const {
        return (kind == DictKind::WeylMonomial || kind == DictKind::ShiftedMonomial) ? N : 0;
    }
    /// one past the last nonzero index, or -1 when infinite
    long last_index() const { return kind == DictKind::SphericalMonomial ? N : -1; }
    bool active(long k) const {
        if (k < first_index()) return false;
        return last_index() < 0 || k <= last_index();
    }
    double log_weight(long k) const {
        switch (kind) {
            case DictKind::WeylMonomial:
                return 0.5 * std::lgamma(static_cast<double>(k) + 1.0) -
                       std::lgamma(static_cast<double>(k - N) + 1.0);
            case DictKind::HyperbolicMonomial:
                return 0.5 * (std::lgamma(static_cast<double>(k) + alpha + 1.0) -
                              std::lgamma(static_cast<double>(k) + 1.0));
            case DictKind::SphericalMonomial:
                return 0.5 * log_binomial(N, static_cast<double>(k));
            case DictKind::ShiftedMonomial:
                return 0.0;
        }
        return 0.0;
    }
    /// w_{k+1} / w_k between consecutive active indices
    double weight_ratio(long k) const {
        double kk = static_cast<double>(k);
        switch (kind) {
            case DictKind::WeylMonomial:
                return std::sqrt(kk + 1.0) / (kk + 1.0 - N);
            case DictKind::HyperbolicMonomial:
                return std::sqrt((kk + alpha + 1.0) / (kk + 1.0));
            case DictKind::SphericalMonomial:
                return std::sqrt((N - kk) / (kk + 1.0));
            case DictKind::ShiftedMonomial:
                return 1.0;
        }
        return 1.0;
    }
    bool operator==(const DictionaryFamily& o) const {
        return kind == o.kind && N == o.N && alpha == o.alpha;
    }
};

/// Closed-form Psi_k(z), factorial ratios via log-Gamma.
inline cplx psi(const DictionaryFamily& dict, long k, cplx z) {
    require(k >= 0, "psi: index must be nonnegative");
    if (!dict.active(k)) return 0.0;
    int m = static_cast<int>(k) - dict.first_index();
    if (m == 0) return std::exp(dict.log_weight(k));
    if (z == cplx(0.0, 0.0)) return 0.0;
    // |z|^m through logs so large powers cannot overflow before the weight acts
    double lr = dict.log_weight(k) + m * std::log(std::abs(z));
    return std::exp(lr) * cis(m * std::arg(z));
}

struct AnalyticSeries {
    DictionaryFamily dict;
    std::vector<cplx> coeffs;  // pairs with Psi_k: F(z) = sum_k coeffs[k] Psi_k(z)
    Provenance provenance = Provenance::UserSignal;
    // non-random factor prod (z - z0)^m carried next to the random series
    std::vector<std::pair<cplx, int>> deterministic_zeros;

    std::size_t size() const { return coeffs.size(); }
};

/// Plain power-series coefficients b_m with F(z) = sum_m b_m z^m
/// (weights folded in, leading zeros of the dictionary dropped).
inline std::vector<cplx> monomial_coeffs(const AnalyticSeries& s) {
    const int k0 = s.dict.first_index();
    if (static_cast<long>(s.coeffs.size()) <= k0) return {};
    std::vector<cplx> b(s.coeffs.size() - static_cast<std::size_t>(k0));
    double w = std::exp(s.dict.log_weight(k0));
    for (std::size_t m = 0; m < b.size(); ++m) {
        long k = k0 + static_cast<long>(m);
        if (!s.dict.active(k)) {
            b.resize(m);
            break;
        }
        b[m] = s.coeffs[static_cast<std::size_t>(k)] * w;
        w *= s.dict.weight_ratio(k);
    }
    return b;
}

inline cplx horner(const std::vector<cplx>& b, cplx z) {
    cplx p = 0.0;
    for (std::size_t i = b.size(); i-- > 0;) p = p * z + b[i];
    return p;
}

/// derivative coefficients of a plain power series
inline std::vector<cplx> derivative_coeffs(const std::vector<cplx>& b) {
    if (b.size() <= 1) return {};
    std::vector<cplx> d(b.size() - 1);
    for (std::size_t m = 1; m < b.size(); ++m) d[m - 1] = b[m] * static_cast<double>(m);
    return d;
}

inline cplx eval_series(const AnalyticSeries& s, cplx z) { return horner(monomial_coeffs(s), z); }

inline cplx eval_series_derivative(const AnalyticSeries& s, cplx z) {
    return horner(derivative_coeffs(monomial_coeffs(s)), z);
}

/// Series value times the deterministic factor prod (z - z0)^m.
inline cplx eval_with_deterministic(const AnalyticSeries& s, cplx z) {
    cplx v = eval_series(s, z);
    for (const auto& [z0, mult] : s.deterministic_zeros)
        for (int i = 0; i < mult; ++i) v *= (z - z0);
    return v;
}

/// Values at z = r e^{2 pi i j / ntheta}, j = 0..ntheta-1, via one DFT.
inline std::vector<cplx> eval_polar_fft(const AnalyticSeries& s, double r, std::size_t ntheta) {
    std::vector<cplx> b = monomial_coeffs(s);
    require(ntheta >= b.size(), "eval_polar_fft: ntheta below series length aliases the values");
    std::vector<cplx> scaled(ntheta, 0.0);
    double rm = 1.0;
    for (std::size_t m = 0; m < b.size(); ++m) {
        scaled[m] = b[m] * rm;
        rm *= r;
    }
    return dft(std::move(scaled), +1);
}

// ---------------------------------------------------------------------------
// C_K machinery: weighted sup sums sum_k (1+k^2) |Psi_k(z)|^2 over a window.
// For monomial ladders the sup over the window sits at the largest modulus,
// so a single radius carries the whole computation.  Tails are bracketed by a
// geometric comparison once the term ratio drops below 1/2.
// ---------------------------------------------------------------------------

struct CkReport {
    double radius = 0.0;     // window: closed disk |z| <= radius
    long n = -1;             // truncation the tail refers to
    double ck = 0.0;         // sup_z sum_k (1+k^2)|Psi_k(z)|^2  (upper bracket)
    double tail = 0.0;       // sup_z sum_{k>n} (1+k^2)|Psi_k(z)|^2  (upper bracket)
    double bracket = 0.0;    // width of the analytic remainder bracket
    long terms = 0;          // explicitly summed terms
};

namespace detail {

inline void check_window(const DictionaryFamily& dict, double radius) {
    require(radius >= 0.0, "window radius must be nonnegative");
    if (dict.domain() == SeriesDomain::Disk)
        require(radius < 1.0, "window touches the disk boundary");
}

/// valid upper bound on all term ratios t_{j+1}/t_j for j >= k
inline double ratio_bound(const DictionaryFamily& dict, long k, double r2) {
    double kk = static_cast<double>(k);
    double idx = (1.0 + sqr(kk + 1.0)) / (1.0 + kk * kk);  // decreasing in k
    switch (dict.kind) {
        case DictKind::WeylMonomial:
            return r2 * (kk + 1.0) / sqr(kk + 1.0 - dict.N) * idx;
        case DictKind::HyperbolicMonomial:
            return r2 * std::max(1.0, (kk + dict.alpha + 1.0) / (kk + 1.0)) * idx;
        case DictKind::ShiftedMonomial:
            return r2 * idx;
        default:
            return 0.0;  // finite family
    }
}

}  // namespace detail

/// C_K sup sum and the truncation tail beyond index n on |z| <= radius.
inline CkReport ck_and_tail(const DictionaryFamily& dict, double radius, long n) {
    detail::check_window(dict, radius);
    CkReport rep;
    rep.radius = radius;
    rep.n = n;
    const double r2 = radius * radius;
    const long k0 = dict.first_index();
    const long klast = dict.last_index();

    double term = (1.0 + sqr(static_cast<double>(k0))) * std::exp(2.0 * dict.log_weight(k0));
    double total = 0.0, tail = 0.0, bracket = 0.0;
    long k = k0;
    while (true) {
        total += term;
        if (k > n) tail += term;
        ++rep.terms;
        if (klast >= 0 && k == klast) break;  // finite family: exact
        double rho = detail::ratio_bound(dict, k, r2);
        // close only past n, so the reported tail is the genuine partial sum
        // beyond n plus a remainder negligible against it
        if (k >= n && rho < 0.995 &&
            term * rho / (1.0 - rho) < 1e-16 * (total + 1e-300) &&
            (tail == 0.0 || term * rho / (1.0 - rho) < 1e-12 * tail + 1e-300)) {
            double rem = term * rho / (1.0 - rho);
            total += rem;
            tail += rem;
            bracket = rem;
            break;
        }
        double wr = dict.weight_ratio(k);
        term *= wr * wr * r2 * (1.0 + sqr(static_cast<double>(k + 1))) /
                (1.0 + sqr(static_cast<double>(k)));
        ++k;
        if (rep.terms > 8000000) throw AccuracyError("ck_and_tail: sum did not close");
    }
    rep.ck = total;
    rep.tail = std::min(tail, total);
    rep.bracket = bracket;
    return rep;
}

inline CkReport ck_and_tail(const DictionaryFamily& dict, const Rect& window, long n) {
    return ck_and_tail(dict, window.max_abs(), n);
}

/// Smallest n with tail(n) <= threshold on the window.
inline long minimal_truncation(const DictionaryFamily& dict, double radius, double threshold) {
    detail::check_window(dict, radius);
    require(threshold > 0.0, "minimal_truncation: threshold must be positive");
    long lo = dict.first_index() - 1, hi = std::max<long>(lo + 1, 4);
    if (dict.last_index() >= 0) return dict.last_index();  // finite family
    while (ck_and_tail(dict, radius, hi).tail > threshold) {
        hi *= 2;
        if (hi > (1L << 24)) throw AccuracyError("minimal_truncation: threshold unreachable");
    }
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (ck_and_tail(dict, radius, mid).tail <= threshold)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Eq.-style sup bound: |F(z)| <= sqrt(C_K) * theta-norm of the coefficients.
inline double series_sup_bound(const AnalyticSeries& s, double radius) {
    double ck = ck_and_tail(s.dict, radius, -1).ck;
    double theta2 = 0.0;
    for (std::size_t k = 0; k < s.coeffs.size(); ++k)
        theta2 += std::norm(s.coeffs[k]) / (1.0 + sqr(static_cast<double>(k)));
    return std::sqrt(ck) * std::sqrt(theta2);
}

}  // namespace gafkit

#endif
