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

#ifndef GAFKIT_ORTHOPOLY_HPP
#define GAFKIT_ORTHOPOLY_HPP

// Orthonormal basis families: Hermite, Charlier, Laguerre (spectral side),
// Meixner and Krawtchouk functions, plus brute-force generating-function
// evaluations used as oracles against the closed forms.
//
// The recurrences below propagate the *normalized* functions directly, with
// the weight and normalization constants folded into the starting value and
// the recurrence coefficients.  Raw polynomials H_k and normalizers 2^k k!
// are never formed separately, so indices in the thousands stay finite.

#include <functional>

#include "common.hpp"
#include "quadrature.hpp"

namespace gafkit {

enum class BasisKind { Hermite, Charlier, Laguerre, Meixner, Krawtchouk, Fourier };

struct BasisFamily {
    BasisKind kind = BasisKind::Hermite;
    double a = 1.0;         // Charlier: Poisson parameter, a > 0
    double two_beta = 0.0;  // Laguerre: parameter 2*beta > -1
    double alpha = 0.0;     // Meixner: alpha > -1
    double c = 0.5;         // Meixner: 0 < c < 1
    int N = 0;              // Krawtchouk: number of sites minus one
    double p = 0.5;         // Krawtchouk: 0 < p < 1

    static BasisFamily hermite() { return {BasisKind::Hermite}; }
    static BasisFamily charlier(double a) {
        require(a > 0.0, "Charlier: a must be positive");
        BasisFamily f{BasisKind::Charlier};
        f.a = a;
        return f;
    }
    static BasisFamily laguerre(double two_beta) {
        require(two_beta > -1.0, "Laguerre: 2*beta must exceed -1");
        BasisFamily f{BasisKind::Laguerre};
        f.two_beta = two_beta;
        return f;
    }
    static BasisFamily meixner(double alpha, double c) {
        require(alpha > -1.0, "Meixner: alpha must exceed -1");
        require(c > 0.0 && c < 1.0, "Meixner: c must lie in (0,1)");
        BasisFamily f{BasisKind::Meixner};
        f.alpha = alpha;
        f.c = c;
        return f;
    }
    static BasisFamily krawtchouk(int N, double p) {
        require(N >= 0, "Krawtchouk: N must be nonnegative");
        require(p > 0.0 && p < 1.0, "Krawtchouk: p must lie in (0,1)");
        BasisFamily f{BasisKind::Krawtchouk};
        f.N = N;
        f.p = p;
        return f;
    }
    static BasisFamily fourier() { return {BasisKind::Fourier}; }

    bool discrete() const {
        return kind == BasisKind::Charlier || kind == BasisKind::Meixner ||
               kind == BasisKind::Krawtchouk;
    }
};

namespace detail {

inline void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw NumericError(std::string(what) + ": value left the representable range");
}

/// f_0(x) of the family (normalization and weight included).
inline double basis_start(const BasisFamily& fam, double x) {
    switch (fam.kind) {
        case BasisKind::Hermite:
            return std::pow(pi, -0.25) * std::exp(-0.5 * x * x);
        case BasisKind::Charlier: {
            // e^{-a/2} a^{x/2} / sqrt(x!)
            double lg = -0.5 * fam.a + 0.5 * x * std::log(fam.a) - 0.5 * std::lgamma(x + 1.0);
            return std::exp(lg);
        }
        case BasisKind::Laguerre: {
            double beta = 0.5 * fam.two_beta;
            double lg = -0.5 * std::lgamma(fam.two_beta + 1.0) - 0.5 * x;
            return (x == 0.0 && beta == 0.0) ? std::exp(lg)
                                             : std::pow(x, beta) * std::exp(lg);
        }
        case BasisKind::Meixner: {
            double beta = fam.alpha + 1.0;
            double lg = 0.5 * (beta * std::log1p(-fam.c) + std::lgamma(x + beta) +
                               x * std::log(fam.c) - std::lgamma(x + 1.0) - std::lgamma(beta));
            return std::exp(lg);
        }
        case BasisKind::Krawtchouk: {
            double q = std::sqrt((1.0 - fam.p) / fam.p);
            double lg = 0.5 * log_binomial(fam.N, x) + (fam.N - x) * std::log(q) -
                        0.5 * fam.N * std::log1p(q * q);
            return std::exp(lg);
        }
        default:
            throw DomainError("Fourier basis is complex-valued; use fourier_basis()");
    }
}

/// One step of the normalized three-term recurrence:
/// f_{k+1} = A_k(x) f_k - B_k f_{k-1}.
inline void recurrence_coeffs(const BasisFamily& fam, int k, double x, double& A, double& B) {
    double kk = static_cast<double>(k);
    switch (fam.kind) {
        case BasisKind::Hermite:
            A = x * std::sqrt(2.0 / (kk + 1.0));
            B = std::sqrt(kk / (kk + 1.0));
            return;
        case BasisKind::Charlier:
            A = (kk + fam.a - x) / std::sqrt(fam.a * (kk + 1.0));
            B = std::sqrt(kk / (kk + 1.0));
            return;
        case BasisKind::Laguerre: {
            double al = fam.two_beta;
            A = (2.0 * kk + al + 1.0 - x) / std::sqrt((kk + 1.0) * (kk + 1.0 + al));
            B = std::sqrt(kk * (kk + al) / ((kk + 1.0) * (kk + 1.0 + al)));
            return;
        }
        case BasisKind::Meixner: {
            double beta = fam.alpha + 1.0;
            A = ((fam.c - 1.0) * x + kk + (kk + beta) * fam.c) /
                std::sqrt(fam.c * (kk + 1.0) * (kk + beta));
            B = std::sqrt(kk * (kk + beta - 1.0) / ((kk + 1.0) * (kk + beta)));
            return;
        }
        case BasisKind::Krawtchouk: {
            double q2 = (1.0 - fam.p) / fam.p;
            double q = std::sqrt(q2);
            double Nk = static_cast<double>(fam.N) - kk;
            A = (Nk + kk * q2 - x * (1.0 + q2)) / (q * std::sqrt((kk + 1.0) * Nk));
            B = std::sqrt(kk * (Nk + 1.0) / ((kk + 1.0) * Nk));
            return;
        }
        default:
            throw DomainError("Fourier basis has no real recurrence");
    }
}

inline void check_point(const BasisFamily& fam, double x) {
    switch (fam.kind) {
        case BasisKind::Charlier:
        case BasisKind::Meixner:
            require(x >= 0.0 && x == std::floor(x), "discrete basis: x must be a nonnegative integer");
            return;
        case BasisKind::Krawtchouk:
            require(x >= 0.0 && x == std::floor(x) && x <= fam.N,
                    "Krawtchouk: x must be an integer in 0..N");
            return;
        case BasisKind::Laguerre:
            require(x >= 0.0, "Laguerre spectral functions live on R_+");
            return;
        default:
            return;
    }
}

}  // namespace detail

namespace detail {

/// Ladder up the normalized recurrence: f_0(x), ..., f_kmax(x).
inline void ladder(const BasisFamily& fam, int kmax, double x, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(kmax) + 1);
    double fm1 = 0.0, f0 = basis_start(fam, x);
    out[0] = f0;
    for (int k = 0; k < kmax; ++k) {
        double A, B;
        recurrence_coeffs(fam, k, x, A, B);
        double fnext = A * f0 - B * fm1;
        check_finite(fnext, "eval_basis");
        fm1 = f0;
        f0 = fnext;
        out[static_cast<std::size_t>(k) + 1] = fnext;
    }
}

/// f_k(x) with the ladder run index-below-argument, the stable direction.
/// The discrete families are self-dual, f_k(x) = f_x(k), which turns the
/// unstable far-tail legs (k >> x) into stable ones.
inline double eval_one(const BasisFamily& fam, int k, double x) {
    int idx = k;
    double arg = x;
    if (fam.discrete() && x == std::floor(x) && k > static_cast<int>(x)) {
        idx = static_cast<int>(x);
        arg = static_cast<double>(k);
    }
    double fm1 = 0.0, f0 = basis_start(fam, arg);
    for (int j = 0; j < idx; ++j) {
        double A, B;
        recurrence_coeffs(fam, j, arg, A, B);
        double fnext = A * f0 - B * fm1;
        check_finite(fnext, "eval_basis");
        fm1 = f0;
        f0 = fnext;
    }
    return f0;
}

}  // namespace detail

/// Values f_0(x) .. f_kmax(x); discrete families switch to the dual ladder
/// for indices beyond x.
inline std::vector<double> eval_basis_all(const BasisFamily& fam, int kmax, double x) {
    require(kmax >= 0, "eval_basis_all: kmax must be nonnegative");
    detail::check_point(fam, x);
    if (fam.kind == BasisKind::Krawtchouk)
        require(kmax <= fam.N, "Krawtchouk: k must not exceed N");
    if (!fam.discrete()) {
        std::vector<double> f;
        detail::ladder(fam, kmax, x, f);
        return f;
    }
    int xi = static_cast<int>(x);
    int direct_max = std::min(kmax, xi);
    std::vector<double> f;
    detail::ladder(fam, direct_max, x, f);
    f.resize(static_cast<std::size_t>(kmax) + 1);
    for (int k = direct_max + 1; k <= kmax; ++k)
        f[static_cast<std::size_t>(k)] = detail::eval_one(fam, k, x);
    return f;
}

/// The orthonormal basis function f_k(x); for Laguerre this is the
/// spectral-side function on R_+.
inline double eval_basis(const BasisFamily& fam, int k, double x) {
    require(k >= 0, "eval_basis: k must be nonnegative");
    detail::check_point(fam, x);
    if (fam.kind == BasisKind::Krawtchouk)
        require(k <= fam.N, "Krawtchouk: k must not exceed N");
    return detail::eval_one(fam, k, x);
}

/// Fourier basis e^{i k theta} / sqrt(2 pi), signed index.
inline cplx fourier_basis(long k, double theta) {
    return cis(static_cast<double>(k) * theta) / std::sqrt(2.0 * pi);
}

/// Gram matrix of inner products <f_j, f_k> for j,k = 0..kmax, by exact
/// summation (discrete families) or Gauss quadrature (continuous families).
inline std::vector<std::vector<double>> gram_matrix(const BasisFamily& fam, int kmax) {
    require(kmax >= 0, "gram_matrix: kmax must be nonnegative");
    const std::size_t m = static_cast<std::size_t>(kmax) + 1;
    std::vector<std::vector<double>> G(m, std::vector<double>(m, 0.0));

    auto accumulate_at = [&](const std::vector<double>& f, double weight) {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = j; k < m; ++k) G[j][k] += weight * f[j] * f[k];
    };
    auto symmetrize = [&]() {
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < j; ++k) G[j][k] = G[k][j];
    };

    switch (fam.kind) {
        case BasisKind::Krawtchouk: {
            require(kmax <= fam.N, "Krawtchouk: kmax must not exceed N");
            for (int x = 0; x <= fam.N; ++x)
                accumulate_at(eval_basis_all(fam, kmax, x), 1.0);
            symmetrize();
            return G;
        }
        case BasisKind::Charlier:
        case BasisKind::Meixner: {
            // summand envelope stop: max_k f_k(x)^2 below 1e-18 for 10 consecutive x;
            // the envelope tail is dominated by the geometric/Poissonian weight decay
            int quiet = 0;
            double peak = 1.0;
            for (int x = 0; x < 1000000; ++x) {
                auto f = eval_basis_all(fam, kmax, x);
                double env = 0.0;
                for (double v : f) env = std::max(env, v * v);
                accumulate_at(f, 1.0);
                peak = std::max(peak, env);
                quiet = (env < 1e-18 * peak) ? quiet + 1 : 0;
                if (quiet >= 10) break;
            }
            symmetrize();
            return G;
        }
        case BasisKind::Hermite:
        case BasisKind::Laguerre: {
            // Gauss rule on the bare normalized polynomials; exact for the
            // polynomial part, so doubling the nodes is a convergence check
            auto compute = [&](std::size_t nodes) {
                std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
                QuadRule rule = (fam.kind == BasisKind::Hermite)
                                    ? gauss_hermite(nodes)
                                    : gauss_laguerre(nodes, fam.two_beta);
                for (std::size_t i = 0; i < rule.size(); ++i) {
                    double x = rule.x[i];
                    // strip the exponential part carried by f_k; the rule weight has it
                    std::vector<double> h(m);
                    double hm1 = 0.0,
                           h0 = (fam.kind == BasisKind::Hermite)
                                    ? std::pow(pi, -0.25)
                                    : std::exp(-0.5 * std::lgamma(fam.two_beta + 1.0));
                    h[0] = h0;
                    for (int k = 0; k < kmax; ++k) {
                        double Ak, Bk;
                        detail::recurrence_coeffs(fam, k, x, Ak, Bk);
                        double hn = Ak * h0 - Bk * hm1;
                        hm1 = h0;
                        h0 = hn;
                        h[static_cast<std::size_t>(k) + 1] = hn;
                    }
                    for (std::size_t j = 0; j < m; ++j)
                        for (std::size_t k = j; k < m; ++k) A[j][k] += rule.w[i] * h[j] * h[k];
                }
                return A;
            };
            std::size_t nodes = static_cast<std::size_t>(2 * kmax + 8);
            auto A1 = compute(nodes);
            auto A2 = compute(2 * nodes);
            double diff = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = j; k < m; ++k) diff = std::max(diff, std::abs(A1[j][k] - A2[j][k]));
            if (diff > 1e-10)
                throw AccuracyError("gram_matrix: quadrature did not converge under node doubling");
            G = std::move(A2);
            symmetrize();
            return G;
        }
        case BasisKind::Fourier: {
            // discrete orthogonality of the trapezoid rule is exact here
            for (std::size_t j = 0; j < m; ++j) G[j][j] = 1.0;
            return G;
        }
    }
    return G;
}

namespace detail {

/// Terminating hypergeometric sums for the discrete classical polynomials at
/// integer sites; exact and stable where the degree recurrences excite a
/// geometrically growing parasite.
inline double charlier_poly(int k, int x, double a) {
    double s = 1.0, t = 1.0;
    int jmax = std::min(k, x);
    for (int j = 1; j <= jmax; ++j) {
        t *= static_cast<double>(-(k - j + 1)) * static_cast<double>(-(x - j + 1)) *
             (-1.0 / a) / static_cast<double>(j);
        s += t;
    }
    return s;
}
inline double meixner_poly(int k, int x, double beta, double c) {
    double s = 1.0, t = 1.0;
    int jmax = std::min(k, x);
    for (int j = 1; j <= jmax; ++j) {
        t *= static_cast<double>(-(k - j + 1)) * static_cast<double>(-(x - j + 1)) *
             (1.0 - 1.0 / c) / ((beta + j - 1.0) * static_cast<double>(j));
        s += t;
    }
    return s;
}
inline double krawtchouk_poly(int k, int x, int N, double p) {
    double s = 1.0, t = 1.0;
    int jmax = std::min(k, x);
    for (int j = 1; j <= jmax; ++j) {
        t *= static_cast<double>(-(k - j + 1)) * static_cast<double>(-(x - j + 1)) /
             (p * static_cast<double>(-(N - j + 1)) * static_cast<double>(j));
        s += t;
    }
    return s;
}

}  // namespace detail

/// Brute-force partial sum of the family's classical generating series next
/// to its closed form; the caller asserts agreement.  kterms caps the sum;
/// it stops early once terms stay negligible against the running maximum.
/// For Hermite, `shift` selects sum_k H_{k+shift}(x) z^k / k!.
inline std::pair<cplx, cplx> generating_check(const BasisFamily& fam, double x, cplx z,
                                              int kterms, int shift = 0) {
    require(kterms >= 1, "generating_check: kterms must be positive");
    detail::check_point(fam, x);
    cplx sum = 0.0, closed = 0.0;

    auto sum_terms = [&](auto&& term_at) {
        double run_max = 0.0;
        int quiet = 0;
        cplx acc = 0.0;
        for (int k = 0; k < kterms; ++k) {
            cplx t = term_at(k);
            acc += t;
            run_max = std::max(run_max, std::abs(t));
            quiet = (std::abs(t) <= 1e-16 * run_max) ? quiet + 1 : 0;
            if (quiet >= 12) break;
        }
        return acc;
    };

    switch (fam.kind) {
        case BasisKind::Hermite: {
            require(shift >= 0, "generating_check: shift must be nonnegative");
            // classical H_k via H_{k+1} = 2x H_k - 2k H_{k-1}, dominant direction
            double Hm1 = 0.0, H0 = 1.0;
            std::vector<double> H{H0};
            cplx zfac = 1.0;
            double run_max = 0.0;
            int quiet = 0;
            for (int k = 0; k < kterms; ++k) {
                while (static_cast<int>(H.size()) <= k + shift) {
                    int j = static_cast<int>(H.size()) - 1;
                    double Hn = 2.0 * x * H0 - 2.0 * j * Hm1;
                    detail::check_finite(Hn, "generating_check");
                    Hm1 = H0;
                    H0 = Hn;
                    H.push_back(Hn);
                }
                cplx t = H[static_cast<std::size_t>(k + shift)] * zfac;
                sum += t;
                zfac *= z / static_cast<double>(k + 1);
                run_max = std::max(run_max, std::abs(t));
                quiet = (std::abs(t) <= 1e-16 * run_max) ? quiet + 1 : 0;
                if (quiet >= 12) break;
            }
            cplx hm1 = 0.0, h0 = 1.0;  // H_shift at the complex point x - z
            for (int k = 0; k < shift; ++k) {
                cplx hn = 2.0 * (cplx(x) - z) * h0 - 2.0 * static_cast<double>(k) * hm1;
                hm1 = h0;
                h0 = hn;
            }
            closed = h0 * std::exp(2.0 * x * z - z * z);
            return {sum, closed};
        }
        case BasisKind::Charlier: {
            int xi = static_cast<int>(x);
            cplx zfac = 1.0;
            sum = sum_terms([&](int k) {
                cplx t = detail::charlier_poly(k, xi, fam.a) * zfac;
                zfac *= z / static_cast<double>(k + 1);
                return t;
            });
            closed = std::pow(cplx(1.0) - z / fam.a, xi) * std::exp(z);
            return {sum, closed};
        }
        case BasisKind::Laguerre: {
            require(std::abs(z) < 1.0, "Laguerre generating series requires |z| < 1");
            double al = fam.two_beta;
            double Lm1 = 0.0, L0 = 1.0;
            int k_state = 0;
            cplx zfac = 1.0;
            sum = sum_terms([&](int k) {
                (void)k;
                cplx t = L0 * zfac;
                double Ln = ((2.0 * k_state + al + 1.0 - x) * L0 - (k_state + al) * Lm1) /
                            (k_state + 1.0);
                Lm1 = L0;
                L0 = Ln;
                ++k_state;
                zfac *= z;
                return t;
            });
            closed = cpow_real(cplx(1.0) - z, -(al + 1.0)) * std::exp(-x * z / (cplx(1.0) - z));
            return {sum, closed};
        }
        case BasisKind::Meixner: {
            require(std::abs(z) < 1.0, "Meixner generating series requires |z| < 1");
            double beta = fam.alpha + 1.0;
            int xi = static_cast<int>(x);
            double r = std::exp(std::lgamma(beta));  // Gamma(k+beta)/k!
            cplx zfac = 1.0;
            sum = sum_terms([&](int k) {
                cplx t = r * detail::meixner_poly(k, xi, beta, fam.c) * zfac;
                r *= (k + beta) / (k + 1.0);
                zfac *= z;
                return t;
            });
            closed = std::exp(std::lgamma(beta)) * std::pow(cplx(1.0) - z / fam.c, xi) *
                     cpow_real(cplx(1.0) - z, -x - beta);
            return {sum, closed};
        }
        case BasisKind::Krawtchouk: {
            double q2 = (1.0 - fam.p) / fam.p;
            int xi = static_cast<int>(x);
            cplx zfac = 1.0;
            for (int k = 0; k <= fam.N; ++k) {
                sum += std::exp(log_binomial(fam.N, k)) *
                       detail::krawtchouk_poly(k, xi, fam.N, fam.p) * zfac;
                zfac *= z;
            }
            closed = std::pow(cplx(1.0) - q2 * z, xi) *
                     std::pow(cplx(1.0) + z, fam.N - xi);
            return {sum, closed};
        }
        default:
            throw DomainError("generating_check: unsupported family");
    }
}

}  // namespace gafkit

#endif
