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

#ifndef GAFKIT_TRANSFORMS_HPP
#define GAFKIT_TRANSFORMS_HPP

// The analysis/reconstruction operator in both of its forms: coefficient
// form (analyze -> re-tag -> evaluate) and kernel/direct form (quadrature or
// direct weighted sums).  Six concrete transforms are provided, one per
// (basis, dictionary) pair, together with the closed-form images of the
// basis functions.
//
// Convention: the transform pairs conj(signal) with the kernel, i.e.
// L f(z) = sum_k <f, f_k> Psi_k(z) with <u,v> = sum conj(u) v, so L is
// conjugate-linear in the signal.  Every concrete form below follows it.

#include <functional>

#include "common.hpp"
#include "noise.hpp"
#include "orthopoly.hpp"
#include "quadrature.hpp"
#include "series.hpp"

namespace gafkit {

enum class TransformName {
    Bargmann,            // Hermite basis -> Weyl monomials (order N)
    CharlierStft,        // Charlier basis -> Weyl monomials (order 0)
    BergmanDP,           // Laguerre spectral basis -> hyperbolic monomials (2*beta)
    MeixnerStft,         // Meixner basis -> hyperbolic monomials (alpha)
    KrawtchoukStft,      // Krawtchouk basis -> spherical monomials (N)
    AnalyticProjection,  // Fourier basis -> shifted monomials (N)
};

struct TransformSpec {
    TransformName name = TransformName::Bargmann;
    int N = 0;
    double a = 1.0;
    double beta = 0.0;
    double alpha = 0.0;
    double c = 0.5;
    double p = 0.5;

    static TransformSpec bargmann(int N = 0) {
        require(N >= 0, "Bargmann: N must be nonnegative");
        TransformSpec s{TransformName::Bargmann};
        s.N = N;
        return s;
    }
    static TransformSpec charlier_stft(double a) {
        require(a > 0.0, "CharlierStft: a must be positive");
        TransformSpec s{TransformName::CharlierStft};
        s.a = a;
        return s;
    }
    static TransformSpec bergman_dp(double beta) {
        require(beta > -0.5, "BergmanDP: beta must exceed -1/2");
        TransformSpec s{TransformName::BergmanDP};
        s.beta = beta;
        return s;
    }
    static TransformSpec meixner_stft(double alpha, double c) {
        require(alpha > -1.0 && c > 0.0 && c < 1.0, "MeixnerStft: need alpha > -1, c in (0,1)");
        TransformSpec s{TransformName::MeixnerStft};
        s.alpha = alpha;
        s.c = c;
        return s;
    }
    static TransformSpec krawtchouk_stft(int N, double p) {
        require(N >= 1 && p > 0.0 && p < 1.0, "KrawtchoukStft: need N >= 1, p in (0,1)");
        TransformSpec s{TransformName::KrawtchoukStft};
        s.N = N;
        s.p = p;
        return s;
    }
    static TransformSpec analytic_projection(int N) {
        require(N >= 0, "AnalyticProjection: N must be nonnegative");
        TransformSpec s{TransformName::AnalyticProjection};
        s.N = N;
        return s;
    }

    BasisFamily basis() const {
        switch (name) {
            case TransformName::Bargmann: return BasisFamily::hermite();
            case TransformName::CharlierStft: return BasisFamily::charlier(a);
            case TransformName::BergmanDP: return BasisFamily::laguerre(2.0 * beta);
            case TransformName::MeixnerStft: return BasisFamily::meixner(alpha, c);
            case TransformName::KrawtchoukStft: return BasisFamily::krawtchouk(N, p);
            case TransformName::AnalyticProjection: return BasisFamily::fourier();
        }
        return BasisFamily::hermite();
    }
    DictionaryFamily dict() const {
        switch (name) {
            case TransformName::Bargmann: return DictionaryFamily::weyl(N);
            case TransformName::CharlierStft: return DictionaryFamily::weyl(0);
            case TransformName::BergmanDP: return DictionaryFamily::hyperbolic(2.0 * beta);
            case TransformName::MeixnerStft: return DictionaryFamily::hyperbolic(alpha);
            case TransformName::KrawtchoukStft: return DictionaryFamily::spherical(N);
            case TransformName::AnalyticProjection: return DictionaryFamily::shifted(N);
        }
        return DictionaryFamily::weyl(0);
    }
};

struct AnalyzeResult {
    std::vector<cplx> coeffs;  // <f, f_k>
    double norm_sq = 0.0;      // ||f||^2 (quadrature/summation estimate)
    /// ||f||^2 - sum |<f,f_k>|^2, nonnegative up to quadrature error
    double parseval_defect() const {
        double s = 0.0;
        for (const auto& ck : coeffs) s += std::norm(ck);
        return norm_sq - s;
    }
};

// ---------------------------------------------------------------------------
// analysis: <f, f_k> by exact sums (discrete bases) or Gauss rules
// ---------------------------------------------------------------------------

/// Discrete signal against a discrete basis (Charlier, Meixner, Krawtchouk).
inline AnalyzeResult analyze(const std::vector<cplx>& signal, const BasisFamily& basis, int kmax) {
    require(basis.discrete(), "analyze(vector): basis must be a discrete family");
    require(kmax >= 0, "analyze: kmax must be nonnegative");
    if (basis.kind == BasisKind::Krawtchouk) {
        require(kmax <= basis.N, "Krawtchouk: kmax must not exceed N");
        require(static_cast<long>(signal.size()) <= basis.N + 1,
                "Krawtchouk: signal longer than N+1 sites");
    }
    AnalyzeResult res;
    res.coeffs.assign(static_cast<std::size_t>(kmax) + 1, 0.0);
    for (std::size_t x = 0; x < signal.size(); ++x) {
        if (signal[x] == cplx(0.0, 0.0)) continue;
        auto f = eval_basis_all(basis, kmax, static_cast<double>(x));
        cplx cf = std::conj(signal[x]);
        for (std::size_t k = 0; k < res.coeffs.size(); ++k) res.coeffs[k] += cf * f[k];
        res.norm_sq += std::norm(signal[x]);
    }
    return res;
}

namespace detail {

/// Per-node factor w_i * exp(shift(x_i)) through logs; nodes whose weight
/// underflowed carry nothing a Gaussian-decay signal could feel.
inline std::vector<double> lifted_weights(const QuadRule& rule,
                                          const std::function<double(double)>& log_shift) {
    std::vector<double> s(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
        s[i] = rule.w[i] > 0.0 ? std::exp(std::log(rule.w[i]) + log_shift(rule.x[i])) : 0.0;
    return s;
}

}  // namespace detail

/// Continuous signal against the Hermite basis (Gauss-Hermite, node doubling)
/// or the Laguerre spectral basis on R_+ (generalized Gauss-Laguerre).
inline AnalyzeResult analyze(const std::function<cplx(double)>& signal, const BasisFamily& basis,
                             int kmax, std::size_t start_nodes = 0) {
    require(basis.kind == BasisKind::Hermite || basis.kind == BasisKind::Laguerre,
            "analyze(function): continuous families only");
    require(kmax >= 0, "analyze: kmax must be nonnegative");

    auto compute = [&](std::size_t nodes) {
        AnalyzeResult res;
        res.coeffs.assign(static_cast<std::size_t>(kmax) + 1, 0.0);
        QuadRule rule;
        std::vector<double> s1, s2;
        if (basis.kind == BasisKind::Hermite) {
            rule = gauss_hermite(nodes);
            s1 = detail::lifted_weights(rule, [](double x) { return 0.5 * x * x; });
            s2 = detail::lifted_weights(rule, [](double x) { return x * x; });
        } else {
            double beta = 0.5 * basis.two_beta;
            rule = gauss_laguerre(nodes, basis.two_beta);
            s1 = detail::lifted_weights(rule,
                                        [beta](double x) { return -beta * std::log(x) + 0.5 * x; });
            s2 = detail::lifted_weights(rule,
                                        [beta](double x) { return -2.0 * beta * std::log(x) + x; });
        }
        for (std::size_t i = 0; i < rule.size(); ++i) {
            if (s1[i] == 0.0 && s2[i] == 0.0) continue;
            cplx fv = signal(rule.x[i]);
            if (fv == cplx(0.0, 0.0)) continue;
            // bare normalized polynomials: strip the exponential part of f_k,
            // the lifted rule weight carries it instead
            std::vector<double> h(static_cast<std::size_t>(kmax) + 1);
            double hm1 = 0.0,
                   h0 = (basis.kind == BasisKind::Hermite)
                            ? std::pow(pi, -0.25)
                            : std::exp(-0.5 * std::lgamma(basis.two_beta + 1.0));
            h[0] = h0;
            for (int k = 0; k < kmax; ++k) {
                double A, B;
                detail::recurrence_coeffs(basis, k, rule.x[i], A, B);
                double hn = A * h0 - B * hm1;
                hm1 = h0;
                h0 = hn;
                h[static_cast<std::size_t>(k) + 1] = hn;
            }
            cplx cf = std::conj(fv);
            for (std::size_t k = 0; k < h.size(); ++k) res.coeffs[k] += s1[i] * cf * h[k];
            res.norm_sq += s2[i] * std::norm(fv);
        }
        return res;
    };

    std::size_t nodes = start_nodes ? start_nodes : static_cast<std::size_t>(2 * kmax + 32);
    AnalyzeResult prev = compute(nodes);
    for (int iter = 0; iter < 5; ++iter) {
        nodes *= 2;
        if (nodes > 1024) break;
        AnalyzeResult next = compute(nodes);
        double diff = std::abs(next.norm_sq - prev.norm_sq);
        for (std::size_t k = 0; k < prev.coeffs.size(); ++k)
            diff = std::max(diff, std::abs(next.coeffs[k] - prev.coeffs[k]));
        if (diff < 1e-11 * (1.0 + next.norm_sq)) return next;
        prev = std::move(next);
    }
    throw AccuracyError("analyze: quadrature did not converge under node doubling");
}

/// Fourier coefficients <f, f_k> on [0, 2pi], signed index k interleaved as
/// 0, 1, -1, 2, -2, ...; trapezoid rule (spectrally accurate and exact for
/// trigonometric polynomials below the grid size).
inline AnalyzeResult analyze_fourier(const std::function<cplx(double)>& signal, int kmax_abs,
                                     std::size_t grid = 0) {
    require(kmax_abs >= 0, "analyze_fourier: kmax must be nonnegative");
    std::size_t M = grid ? grid : 8 * static_cast<std::size_t>(kmax_abs + 8);
    require(M > 2 * static_cast<std::size_t>(kmax_abs), "analyze_fourier: grid too coarse");
    AnalyzeResult res;
    res.coeffs.assign(2 * static_cast<std::size_t>(kmax_abs) + 1, 0.0);
    double h = 2.0 * pi / static_cast<double>(M);
    for (std::size_t j = 0; j < M; ++j) {
        double theta = h * static_cast<double>(j);
        cplx cf = std::conj(signal(theta));
        res.norm_sq += h * std::norm(cf);
        for (std::size_t i = 0; i < res.coeffs.size(); ++i) {
            long k = ThetaWeights::signed_index(i);
            res.coeffs[i] += h * cf * fourier_basis(k, theta);
        }
    }
    return res;
}

/// The operator in coefficient form: the identity on coefficients, re-tagged
/// with the transform's dictionary.  For the analytic projection the signed
/// interleaved input is laid out over the natural index (negative Fourier
/// modes are annihilated by the dictionary).
inline AnalyticSeries transform_coeffs(const TransformSpec& spec,
                                       const std::vector<cplx>& inner_products) {
    AnalyticSeries s;
    s.dict = spec.dict();
    if (spec.name == TransformName::AnalyticProjection) {
        long kmax = 0;
        for (std::size_t i = 0; i < inner_products.size(); ++i)
            kmax = std::max(kmax, ThetaWeights::signed_index(i));
        s.coeffs.assign(static_cast<std::size_t>(kmax) + 1, 0.0);
        for (std::size_t i = 0; i < inner_products.size(); ++i) {
            long k = ThetaWeights::signed_index(i);
            if (k >= 0) s.coeffs[static_cast<std::size_t>(k)] = inner_products[i];
        }
    } else {
        s.coeffs = inner_products;
        if (spec.name == TransformName::KrawtchoukStft &&
            static_cast<long>(s.coeffs.size()) > spec.N + 1)
            s.coeffs.resize(static_cast<std::size_t>(spec.N) + 1);
    }
    return s;
}

/// White noise pushed through the transform: L xi^(n) = sum xi_k Psi_k.
inline AnalyticSeries transform_of_noise(const TransformSpec& spec, long n, std::uint64_t seed,
                                         std::uint64_t stream) {
    NoiseVector xi = sample_noise(n, seed, stream);
    AnalyticSeries s = transform_coeffs(spec, xi.coeffs);
    s.provenance = Provenance::TransformedNoise;
    return s;
}

// ---------------------------------------------------------------------------
// kernel / direct forms
// ---------------------------------------------------------------------------

namespace detail {

/// Hermite polynomial H_n at a complex argument.
inline cplx hermite_poly(int n, cplx x) {
    cplx hm1 = 0.0, h0 = 1.0;
    for (int k = 0; k < n; ++k) {
        cplx hn = 2.0 * x * h0 - 2.0 * static_cast<double>(k) * hm1;
        hm1 = h0;
        h0 = hn;
    }
    return h0;
}

template <typename F>
cplx adaptive_doubling(F&& value_at, std::size_t start, std::size_t cap, const char* what) {
    std::vector<cplx> v{value_at(start)};
    cplx extrap_prev = 0.0;
    bool have_extrap = false;
    for (std::size_t n = start * 2; n <= cap; n *= 2) {
        v.push_back(value_at(n));
        const std::size_t m = v.size();
        if (std::abs(v[m - 1] - v[m - 2]) <= 1e-10 * std::abs(v[m - 1]) + 1e-15)
            return v[m - 1];
        // integrands with an unmatched fractional power converge at a fixed
        // geometric diff ratio; Aitken's delta-squared removes that mode
        if (m >= 3) {
            cplx d1 = v[m - 2] - v[m - 3];
            cplx d2 = v[m - 1] - v[m - 2];
            cplx denom = d2 - d1;
            if (std::abs(denom) > 1e-300) {
                cplx extrap = v[m - 1] - d2 * d2 / denom;
                if (have_extrap &&
                    std::abs(extrap - extrap_prev) <= 1e-9 * (1.0 + std::abs(extrap)))
                    return extrap;
                extrap_prev = extrap;
                have_extrap = true;
            }
        }
    }
    throw AccuracyError(std::string(what) + ": quadrature did not converge under node doubling");
}

}  // namespace detail

/// Higher-order Bargmann transform by Gauss-Hermite quadrature; N = 0 is the
/// plain Bargmann transform.  Kernel derived from the shifted Hermite
/// generating identity: 2^{-N/2} H_N(x - z/sqrt2) e^{-z^2/2 + sqrt2 x z - x^2/2} / pi^{1/4}.
inline cplx bargmann_direct(const std::function<cplx(double)>& signal, cplx z, int N = 0,
                            std::size_t start_nodes = 64) {
    require(N >= 0, "bargmann_direct: N must be nonnegative");
    auto value_at = [&](std::size_t nodes) {
        QuadRule rule = gauss_hermite(nodes);
        auto s1 = detail::lifted_weights(rule, [](double x) { return 0.5 * x * x; });
        cplx acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            if (s1[i] == 0.0) continue;
            cplx fv = signal(rule.x[i]);
            if (fv == cplx(0.0, 0.0)) continue;
            cplx kern = detail::hermite_poly(N, rule.x[i] - z / std::sqrt(2.0)) *
                        std::exp(std::sqrt(2.0) * rule.x[i] * z);
            acc += s1[i] * std::conj(fv) * kern;
        }
        return acc * std::exp(-0.5 * z * z) * std::pow(2.0, -0.5 * N) * std::pow(pi, -0.25);
    };
    return detail::adaptive_doubling(value_at, start_nodes, 1024, "bargmann_direct");
}

/// Discrete STFT with the Conway-Maxwell-Poisson window:
/// sum_x conj(f(x)) z^x / sqrt(x!).  Independent of the Charlier parameter.
inline cplx charlier_stft(const std::vector<cplx>& signal, cplx z) {
    cplx acc = 0.0, t = 1.0;
    for (std::size_t x = 0; x < signal.size(); ++x) {
        acc += std::conj(signal[x]) * t;
        t *= z / std::sqrt(static_cast<double>(x) + 1.0);
    }
    return acc;
}

/// Bergman transform of the disk: (1-z)^{-(2beta+1)} integral of
/// conj(fhat(x)) x^beta exp(-x (1+z)/(1-z) / 2) over R_+, where fhat is the
/// spectral-side signal.  The substitution x = t/mu with
/// mu = Re((1+z)/(1-z))/2 + 1/2 reuses a fixed generalized Gauss-Laguerre
/// rule whose weight also carries the x^beta e^{-x/2} envelope of the signal
/// class, so basis-type integrands reduce to polynomials times a bounded
/// oscillation.  The oscillatory imaginary part rides in the integrand.
inline cplx bergman_dp(const std::function<cplx(double)>& fhat, cplx z, double beta,
                       std::size_t start_nodes = 64) {
    require(std::abs(z) < 1.0, "bergman_dp: z must lie inside the unit disk");
    require(beta > -0.5, "bergman_dp: beta must exceed -1/2");
    const cplx c = 0.5 * (cplx(1.0) + z) / (cplx(1.0) - z);
    const double mu = c.real() + 0.5;
    const double osc = c.imag() / mu;
    auto value_at = [&](std::size_t nodes) {
        QuadRule rule = gauss_laguerre(nodes, 2.0 * beta);
        auto s = detail::lifted_weights(rule, [&](double t) {
            return -beta * std::log(t) + 0.5 * t / mu;
        });
        cplx acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            if (s[i] == 0.0) continue;
            cplx fv = fhat(rule.x[i] / mu);
            if (fv == cplx(0.0, 0.0)) continue;
            acc += s[i] * std::conj(fv) * cis(-osc * rule.x[i]);
        }
        return acc * std::pow(mu, -(beta + 1.0));
    };
    cplx integral = detail::adaptive_doubling(value_at, start_nodes, 8192, "bergman_dp");
    return cpow_real(cplx(1.0) - z, -(2.0 * beta + 1.0)) * integral;
}

/// Conformal map C_+ -> D used by the Daubechies-Paul rewrite.
inline cplx dp_phi(cplx w) { return (2.0 * w - cplx(0.0, 1.0)) / (2.0 * w + cplx(0.0, 1.0)); }

/// Daubechies-Paul wavelet transform at (-u, s) through the Bergman form:
/// prefactor times bergman_dp at phi(u + i s).
inline cplx dp_wavelet(const std::function<cplx(double)>& fhat, double u, double s, double beta) {
    require(s > 0.0, "dp_wavelet: scale must be positive");
    cplx w(u, s);
    cplx pref = cis(0.5 * pi * (beta + 1.0)) * std::sqrt(2.0 * pi) *
                std::pow(s, beta + 0.5) / std::exp(std::lgamma(beta + 1.0)) *
                cpow_real(cplx(0.5) - cplx(0.0, 1.0) * w, -(2.0 * beta + 1.0));
    return pref * bergman_dp(fhat, dp_phi(w), beta);
}

/// Independent oracle for dp_wavelet: the spectral inner product of the
/// signal with the translated/dilated wavelet, quadratured on its own.
inline cplx dp_wavelet_direct(const std::function<cplx(double)>& fhat, double u, double s,
                              double beta, std::size_t start_nodes = 64) {
    require(s > 0.0, "dp_wavelet_direct: scale must be positive");
    const double mu = s + 0.5;
    auto value_at = [&](std::size_t nodes) {
        QuadRule rule = gauss_laguerre(nodes, 2.0 * beta);
        auto sw = detail::lifted_weights(rule, [&](double t) {
            return -beta * std::log(t) + 0.5 * t / mu;
        });
        cplx acc = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            if (sw[i] == 0.0) continue;
            cplx fv = fhat(rule.x[i] / mu);
            if (fv == cplx(0.0, 0.0)) continue;
            acc += sw[i] * std::conj(fv) * cis(u * rule.x[i] / mu);
        }
        return acc * std::pow(mu, -(beta + 1.0));
    };
    cplx integral = detail::adaptive_doubling(value_at, start_nodes, 8192, "dp_wavelet_direct");
    return cis(0.5 * pi * (beta + 1.0)) * std::sqrt(2.0 * pi) * std::pow(s, beta + 0.5) /
           std::exp(std::lgamma(beta + 1.0)) * integral;
}

/// Discrete STFT with the Conway-Maxwell-negative-binomial window:
/// sum_x conj(f(x)) sqrt(Gamma(x+alpha+1)/x!) z^x, |z| < 1.
inline cplx meixner_stft(const std::vector<cplx>& signal, cplx z, double alpha) {
    require(std::abs(z) < 1.0, "meixner_stft: z must lie inside the unit disk");
    require(alpha > -1.0, "meixner_stft: alpha must exceed -1");
    cplx acc = 0.0;
    cplx t = std::exp(0.5 * std::lgamma(alpha + 1.0));
    for (std::size_t x = 0; x < signal.size(); ++x) {
        acc += std::conj(signal[x]) * t;
        double xx = static_cast<double>(x);
        t *= z * std::sqrt((xx + alpha + 1.0) / (xx + 1.0));
    }
    return acc;
}

/// Windowed discrete Fourier transform on C^{N+1}:
/// sum_x conj(f(x)) sqrt(C(N,x)) z^x.
inline cplx krawtchouk_stft(const std::vector<cplx>& signal, cplx z, int N) {
    require(static_cast<long>(signal.size()) <= N + 1, "krawtchouk_stft: signal longer than N+1");
    cplx acc = 0.0, zp = 1.0;
    for (std::size_t x = 0; x < signal.size(); ++x) {
        acc += std::conj(signal[x]) * std::exp(0.5 * log_binomial(N, static_cast<double>(x))) * zp;
        zp *= z;
    }
    return acc;
}

/// Kernel form of the analytic projection on the circle:
/// (2pi)^{-1/2} integral of conj(f(theta)) e^{i N theta} / (1 - z e^{i theta}),
/// trapezoid rule (spectrally accurate; the kernel is smooth for |z| < 1).
inline cplx analytic_projection_direct(const std::function<cplx(double)>& signal, cplx z, int N,
                                       std::size_t grid = 1024) {
    require(std::abs(z) < 1.0, "analytic_projection: z must lie inside the unit disk");
    require(N >= 0, "analytic_projection: N must be nonnegative");
    cplx acc = 0.0;
    double h = 2.0 * pi / static_cast<double>(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        double theta = h * static_cast<double>(j);
        cplx e = cis(theta);
        acc += std::conj(signal(theta)) * cis(N * theta) / (cplx(1.0) - z * e);
    }
    return acc * h / std::sqrt(2.0 * pi);
}

/// Analytic projection of a signed-indexed Fourier coefficient vector:
/// sum_{k >= N} c_k z^{k-N}.  Coefficients are inner products already, so no
/// conjugation is applied here.
inline cplx analytic_projection(const std::vector<cplx>& fourier_coeffs, cplx z, int N) {
    require(std::abs(z) < 1.0, "analytic_projection: z must lie inside the unit disk");
    require(N >= 0, "analytic_projection: N must be nonnegative");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < fourier_coeffs.size(); ++i) {
        long k = ThetaWeights::signed_index(i);
        if (k < N) continue;
        acc += fourier_coeffs[i] * std::pow(z, static_cast<int>(k - N));
    }
    return acc;
}

/// Coefficient path composed with the transform's isometry identity:
/// the concrete STFT satisfies stft(f)(z) = multiplier(z) * L f(T z), where
/// L is the coefficient operator.  Bargmann, Bergman, and the analytic
/// projection coincide with L outright (identity map, unit multiplier).
inline cplx eval_composed(const TransformSpec& spec, const AnalyticSeries& series, cplx z) {
    switch (spec.name) {
        case TransformName::CharlierStft: {
            double sa = std::sqrt(spec.a);
            return std::exp(-0.5 * spec.a + sa * z) * eval_series(series, sa - z);
        }
        case TransformName::MeixnerStft: {
            double sc = std::sqrt(spec.c);
            cplx mult = std::pow(1.0 - spec.c, 0.5 * (spec.alpha + 1.0)) *
                        cpow_real(cplx(1.0) - sc * z, -(spec.alpha + 1.0));
            return mult * eval_series(series, (sc - z) / (cplx(1.0) - sc * z));
        }
        case TransformName::KrawtchoukStft: {
            double q = std::sqrt((1.0 - spec.p) / spec.p);
            cplx mult = std::pow((q + z) / std::sqrt(1.0 + q * q), spec.N);
            return mult * eval_series(series, (cplx(1.0) - q * z) / (q + z));
        }
        default:
            return eval_series(series, z);
    }
}

/// Closed-form image of basis function f_k under the transform.  For the
/// analytic projection k is the signed Fourier index.
inline cplx basis_image(const TransformSpec& spec, long k, cplx z) {
    switch (spec.name) {
        case TransformName::Bargmann:
            return psi(DictionaryFamily::weyl(spec.N), k, z);
        case TransformName::CharlierStft: {
            double sa = std::sqrt(spec.a);
            return std::exp(-0.5 * spec.a + sa * z) * std::pow(sa - z, static_cast<int>(k)) *
                   std::exp(-0.5 * std::lgamma(static_cast<double>(k) + 1.0));
        }
        case TransformName::BergmanDP:
            return psi(DictionaryFamily::hyperbolic(2.0 * spec.beta), k, z);
        case TransformName::MeixnerStft: {
            double sc = std::sqrt(spec.c);
            double w = std::exp(0.5 * (std::lgamma(static_cast<double>(k) + spec.alpha + 1.0) -
                                       std::lgamma(static_cast<double>(k) + 1.0)));
            return w * std::pow(1.0 - spec.c, 0.5 * (spec.alpha + 1.0)) *
                   std::pow(sc - z, static_cast<int>(k)) *
                   cpow_real(cplx(1.0) - sc * z, -(spec.alpha + 1.0) - static_cast<double>(k));
        }
        case TransformName::KrawtchoukStft: {
            double q = std::sqrt((1.0 - spec.p) / spec.p);
            double w = std::exp(0.5 * (log_binomial(spec.N, static_cast<double>(k)) -
                                       spec.N * std::log1p(q * q)));
            return w * std::pow(cplx(1.0) - q * z, static_cast<int>(k)) *
                   std::pow(q + z, static_cast<int>(spec.N - k));
        }
        case TransformName::AnalyticProjection:
            if (k < spec.N) return 0.0;
            return std::pow(z, static_cast<int>(k - spec.N));
    }
    return 0.0;
}

}  // namespace gafkit

#endif
