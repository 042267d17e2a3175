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

#ifndef GAFKIT_NOISE_HPP
#define GAFKIT_NOISE_HPP

// Truncated complex white noise, the weighted coefficient norm, and the
// quantitative truncation bounds (Wasserstein, concentration, Lipschitz).

#include "common.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace gafkit {

struct NoiseVector {
    std::vector<cplx> coeffs;  // xi_0 .. xi_n
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// xi^(n): n+1 i.i.d. N_C(0,1) coefficients.  Coefficient k is a pure
/// function of (seed, stream, k), so extending n never reshuffles a prefix.
inline NoiseVector sample_noise(long n, std::uint64_t seed, std::uint64_t stream) {
    require(n >= 0, "sample_noise: n must be nonnegative");
    NoiseVector v;
    v.seed = seed;
    v.stream = stream;
    v.coeffs.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < v.coeffs.size(); ++k)
        v.coeffs[k] = complex_gaussian(seed, stream, k);
    return v;
}

enum class ThetaIndexing { NaturalN, SignedZ };

struct ThetaWeights {
    ThetaIndexing indexing = ThetaIndexing::NaturalN;

    /// signed Fourier index for interleaved storage 0, 1, -1, 2, -2, ...
    static long signed_index(std::size_t storage) {
        if (storage == 0) return 0;
        long h = static_cast<long>((storage + 1) / 2);
        return (storage % 2 == 1) ? h : -h;
    }
    double weight(std::size_t storage) const {
        long k = (indexing == ThetaIndexing::NaturalN) ? static_cast<long>(storage)
                                                       : signed_index(storage);
        return 1.0 / (1.0 + static_cast<double>(k) * static_cast<double>(k));
    }
};

inline double theta_norm_sq(const NoiseVector& v, const ThetaWeights& w = {}) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.coeffs.size(); ++k) s += w.weight(k) * std::norm(v.coeffs[k]);
    return s;
}

inline double theta_norm_sq(const std::vector<cplx>& coeffs, const ThetaWeights& w = {}) {
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) s += w.weight(k) * std::norm(coeffs[k]);
    return s;
}

/// Exact tail sum_{k=n+1}^inf 1/(1+k^2): explicit terms plus a midpoint
/// integral bracket, accurate to ~1e-13.
inline double theta_tail(long n) {
    require(n >= -1, "theta_tail: n must be at least -1");
    const long terms = 20000;
    double s = 0.0;
    for (long k = n + terms; k > n; --k) s += 1.0 / (1.0 + static_cast<double>(k) * k);
    double m = static_cast<double>(n + terms) + 0.5;
    return s + std::atan(1.0 / m);
}

struct WassersteinBound {
    double bound;       // 1/sqrt(n)
    double exact_tail;  // sum_{k>n} 1/(1+k^2); the proof uses exact_tail <= 1/n
};

/// Wasserstein-2 distance bound between the laws of xi^(n) and xi.
inline WassersteinBound wasserstein2_bound(long n) {
    require(n >= 1, "wasserstein2_bound: n must be positive");
    return {1.0 / std::sqrt(static_cast<double>(n)), theta_tail(n)};
}

/// P(theta-norm of xi^(n) - xi exceeds eps) <= 2 exp(-n eps^2 / 2), clamped.
inline double concentration_bound(long n, double eps) {
    require(n >= 1, "concentration_bound: n must be positive");
    require(eps > 0.0, "concentration_bound: eps must be positive");
    return std::min(1.0, 2.0 * std::exp(-0.5 * static_cast<double>(n) * eps * eps));
}

/// |E F(xi^(n)) - E F(xi)| <= lip / sqrt(n) for any Lipschitz F.
inline double lipschitz_bound(double lip, long n) {
    require(lip >= 0.0, "lipschitz_bound: Lipschitz constant must be nonnegative");
    require(n >= 1, "lipschitz_bound: n must be positive");
    return lip / std::sqrt(static_cast<double>(n));
}

/// Monte Carlo exceedance frequency of the proxy tail
/// sum_{k=n+1}^{m} |xi_k|^2/(1+k^2) > eps^2, with xi^(m), m >> n, standing in
/// for xi.  The proxy tail is stochastically dominated by the true one, so
/// the concentration bound applies.
inline double empirical_tail_exceedance(long n, long m, double eps, long trials,
                                        std::uint64_t seed, int workers = 1) {
    require(m > n, "empirical_tail_exceedance: m must exceed n");
    require(n >= 0, "empirical_tail_exceedance: n must be nonnegative");
    require(trials >= 1, "empirical_tail_exceedance: need at least one trial");
    std::vector<char> hit(static_cast<std::size_t>(trials), 0);
    parallel_trials(trials, workers, [&](long t) {
        double tail = 0.0;
        for (long k = n + 1; k <= m; ++k)
            tail += std::norm(complex_gaussian(seed, static_cast<std::uint64_t>(t), k)) /
                    (1.0 + static_cast<double>(k) * k);
        hit[static_cast<std::size_t>(t)] = tail > eps * eps ? 1 : 0;
    });
    long hits = 0;
    for (char h : hit) hits += h;
    return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace gafkit

#endif
