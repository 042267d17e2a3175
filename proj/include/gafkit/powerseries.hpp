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

#ifndef GAFKIT_POWERSERIES_HPP
#define GAFKIT_POWERSERIES_HPP

// Truncated power-series arithmetic for the invariance-transport
// re-expansions: products, powers of linear factors, binomial series, exp.

#include "common.hpp"

namespace gafkit {
namespace pseries {

using Series = std::vector<cplx>;  // s[m] multiplies z^m

inline Series truncated_product(const Series& a, const Series& b, std::size_t nterms) {
    if (a.empty() || b.empty()) return {};
    Series out(std::min(nterms, a.size() + b.size() - 1), 0.0);
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// (u + v z)^k exactly (binomial expansion).
inline Series linear_power(cplx u, cplx v, int k) {
    Series out(static_cast<std::size_t>(k) + 1);
    cplx term = std::pow(u, k);
    if (u == cplx(0.0, 0.0)) {
        // degenerate: only the z^k coefficient survives
        for (auto& c : out) c = 0.0;
        out[static_cast<std::size_t>(k)] = std::pow(v, k);
        return out;
    }
    for (int j = 0; j <= k; ++j) {
        out[static_cast<std::size_t>(j)] = term;
        term *= v / u * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
    return out;
}

/// Binomial series (1 + u z)^s with real exponent s, principal branch,
/// truncated to nterms coefficients.  Converges on |u z| < 1.
inline Series binomial_series(cplx u, double s, std::size_t nterms) {
    Series out(nterms);
    cplx term = 1.0;
    for (std::size_t j = 0; j < nterms; ++j) {
        out[j] = term;
        term *= u * ((s - static_cast<double>(j)) / (static_cast<double>(j) + 1.0));
    }
    return out;
}

/// exp(b z) truncated to nterms coefficients.
inline Series exp_series(cplx b, std::size_t nterms) {
    Series out(nterms);
    cplx term = 1.0;
    for (std::size_t j = 0; j < nterms; ++j) {
        out[j] = term;
        term *= b / (static_cast<double>(j) + 1.0);
    }
    return out;
}

inline Series scaled(Series s, cplx factor) {
    for (auto& c : s) c *= factor;
    return s;
}

inline void add_into(Series& acc, const Series& s) {
    if (acc.size() < s.size()) acc.resize(s.size(), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) acc[i] += s[i];
}

}  // namespace pseries
}  // namespace gafkit

#endif
