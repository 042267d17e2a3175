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

#ifndef GAFKIT_QUADRATURE_HPP
#define GAFKIT_QUADRATURE_HPP

// Gauss rules by Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of
// the recurrence, weights are mu0 times the squared first eigenvector
// component.  The tridiagonal eigensolver is a self-contained implicit QL
// sweep tracking only the first row of the eigenvector matrix.

#include <algorithm>
#include <numeric>

#include "common.hpp"

namespace gafkit {

struct QuadRule {
    std::vector<double> x;  // nodes
    std::vector<double> w;  // weights
    std::size_t size() const { return x.size(); }
};

namespace detail {

/// Eigenvalues of a symmetric tridiagonal matrix (diag d, offdiag e) plus the
/// first component of each normalized eigenvector, returned in z.
inline void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                                    std::vector<double>& z) {
    const std::size_t n = d.size();
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    e.resize(n, 0.0);  // e[n-1] used as workspace

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NumericError("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    // rotate the tracked first-row components
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - l > 1) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

inline QuadRule golub_welsch(std::vector<double> diag, std::vector<double> offdiag, double mu0) {
    std::vector<double> z;
    tridiag_eigen_first_row(diag, offdiag, z);
    const std::size_t n = diag.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rule.x[i] = diag[order[i]];
        rule.w[i] = mu0 * z[order[i]] * z[order[i]];
    }
    return rule;
}

}  // namespace detail

/// n-point Gauss-Hermite rule for weight e^{-x^2} on R.
inline QuadRule gauss_hermite(std::size_t n) {
    require(n >= 1, "gauss_hermite: need at least one node");
    std::vector<double> d(n, 0.0), e(n > 1 ? n - 1 : 0);
    for (std::size_t i = 1; i < n; ++i) e[i - 1] = std::sqrt(0.5 * static_cast<double>(i));
    return detail::golub_welsch(std::move(d), std::move(e), std::sqrt(pi));
}

/// n-point generalized Gauss-Laguerre rule for weight x^alpha e^{-x} on R_+.
inline QuadRule gauss_laguerre(std::size_t n, double alpha) {
    require(n >= 1, "gauss_laguerre: need at least one node");
    require(alpha > -1.0, "gauss_laguerre: alpha must exceed -1");
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
    for (std::size_t i = 0; i < n; ++i) d[i] = 2.0 * static_cast<double>(i) + alpha + 1.0;
    for (std::size_t i = 1; i < n; ++i)
        e[i - 1] = std::sqrt(static_cast<double>(i) * (static_cast<double>(i) + alpha));
    return detail::golub_welsch(std::move(d), std::move(e), std::exp(std::lgamma(alpha + 1.0)));
}

/// n-point Gauss-Legendre rule on [a, b].
inline QuadRule gauss_legendre(std::size_t n, double a, double b) {
    require(n >= 1, "gauss_legendre: need at least one node");
    std::vector<double> d(n, 0.0), e(n > 1 ? n - 1 : 0);
    for (std::size_t i = 1; i < n; ++i) {
        double k = static_cast<double>(i);
        e[i - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    }
    QuadRule rule = detail::golub_welsch(std::move(d), std::move(e), 2.0);
    for (std::size_t i = 0; i < n; ++i) {
        rule.x[i] = 0.5 * (b - a) * rule.x[i] + 0.5 * (a + b);
        rule.w[i] *= 0.5 * (b - a);
    }
    return rule;
}

}  // namespace gafkit

#endif
