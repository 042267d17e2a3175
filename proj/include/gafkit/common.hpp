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

#ifndef GAFKIT_COMMON_HPP
#define GAFKIT_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gafkit {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr const char* version = "0.1.0";

/// Parameters or evaluation points outside a family's/operator's domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// A numerical procedure failed to reach its accuracy target
/// (quadrature non-convergence, truncation tail above tolerance, ...).
class AccuracyError : public std::runtime_error {
public:
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Intermediate value left the representable range; never reported as a
/// silent infinity.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

/// exp(i*t)
inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

/// log of the binomial coefficient C(n, k)
inline double log_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double sqr(double x) { return x * x; }

/// Principal-branch complex power with a real exponent.
inline cplx cpow_real(cplx base, double expo) {
    if (base == cplx(0.0, 0.0)) return (expo == 0.0) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    return std::exp(expo * std::log(base));
}

struct Rect {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    bool contains(cplx z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
    cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
    /// largest |z| attained on the rectangle (at a corner)
    double max_abs() const {
        double mx = std::max(std::abs(x0), std::abs(x1));
        double my = std::max(std::abs(y0), std::abs(y1));
        return std::hypot(mx, my);
    }
};

}  // namespace gafkit

#endif
