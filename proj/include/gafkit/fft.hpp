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

#ifndef GAFKIT_FFT_HPP
#define GAFKIT_FFT_HPP

// Sequential radix-2 transform plus Bluestein's chirp for arbitrary sizes.
// No runtime plans and no threading: outputs are bit-identical across runs.

#include "common.hpp"

namespace gafkit {
namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * pi / static_cast<double>(len);
        cplx wl = cis(ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace detail

/// Discrete Fourier transform X_k = sum_j a_j exp(sign * 2*pi*i*j*k/n),
/// any length (Bluestein when n is not a power of two).
inline std::vector<cplx> dft(std::vector<cplx> a, int sign) {
    const std::size_t n = a.size();
    if (n <= 1) return a;
    if (detail::is_pow2(n)) {
        detail::fft_pow2(a, sign);
        return a;
    }
    // chirp phases mod 2n keep the argument small for accuracy
    std::vector<cplx> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        unsigned long long r = (static_cast<unsigned long long>(k) * k) % (2ull * n);
        w[k] = cis(sign * pi * static_cast<double>(r) / static_cast<double>(n));
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cplx> u(m, 0.0), v(m, 0.0);
    for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * w[j];
    for (std::size_t j = 0; j < n; ++j) {
        v[j] = std::conj(w[j]);
        if (j > 0) v[m - j] = std::conj(w[j]);
    }
    detail::fft_pow2(u, +1);
    detail::fft_pow2(v, +1);
    for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
    detail::fft_pow2(u, -1);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = w[k] * u[k] / static_cast<double>(m);
    return out;
}

}  // namespace gafkit

#endif
