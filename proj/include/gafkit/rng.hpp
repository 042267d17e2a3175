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

#ifndef GAFKIT_RNG_HPP
#define GAFKIT_RNG_HPP

// Counter-based random numbers: Philox4x32-10 after Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3" (SC 2011).  Every draw is a
// pure function of (seed, stream, index), so prefixes of a stream never
// reshuffle when the stream is extended.

#include <array>
#include <cstdint>

#include "common.hpp"

namespace gafkit {

namespace detail {

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        mul_hi_lo(M0, ctr[0], lo0, hi0);
        mul_hi_lo(M1, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

/// 53-bit uniform in [0,1) from two 32-bit words.
inline double uniform01(std::uint32_t a, std::uint32_t b) {
    std::uint64_t u = (static_cast<std::uint64_t>(a) << 32) | b;
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Standard complex Gaussian N_C(0,1): real and imaginary parts are
/// independent N(0, 1/2), so E|xi|^2 = 1.  Pure function of its key.
inline cplx complex_gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    auto r = detail::philox4x32_10(ctr, key);
    double u1 = 1.0 - detail::uniform01(r[0], r[1]);  // (0,1]: keeps the log finite
    double u2 = detail::uniform01(r[2], r[3]);
    double radius = std::sqrt(-std::log(u1));
    return radius * cis(2.0 * pi * u2);
}

/// Uniform in [0,1), keyed like complex_gaussian but from an independent lane.
inline double uniform_double(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    // flip the top counter bit so the lane never collides with the Gaussian draw
    ctr[1] ^= 0x80000000u;
    auto r = detail::philox4x32_10(ctr, key);
    return detail::uniform01(r[0], r[1]);
}

}  // namespace gafkit

#endif
