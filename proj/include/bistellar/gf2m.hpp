/*
   Copyright 2026 The bistellar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace bistellar {

// F_{2^m} for m in 1..4, elements as bit vectors (bit k = coefficient of x^k).
// Moduli are fixed so values and counts are reproducible bit-for-bit:
//   m=1: x    m=2: x^2+x+1    m=3: x^3+x+1    m=4: x^4+x+1
inline constexpr std::array<std::uint16_t, 5> kGf2mModulus = {0, 0b10, 0b111, 0b1011, 0b10011};

constexpr std::uint8_t gf2m_mul(unsigned m, std::uint8_t a, std::uint8_t b) {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < m; ++i)
        if ((b >> i) & 1u) r ^= static_cast<std::uint32_t>(a) << i;
    for (int i = 2 * static_cast<int>(m) - 2; i >= static_cast<int>(m); --i)
        if ((r >> i) & 1u) r ^= static_cast<std::uint32_t>(kGf2mModulus[m]) << (i - m);
    return static_cast<std::uint8_t>(r & ((1u << m) - 1u));
}

constexpr std::uint8_t gf2m_pow(unsigned m, std::uint8_t a, unsigned e) {
    std::uint8_t r = 1;
    while (e) {
        if (e & 1u) r = gf2m_mul(m, r, a);
        a = gf2m_mul(m, a, a);
        e >>= 1;
    }
    return r;
}

constexpr std::uint8_t gf2m_inv(unsigned m, std::uint8_t a) {
    // a^(q-2) for q = 2^m
    return gf2m_pow(m, a, (1u << m) - 2u);
}

namespace detail {

struct Gf2mTables {
    // mul[m][a][b] and inv[m][a] for m = 1..4 (index 0 unused)
    std::uint8_t mul[5][16][16] = {};
    std::uint8_t inv[5][16] = {};
    constexpr Gf2mTables() {
        for (unsigned m = 1; m <= 4; ++m) {
            const unsigned q = 1u << m;
            for (unsigned a = 0; a < q; ++a) {
                for (unsigned b = 0; b < q; ++b)
                    mul[m][a][b] = gf2m_mul(m, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
                if (a) inv[m][a] = gf2m_inv(m, static_cast<std::uint8_t>(a));
            }
        }
    }
};

inline constexpr Gf2mTables kGf2m{};

}  // namespace detail

/// Table-backed F_{2^m} multiply; the hot path for enumeration.
inline std::uint8_t gf2m_mul_fast(unsigned m, std::uint8_t a, std::uint8_t b) {
    return detail::kGf2m.mul[m][a][b];
}

inline std::uint8_t gf2m_inv_fast(unsigned m, std::uint8_t a) {
    if (a == 0) throw std::domain_error("inverse of zero in F_{2^m}");
    return detail::kGf2m.inv[m][a];
}

}  // namespace bistellar
