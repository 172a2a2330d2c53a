#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>

namespace sta {

/// Basis blades of Cl(1,3) are encoded as 4-bit masks: bit mu set means
/// the generator g^mu is a factor, factors in ascending index order.
/// 16 blades total; grade = popcount.
using BladeMask = std::uint8_t;

inline constexpr int kBladeCount = 16;
inline constexpr BladeMask kScalarBlade = 0;
inline constexpr BladeMask kVolumeBlade = 0b1111;

inline int blade_grade(BladeMask m) { return std::popcount(static_cast<unsigned>(m)); }

/// Metric signature (+,-,-,-): eta(0) = +1, eta(k) = -1.
inline constexpr int metric_sign(int mu) { return mu == 0 ? 1 : -1; }

/// Sign contributed by the generator transpositions needed to interleave
/// the ascending factor lists of a and b into one ascending list.
inline int reorder_sign(BladeMask a, BladeMask b) {
    unsigned x = static_cast<unsigned>(a) >> 1;
    int swaps = 0;
    while (x != 0) {
        swaps += std::popcount(x & b);
        x >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

/// Geometric product of two basis blades: result mask is a XOR b, sign is
/// the transposition count times one metric sign per repeated generator.
struct BladeProduct {
    BladeMask mask;
    int sign;
};

inline BladeProduct blade_product(BladeMask a, BladeMask b) {
    int sign = reorder_sign(a, b);
    unsigned common = static_cast<unsigned>(a & b);
    if (common & 0b0001u) sign *= metric_sign(0);
    if (common & 0b0010u) sign *= metric_sign(1);
    if (common & 0b0100u) sign *= metric_sign(2);
    if (common & 0b1000u) sign *= metric_sign(3);
    return {static_cast<BladeMask>(a ^ b), sign};
}

/// Reversion sign (-1)^{r(r-1)/2} on grade r.
inline int reversion_sign(int grade) {
    return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}

/// "b0101" style mask label; the digit for g^3 comes first, g^0 last,
/// i.e. the mask printed as a 4-bit binary number.
inline std::string blade_label(BladeMask m) {
    std::string s = "b";
    for (int bit = 3; bit >= 0; --bit) s += ((m >> bit) & 1) ? '1' : '0';
    return s;
}

/// Human-readable factor form, e.g. "g0^g2" for mask 0b0101, "1" for the
/// scalar blade.
inline std::string blade_name(BladeMask m) {
    if (m == 0) return "1";
    std::string s;
    for (int mu = 0; mu < 4; ++mu) {
        if ((m >> mu) & 1) {
            if (!s.empty()) s += '^';
            s += 'g';
            s += static_cast<char>('0' + mu);
        }
    }
    return s;
}

}  // namespace sta
