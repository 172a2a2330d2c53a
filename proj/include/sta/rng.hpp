#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "sta/rational.hpp"

namespace sta {

/// FNV-1a digest; used both to mix seeds and to fingerprint serialized
/// inputs in reports.
inline std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ull) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Deterministic generator for test corpora. Draws go through the raw
/// mt19937_64 stream only (the std distributions are not portable across
/// standard libraries), so identical seeds give identical corpora on any
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi] by modulo; fine for corpus
    /// generation.
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<long>(next() % span);
    }

    bool chance(int numerator, int denominator) {
        return range(1, denominator) <= numerator;
    }

    /// Small exact rational with numerator in [-9, 9] and denominator in
    /// [1, 4]; optionally never zero.
    Rational small_rational(bool nonzero = false) {
        long num = range(-9, 9);
        if (nonzero && num == 0) num = range(1, 9);
        return rational(num, range(1, 4));
    }

    Complex small_complex(bool nonzero = false) {
        Complex z(small_rational(), small_rational());
        if (nonzero && z.re == 0 && z.im == 0) z.re = small_rational(true);
        return z;
    }

private:
    std::mt19937_64 engine_;
};

/// Per-check seed derived from the suite seed and the check name.
inline std::uint64_t derive_seed(std::uint64_t suite_seed, std::string_view check_name) {
    return fnv1a(check_name, suite_seed ^ 0x9e3779b97f4a7c15ull) | 1ull;
}

}  // namespace sta
