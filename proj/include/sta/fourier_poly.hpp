#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "sta/errors.hpp"
#include "sta/rational.hpp"

namespace sta {

/// Covector of exact rational components k_mu; the phase of a plane wave
/// is k_mu x^mu. Wave components stay rational even over the complex
/// ring.
struct WaveVector {
    std::array<Rational, 4> k{Rational(0), Rational(0), Rational(0), Rational(0)};

    WaveVector() = default;
    WaveVector(Rational k0, Rational k1, Rational k2, Rational k3)
        : k{std::move(k0), std::move(k1), std::move(k2), std::move(k3)} {}

    bool is_zero() const {
        return k[0] == 0 && k[1] == 0 && k[2] == 0 && k[3] == 0;
    }

    /// Minkowski square eta^{mu nu} k_mu k_nu = k0^2 - k1^2 - k2^2 - k3^2.
    Rational minkowski_square() const {
        return k[0] * k[0] - k[1] * k[1] - k[2] * k[2] - k[3] * k[3];
    }
    bool is_null() const { return minkowski_square() == 0; }

    friend WaveVector operator+(const WaveVector& a, const WaveVector& b) {
        return WaveVector(a.k[0] + b.k[0], a.k[1] + b.k[1], a.k[2] + b.k[2],
                          a.k[3] + b.k[3]);
    }
    friend WaveVector operator-(const WaveVector& a, const WaveVector& b) {
        return WaveVector(a.k[0] - b.k[0], a.k[1] - b.k[1], a.k[2] - b.k[2],
                          a.k[3] - b.k[3]);
    }
    friend WaveVector operator-(const WaveVector& a) {
        return WaveVector(-a.k[0], -a.k[1], -a.k[2], -a.k[3]);
    }
    friend bool operator==(const WaveVector& a, const WaveVector& b) {
        return a.k == b.k;
    }

    int compare(const WaveVector& o) const {
        for (int mu = 0; mu < 4; ++mu) {
            int c = cmp(k[mu], o.k[mu]);
            if (c != 0) return c;
        }
        return 0;
    }
};

enum class Trig : std::uint8_t { cos = 0, sin = 1 };

/// Key of one term: monomial exponents plus an optional canonicalized
/// phase. Phases are canonical when the first nonzero wave component is
/// positive (cos is even, sin is odd, so any term can be brought to this
/// form by at most an amplitude sign flip).
struct TermKey {
    std::array<std::uint16_t, 4> expo{0, 0, 0, 0};
    bool has_phase = false;
    Trig trig = Trig::cos;
    WaveVector wave;

    friend bool operator<(const TermKey& a, const TermKey& b) {
        if (a.expo != b.expo) return a.expo < b.expo;
        if (a.has_phase != b.has_phase) return !a.has_phase;
        if (!a.has_phase) return false;
        if (a.trig != b.trig) return a.trig < b.trig;
        return a.wave.compare(b.wave) < 0;
    }
    friend bool operator==(const TermKey& a, const TermKey& b) {
        return a.expo == b.expo && a.has_phase == b.has_phase &&
               (!a.has_phase || (a.trig == b.trig && a.wave == b.wave));
    }
};

/// Exact scalar function of spacetime: a finite sum of
///     amplitude * x0^e0 x1^e1 x2^e2 x3^e3 * {cos|sin}(k_mu x^mu)
/// terms over the ring R. Closed under addition, multiplication and
/// coordinate differentiation; equality of canonical forms is exact, so
/// "is this field identically zero" is decidable.
template <typename R>
class FourierPoly {
public:
    FourierPoly() = default;

    static FourierPoly zero() { return FourierPoly(); }

    static FourierPoly constant(R value) {
        FourierPoly p;
        p.add_term(TermKey{}, std::move(value));
        return p;
    }

    static FourierPoly one() { return constant(ring<R>::one()); }

    /// The coordinate function x^mu.
    static FourierPoly coordinate(int mu) {
        TermKey key;
        key.expo[static_cast<std::size_t>(mu)] = 1;
        FourierPoly p;
        p.add_term(key, ring<R>::one());
        return p;
    }

    static FourierPoly monomial(const std::array<std::uint16_t, 4>& expo, R amp) {
        TermKey key;
        key.expo = expo;
        FourierPoly p;
        p.add_term(key, std::move(amp));
        return p;
    }

    static FourierPoly wave(Trig trig, const WaveVector& k, R amp,
                            const std::array<std::uint16_t, 4>& expo = {0, 0, 0, 0}) {
        TermKey key;
        key.expo = expo;
        key.has_phase = true;
        key.trig = trig;
        key.wave = k;
        FourierPoly p;
        p.add_term(key, std::move(amp));
        return p;
    }

    static FourierPoly cosine(const WaveVector& k) {
        return wave(Trig::cos, k, ring<R>::one());
    }
    static FourierPoly sine(const WaveVector& k) {
        return wave(Trig::sin, k, ring<R>::one());
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<TermKey, R>& terms() const { return terms_; }

    /// Inserts amplitude * key with phase canonicalization and zero
    /// pruning; the container stays in canonical form at all times.
    void add_term(TermKey key, R amp) {
        if (ring<R>::is_zero(amp)) return;
        if (key.has_phase) {
            if (key.wave.is_zero()) {
                if (key.trig == Trig::sin) return;  // sin(0) = 0
                key.has_phase = false;              // cos(0) = 1
                key.trig = Trig::cos;
            } else {
                for (int mu = 0; mu < 4; ++mu) {
                    if (key.wave.k[mu] == 0) continue;
                    if (key.wave.k[mu] < 0) {
                        key.wave = -key.wave;
                        if (key.trig == Trig::sin) amp = -amp;
                    }
                    break;
                }
            }
        }
        auto [it, inserted] = terms_.try_emplace(key, amp);
        if (!inserted) {
            it->second += amp;
            if (ring<R>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend FourierPoly operator+(const FourierPoly& a, const FourierPoly& b) {
        FourierPoly r = a;
        for (const auto& [key, amp] : b.terms_) r.add_term(key, amp);
        return r;
    }
    friend FourierPoly operator-(const FourierPoly& a, const FourierPoly& b) {
        FourierPoly r = a;
        for (const auto& [key, amp] : b.terms_) r.add_term(key, -amp);
        return r;
    }
    friend FourierPoly operator-(const FourierPoly& a) {
        FourierPoly r;
        for (const auto& [key, amp] : a.terms_) r.terms_.emplace(key, -amp);
        return r;
    }
    FourierPoly& operator+=(const FourierPoly& o) {
        for (const auto& [key, amp] : o.terms_) add_term(key, amp);
        return *this;
    }
    FourierPoly& operator-=(const FourierPoly& o) {
        for (const auto& [key, amp] : o.terms_) add_term(key, -amp);
        return *this;
    }

    friend FourierPoly operator*(const R& s, const FourierPoly& a) {
        FourierPoly r;
        if (ring<R>::is_zero(s)) return r;
        for (const auto& [key, amp] : a.terms_) r.terms_.emplace(key, s * amp);
        return r;
    }
    friend FourierPoly operator*(const FourierPoly& a, const R& s) { return s * a; }

    /// Product with trigonometric terms rewritten through the
    /// product-to-sum identities, keeping the result in canonical form.
    friend FourierPoly operator*(const FourierPoly& a, const FourierPoly& b) {
        return a.multiply_range(b, 0, a.terms_.size());
    }

    /// Product of this polynomial's terms [offset, offset+len) with all of
    /// b; summing the chunks over a partition of the term range gives
    /// exactly the full product. This is the split point for the parallel
    /// field kernel.
    FourierPoly multiply_range(const FourierPoly& b, std::size_t offset,
                               std::size_t len) const {
        FourierPoly r;
        auto it = terms_.begin();
        std::advance(it, static_cast<std::ptrdiff_t>(offset));
        for (std::size_t n = 0; n < len && it != terms_.end(); ++n, ++it)
            for (const auto& [kb, vb] : b.terms_)
                accumulate_term_product(it->first, it->second, kb, vb, r);
        return r;
    }

    friend bool operator==(const FourierPoly& a, const FourierPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FourierPoly& a, const FourierPoly& b) {
        return !(a == b);
    }

    /// Exact coordinate derivative d/dx^mu: power rule on the monomial,
    /// chain rule on the phase.
    FourierPoly partial(int mu) const {
        FourierPoly r;
        for (const auto& [key, amp] : terms_) {
            if (key.expo[mu] > 0) {
                TermKey down = key;
                down.expo[mu] = static_cast<std::uint16_t>(key.expo[mu] - 1);
                r.add_term(down, ring<R>::scale(amp, Rational(key.expo[mu])));
            }
            if (key.has_phase && key.wave.k[mu] != 0) {
                TermKey osc = key;
                R factor = ring<R>::scale(amp, key.wave.k[mu]);
                if (key.trig == Trig::cos) {
                    osc.trig = Trig::sin;
                    r.add_term(osc, -factor);
                } else {
                    osc.trig = Trig::cos;
                    r.add_term(osc, factor);
                }
            }
        }
        return r;
    }

    /// Exact evaluation. A nonzero rational phase value has an irrational
    /// cosine and sine (Lindemann), so only terms whose phase evaluates
    /// to exactly zero are admissible; anything else raises
    /// exactness_error instead of approximating.
    R eval(const std::array<Rational, 4>& x) const {
        R total = ring<R>::zero();
        for (const auto& [key, amp] : terms_) {
            Rational mono(1);
            for (int mu = 0; mu < 4; ++mu) {
                for (std::uint16_t e = 0; e < key.expo[mu]; ++e) mono *= x[mu];
            }
            R value = ring<R>::scale(amp, mono);
            if (key.has_phase) {
                Rational phase(0);
                for (int mu = 0; mu < 4; ++mu) phase += key.wave.k[mu] * x[mu];
                if (phase != 0)
                    throw exactness_error(
                        "phase evaluates to the nonzero rational " +
                        rational_to_string(phase) +
                        "; cos/sin of a nonzero rational are irrational");
                if (key.trig == Trig::sin) continue;  // sin(0) = 0
            }
            total += value;
        }
        return total;
    }

private:
    static void accumulate_term_product(const TermKey& ka, const R& va, const TermKey& kb,
                                        const R& vb, FourierPoly& r) {
        static const Rational half(1, 2);
        TermKey key;
        for (int mu = 0; mu < 4; ++mu)
            key.expo[mu] = static_cast<std::uint16_t>(ka.expo[mu] + kb.expo[mu]);
        R amp = va * vb;
        if (!ka.has_phase && !kb.has_phase) {
            r.add_term(key, std::move(amp));
        } else if (ka.has_phase != kb.has_phase) {
            const TermKey& w = ka.has_phase ? ka : kb;
            key.has_phase = true;
            key.trig = w.trig;
            key.wave = w.wave;
            r.add_term(key, std::move(amp));
        } else {
            R h = ring<R>::scale(amp, half);
            WaveVector diff = ka.wave - kb.wave;
            WaveVector sum = ka.wave + kb.wave;
            key.has_phase = true;
            if (ka.trig == Trig::cos && kb.trig == Trig::cos) {
                // cos a cos b = 1/2 cos(a-b) + 1/2 cos(a+b)
                key.trig = Trig::cos;
                key.wave = diff;
                r.add_term(key, h);
                key.wave = sum;
                r.add_term(key, h);
            } else if (ka.trig == Trig::sin && kb.trig == Trig::sin) {
                // sin a sin b = 1/2 cos(a-b) - 1/2 cos(a+b)
                key.trig = Trig::cos;
                key.wave = diff;
                r.add_term(key, h);
                key.wave = sum;
                r.add_term(key, -h);
            } else if (ka.trig == Trig::sin) {
                // sin a cos b = 1/2 sin(a+b) + 1/2 sin(a-b)
                key.trig = Trig::sin;
                key.wave = sum;
                r.add_term(key, h);
                key.wave = diff;
                r.add_term(key, h);
            } else {
                // cos a sin b = 1/2 sin(a+b) - 1/2 sin(a-b)
                key.trig = Trig::sin;
                key.wave = sum;
                r.add_term(key, h);
                key.wave = diff;
                r.add_term(key, -h);
            }
        }
    }

    std::map<TermKey, R> terms_;
};

inline FourierPoly<Complex> complexify(const FourierPoly<Rational>& p) {
    FourierPoly<Complex> out;
    for (const auto& [key, amp] : p.terms()) out.add_term(key, Complex(amp));
    return out;
}

}  // namespace sta
