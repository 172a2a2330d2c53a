#pragma once

#include <array>
#include <string>

#include "sta/blade.hpp"
#include "sta/errors.hpp"
#include "sta/rational.hpp"

namespace sta {

/// Element of Cl(1,3) over an exact scalar ring R (Rational or Complex).
///
/// Sixteen blade coefficients, blade masks as in blade.hpp. All values
/// are immutable in spirit: every operation returns a fresh value and
/// never mutates shared state, so instances may be read concurrently.
template <typename R>
class Multivector {
public:
    Multivector() : c_{} {
        for (auto& x : c_) x = ring<R>::zero();
    }

    static Multivector zero() { return Multivector(); }

    static Multivector scalar(R value) {
        Multivector m;
        m.c_[kScalarBlade] = std::move(value);
        return m;
    }

    static Multivector blade(BladeMask mask, R coeff) {
        Multivector m;
        m.c_[mask] = std::move(coeff);
        return m;
    }

    static Multivector unit_blade(BladeMask mask) {
        return blade(mask, ring<R>::one());
    }

    /// The coframe generator g^mu.
    static Multivector generator(int mu) {
        return unit_blade(static_cast<BladeMask>(1u << mu));
    }

    /// Volume element g0 g1 g2 g3; squares to -1, anticommutes with odd
    /// grades.
    static Multivector volume() { return unit_blade(kVolumeBlade); }

    const R& operator[](BladeMask mask) const { return c_[mask]; }
    R& operator[](BladeMask mask) { return c_[mask]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!ring<R>::is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        for (int i = 0; i < kBladeCount; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) {
        return !(a == b);
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        Multivector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        Multivector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Multivector operator-(const Multivector& a) {
        Multivector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend Multivector operator*(const R& s, const Multivector& a) {
        Multivector r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend Multivector operator*(const Multivector& a, const R& s) { return s * a; }

    /// Geometric (Clifford) product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        Multivector r;
        for (int i = 0; i < kBladeCount; ++i) {
            if (ring<R>::is_zero(a.c_[i])) continue;
            for (int j = 0; j < kBladeCount; ++j) {
                if (ring<R>::is_zero(b.c_[j])) continue;
                auto p = blade_product(static_cast<BladeMask>(i),
                                       static_cast<BladeMask>(j));
                R term = a.c_[i] * b.c_[j];
                if (p.sign < 0) term = -term;
                r.c_[p.mask] += term;
            }
        }
        return r;
    }

    Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
    Multivector& operator-=(const Multivector& o) { return *this = *this - o; }

    std::string str() const {
        std::string s;
        for (int i = 0; i < kBladeCount; ++i) {
            if (ring<R>::is_zero(c_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + ring<R>::str(c_[i]) + ")*" + blade_name(static_cast<BladeMask>(i));
        }
        return s.empty() ? "0" : s;
    }

private:
    std::array<R, kBladeCount> c_;
};

/// Exterior part of the product: for blades, nonzero only when the factor
/// sets are disjoint. Extends the grade-(r+s) projection bilinearly.
template <typename R>
Multivector<R> wedge(const Multivector<R>& a, const Multivector<R>& b) {
    Multivector<R> r;
    for (int i = 0; i < kBladeCount; ++i) {
        if (ring<R>::is_zero(a[static_cast<BladeMask>(i)])) continue;
        for (int j = 0; j < kBladeCount; ++j) {
            if ((i & j) != 0) continue;
            if (ring<R>::is_zero(b[static_cast<BladeMask>(j)])) continue;
            auto p = blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
            R term = a[static_cast<BladeMask>(i)] * b[static_cast<BladeMask>(j)];
            if (p.sign < 0) term = -term;
            r[p.mask] += term;
        }
    }
    return r;
}

/// Left contraction: for blades, nonzero only when a's factors all occur
/// in b. Extends the grade-(s-r) projection bilinearly; vanishes when
/// grade(a) > grade(b).
template <typename R>
Multivector<R> lcontract(const Multivector<R>& a, const Multivector<R>& b) {
    Multivector<R> r;
    for (int i = 0; i < kBladeCount; ++i) {
        if (ring<R>::is_zero(a[static_cast<BladeMask>(i)])) continue;
        for (int j = 0; j < kBladeCount; ++j) {
            if ((i & ~j) != 0) continue;
            if (ring<R>::is_zero(b[static_cast<BladeMask>(j)])) continue;
            auto p = blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
            R term = a[static_cast<BladeMask>(i)] * b[static_cast<BladeMask>(j)];
            if (p.sign < 0) term = -term;
            r[p.mask] += term;
        }
    }
    return r;
}

/// Grade-r projection <a>_r.
template <typename R>
Multivector<R> grade(const Multivector<R>& a, int r) {
    if (r < 0 || r > 4) throw grade_error("grade selector outside 0..4");
    Multivector<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        if (blade_grade(static_cast<BladeMask>(i)) == r)
            out[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)];
    return out;
}

/// Reversion: sign (-1)^{r(r-1)/2} per grade; an anti-automorphism.
template <typename R>
Multivector<R> reverse(const Multivector<R>& a) {
    Multivector<R> out;
    for (int i = 0; i < kBladeCount; ++i) {
        BladeMask m = static_cast<BladeMask>(i);
        out[m] = reversion_sign(blade_grade(m)) < 0 ? -a[m] : a[m];
    }
    return out;
}

template <typename R>
Multivector<R> even_part(const Multivector<R>& a) {
    Multivector<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        if ((blade_grade(static_cast<BladeMask>(i)) & 1) == 0)
            out[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)];
    return out;
}

template <typename R>
bool is_even(const Multivector<R>& a) {
    for (int i = 0; i < kBladeCount; ++i)
        if ((blade_grade(static_cast<BladeMask>(i)) & 1) != 0 &&
            !ring<R>::is_zero(a[static_cast<BladeMask>(i)]))
            return false;
    return true;
}

template <typename R>
Multivector<R> gamma5() {
    return Multivector<R>::volume();
}

/// Hodge star as reversion followed by the volume element.
template <typename R>
Multivector<R> hodge(const Multivector<R>& a) {
    return reverse(a) * gamma5<R>();
}

/// Sign of the double Hodge star on homogeneous grade r, computed from
/// the operator itself rather than a closed formula.
inline int double_hodge_sign(int r) {
    if (r < 0 || r > 4) throw grade_error("grade outside 0..4");
    BladeMask m = static_cast<BladeMask>((1u << r) - 1u);  // lowest blade of grade r
    auto b = Multivector<Rational>::unit_blade(m);
    auto twice = hodge(hodge(b));
    if (twice == b) return 1;
    if (twice == -b) return -1;
    throw error("double Hodge star is not a sign on a basis blade");
}

inline Multivector<Complex> complexify(const Multivector<Rational>& a) {
    Multivector<Complex> out;
    for (int i = 0; i < kBladeCount; ++i)
        out[static_cast<BladeMask>(i)] = Complex(a[static_cast<BladeMask>(i)]);
    return out;
}

}  // namespace sta
