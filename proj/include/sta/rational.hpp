#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <type_traits>

#include "sta/errors.hpp"

namespace sta {

/// Exact rational scalar. Arbitrary-precision numerator/denominator,
/// always stored canonicalized (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" (or a bare integer "p"). Decimal notation is rejected:
/// every scalar in the engine stays an exact fraction.
Rational rational_from_string(const std::string& text);

/// Canonical "p/q" form, denominator always written ("3" -> "3/1").
std::string rational_to_string(const Rational& q);

/// Complexified rational scalar: the coefficient ring of the minimal
/// left ideal. Exact in both components.
struct Complex {
    Rational re;
    Rational im;

    Complex() : re(0), im(0) {}
    Complex(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r, long i = 0) : re(r), im(i) {}

    static Complex i() { return Complex(Rational(0), Rational(1)); }

    Complex conj() const { return Complex(re, -im); }
    Rational norm2() const { return re * re + im * im; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Rational n = b.norm2();
        if (n == 0) throw error("complex division by zero");
        return Complex((a.re * b.re + a.im * b.im) / n,
                       (a.im * b.re - a.re * b.im) / n);
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
    friend bool operator<(const Complex& a, const Complex& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

std::string complex_to_string(const Complex& z);

// Uniform access to ring operations for code templated over the scalar
// ring. Mixing rings in one expression is a compile-time type error;
// complexify() is the only crossing point.
template <typename R>
struct ring;

template <>
struct ring<Rational> {
    static constexpr bool is_complex = false;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
    static std::string str(const Rational& x) { return rational_to_string(x); }
};

template <>
struct ring<Complex> {
    static constexpr bool is_complex = true;
    static Complex zero() { return Complex(); }
    static Complex one() { return Complex(Rational(1)); }
    static Complex from_int(long n) { return Complex(Rational(n)); }
    static Complex from_rational(const Rational& q) { return Complex(q); }
    static bool is_zero(const Complex& x) { return x.re == 0 && x.im == 0; }
    static Complex scale(const Complex& x, const Rational& q) {
        return Complex(x.re * q, x.im * q);
    }
    static std::string str(const Complex& x) { return complex_to_string(x); }
};

/// Three-way comparison for map keys holding rationals.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace sta
