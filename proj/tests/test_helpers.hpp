#pragma once

#include "sta/field.hpp"

namespace t {

using sta::BladeMask;
using sta::Complex;
using sta::FourierPoly;
using sta::Multivector;
using sta::MultivectorField;
using sta::Rational;
using sta::Trig;
using sta::WaveVector;

inline Rational q(long num, long den = 1) { return sta::rational(num, den); }

inline Multivector<Rational> g(int mu) { return Multivector<Rational>::generator(mu); }
inline Multivector<Rational> one() { return Multivector<Rational>::scalar(q(1)); }
inline Multivector<Rational> mv(BladeMask mask, long num = 1, long den = 1) {
    return Multivector<Rational>::blade(mask, q(num, den));
}

inline FourierPoly<Rational> x(int mu) { return FourierPoly<Rational>::coordinate(mu); }
inline FourierPoly<Rational> pconst(long num, long den = 1) {
    return FourierPoly<Rational>::constant(q(num, den));
}
inline WaveVector wave(long k0, long k1, long k2, long k3) {
    return WaveVector(q(k0), q(k1), q(k2), q(k3));
}
inline FourierPoly<Rational> cosw(const WaveVector& k) {
    return FourierPoly<Rational>::cosine(k);
}
inline FourierPoly<Rational> sinw(const WaveVector& k) {
    return FourierPoly<Rational>::sine(k);
}

inline MultivectorField<Rational> fconst(const Multivector<Rational>& m) {
    return MultivectorField<Rational>::constant(m);
}
inline MultivectorField<Rational> fscalar(const FourierPoly<Rational>& p) {
    return MultivectorField<Rational>::scalar(p);
}
inline MultivectorField<Rational> fblade(BladeMask mask, const FourierPoly<Rational>& p) {
    return MultivectorField<Rational>::blade_field(mask, p);
}

inline std::array<Rational, 4> at(long x0, long x1, long x2, long x3) {
    return {q(x0), q(x1), q(x2), q(x3)};
}

}  // namespace t
