#pragma once

#include <array>
#include <utility>

#include "sta/spinor.hpp"

namespace sta {

// The Hertz-potential construction is written with lowered-index frame
// blades. They are expanded through the metric once, here, and nowhere
// else: g_0 = g^0, g_k = -g^k, and the lowered volume element
// g_0 g_1 g_2 g_3 = -g^0 g^1 g^2 g^3.

inline Multivector<Rational> gamma_lower(int mu) {
    auto g = Multivector<Rational>::generator(mu);
    return mu == 0 ? g : -g;
}

inline Multivector<Rational> gamma_lower_012() {
    return gamma_lower(0) * gamma_lower(1) * gamma_lower(2);
}

inline Multivector<Rational> gamma_lower_21() {
    return gamma_lower(2) * gamma_lower(1);
}

inline Multivector<Rational> volume_lower() {
    return gamma_lower(0) * gamma_lower(1) * gamma_lower(2) * gamma_lower(3);
}

/// Hertz 2-form potential with its two scalar potentials and the mass
/// constant tying them together.
struct HertzData {
    MultivectorField<Rational> Pi;
    FourierPoly<Rational> G;
    FourierPoly<Rational> P;
    Rational m;

    HertzData(MultivectorField<Rational> pi, FourierPoly<Rational> g,
              FourierPoly<Rational> p, Rational mass)
        : Pi(std::move(pi)), G(std::move(g)), P(std::move(p)), m(std::move(mass)) {
        if (!is_pure_grade(Pi, 2)) throw grade_error("Pi must be a pure 2-form field");
    }

    friend HertzData operator+(const HertzData& a, const HertzData& b) {
        if (a.m != b.m) throw error("cannot superpose Hertz data of different mass");
        return HertzData(a.Pi + b.Pi, a.G + b.G, a.P + b.P, a.m);
    }
    friend HertzData operator*(const Rational& s, const HertzData& h) {
        return HertzData(s * h.Pi, s * h.G, s * h.P, h.m);
    }
};

/// Electromagnetic potential  A = dirac(G) + m P g_3 + m <Pi g_012>_1.
inline MultivectorField<Rational> em_potential(const HertzData& h) {
    auto g3 = MultivectorField<Rational>::constant(gamma_lower(3));
    auto g012 = MultivectorField<Rational>::constant(gamma_lower_012());
    auto scalar_G = MultivectorField<Rational>::scalar(h.G);
    auto scalar_P = MultivectorField<Rational>::scalar(h.P);
    return dirac(scalar_G) + h.m * (scalar_P * g3) + h.m * grade(h.Pi * g012, 1);
}

/// Stratton potential as a 3-form:
///   g_5 S = g_5 (dirac(P) + m G g_3 - g_5 <m Pi g_012>_3).
inline MultivectorField<Rational> stratton_potential(const HertzData& h) {
    auto g3 = MultivectorField<Rational>::constant(gamma_lower(3));
    auto g012 = MultivectorField<Rational>::constant(gamma_lower_012());
    auto g5 = MultivectorField<Rational>::constant(volume_lower());
    auto scalar_G = MultivectorField<Rational>::scalar(h.G);
    auto scalar_P = MultivectorField<Rational>::scalar(h.P);
    auto inner = dirac(scalar_P) + h.m * (scalar_G * g3) -
                 g5 * grade(h.m * (h.Pi * g012), 3);
    return g5 * inner;
}

/// dirac(Pi) - A - g_5 S: zero exactly on Hertz solutions.
inline MultivectorField<Rational> hertz_residual(const HertzData& h) {
    return dirac(h.Pi) - em_potential(h) - stratton_potential(h);
}

/// The four subsidiary conditions, reported as residuals:
///   r4 = diamond(A) - Je
///   r5 = diamond(g_5 S)
///   r6 = diamond(G) + m (dirac-contraction of <Pi g_012>_1)
///   r7 = diamond(P) - m (dirac-contraction of g_5 <Pi g_012>_3)
/// The free-electron case takes Je = 0; a nonzero Je is accepted for
/// residual reporting only.
inline std::array<MultivectorField<Rational>, 4> subsidiary_residuals(
    const HertzData& h, const MultivectorField<Rational>& je) {
    if (!is_pure_grade(je, 1)) throw grade_error("Je must be a pure 1-form field");
    auto g012 = MultivectorField<Rational>::constant(gamma_lower_012());
    auto g5 = MultivectorField<Rational>::constant(volume_lower());
    auto pi_g012 = h.Pi * g012;
    auto r4 = diamond(em_potential(h)) - je;
    auto r5 = diamond(stratton_potential(h));
    auto r6 = diamond(MultivectorField<Rational>::scalar(h.G)) +
              h.m * dirac_contract(grade(pi_g012, 1));
    auto r7 = diamond(MultivectorField<Rational>::scalar(h.P)) -
              h.m * dirac_contract(g5 * grade(pi_g012, 3));
    return {std::move(r4), std::move(r5), std::move(r6), std::move(r7)};
}

/// psi = -G + Pi + g_5 P, an even field by construction.
inline DHRepresentative assemble_psi(const HertzData& h) {
    MultivectorField<Rational> psi = h.Pi;
    psi[kScalarBlade] -= h.G;
    auto g5 = volume_lower();
    // volume_lower() is -g^0g^1g^2g^3, so the blade coefficient is -P.
    psi[kVolumeBlade] += g5[kVolumeBlade] * h.P;
    return DHRepresentative(std::move(psi));
}

/// Outcome of the electron construction: whether the Hertz constraint
/// holds, whether the assembled field solves the Dirac-Hestenes
/// equation, and both residuals for inspection when either fails.
struct ElectronTheoremOutcome {
    MultivectorField<Rational> hertz_res;
    MultivectorField<Rational> dh_res;
    bool premise_holds = false;
    bool conclusion_holds = false;
    bool implication_holds = false;
};

inline ElectronTheoremOutcome electron_theorem_check(const HertzData& h) {
    ElectronTheoremOutcome out;
    out.hertz_res = hertz_residual(h);
    out.dh_res = dh_residual(assemble_psi(h), h.m);
    out.premise_holds = out.hertz_res.is_zero();
    out.conclusion_holds = out.dh_res.is_zero();
    out.implication_holds = !out.premise_holds || out.conclusion_holds;
    return out;
}

}  // namespace sta
