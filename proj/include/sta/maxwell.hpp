#pragma once

#include <utility>

#include "sta/field.hpp"

namespace sta {

/// Field strength with electric and magnetic current sources. Grades are
/// checked at construction: F a 2-form, both currents 1-forms.
struct GMESystem {
    MultivectorField<Rational> F;
    MultivectorField<Rational> Je;
    MultivectorField<Rational> Jm;

    GMESystem(MultivectorField<Rational> f, MultivectorField<Rational> je,
              MultivectorField<Rational> jm)
        : F(std::move(f)), Je(std::move(je)), Jm(std::move(jm)) {
        if (!is_pure_grade(F, 2)) throw grade_error("F must be a pure 2-form field");
        if (!is_pure_grade(Je, 1)) throw grade_error("Je must be a pure 1-form field");
        if (!is_pure_grade(Jm, 1)) throw grade_error("Jm must be a pure 1-form field");
    }
};

/// Potential pair generating F = dA + *dB once both satisfy the Lorenz
/// condition. The combination A + g5 B is the superpotential; no single
/// 1-form potential can source a magnetic current.
struct SuperPotential {
    MultivectorField<Rational> A;
    MultivectorField<Rational> B;

    SuperPotential(MultivectorField<Rational> a, MultivectorField<Rational> b)
        : A(std::move(a)), B(std::move(b)) {
        if (!is_pure_grade(A, 1)) throw grade_error("A must be a pure 1-form field");
        if (!is_pure_grade(B, 1)) throw grade_error("B must be a pure 1-form field");
    }
};

inline MultivectorField<Rational> gamma5_field() {
    return MultivectorField<Rational>::constant(gamma5<Rational>());
}

/// dirac(F) - Je - g5 Jm; identically zero iff the system solves the
/// generalized Maxwell equation.
inline MultivectorField<Rational> gme_residual(const GMESystem& sys) {
    return dirac(sys.F) - sys.Je - gamma5_field() * sys.Jm;
}

/// Grade split of the same equation: the 1-form part codiff(F) + Je and
/// the 3-form part d(F) + *Jm. Their difference reassembles the full
/// residual, so both vanish exactly when it does.
inline std::pair<MultivectorField<Rational>, MultivectorField<Rational>>
gme_split_residuals(const GMESystem& sys) {
    return {codiff(sys.F) + sys.Je, d(sys.F) + hodge(sys.Jm)};
}

/// Residual of the Lorenz condition codiff(X) = 0 for a 1-form X.
inline MultivectorField<Rational> lorenz_residual(const MultivectorField<Rational>& x) {
    if (!is_pure_grade(x, 1)) throw grade_error("Lorenz condition applies to 1-forms");
    return codiff(x);
}

namespace detail {

std::string dump_field(const MultivectorField<Rational>& f);

inline void require_lorenz(const SuperPotential& sp) {
    auto ra = lorenz_residual(sp.A);
    if (!ra.is_zero())
        throw gauge_error("A violates the Lorenz condition", dump_field(ra));
    auto rb = lorenz_residual(sp.B);
    if (!rb.is_zero())
        throw gauge_error("B violates the Lorenz condition", dump_field(rb));
}

}  // namespace detail

/// F = d(A) + *d(B). Requires the Lorenz condition on both potentials;
/// under it this equals dirac(A + g5 B).
inline MultivectorField<Rational> superpotential_field(const SuperPotential& sp) {
    detail::require_lorenz(sp);
    return d(sp.A) + hodge(d(sp.B));
}

/// The currents the superpotential field sources:
///   Je = -codiff(d(A)),     g5 Jm = d(*d(B)).
/// The 3-form equation is inverted through the double-Hodge sign computed
/// from the operator itself. With these currents the generalized Maxwell
/// residual of superpotential_field vanishes identically.
inline std::pair<MultivectorField<Rational>, MultivectorField<Rational>>
currents_from_potentials(const SuperPotential& sp) {
    detail::require_lorenz(sp);
    auto je = -codiff(d(sp.A));
    // g5 Jm = d*dB, i.e. *Jm = -d*dB. Apply the star once more and divide
    // by the grade-1 double-Hodge sign to isolate Jm.
    auto starred = -hodge(d(hodge(d(sp.B))));
    auto jm = double_hodge_sign(1) < 0 ? -starred : starred;
    return {std::move(je), std::move(jm)};
}

/// The two volume-element commutation identities behind the
/// superpotential construction: for every 1-form B, exactly and with no
/// gauge assumption,
///   wedge part of dirac(g5 B)        = *codiff(B),
///   contraction part of dirac(g5 B)  = *d(B).
inline std::pair<MultivectorField<Rational>, MultivectorField<Rational>>
gamma5_commutation_identities(const MultivectorField<Rational>& b) {
    if (!is_pure_grade(b, 1)) throw grade_error("identities apply to 1-form fields");
    auto g5b = gamma5_field() * b;
    auto r1 = d(g5b) - hodge(codiff(b));
    auto r2 = dirac_contract(g5b) - hodge(d(b));
    return {std::move(r1), std::move(r2)};
}

/// Wave residuals diamond(A) - Je and diamond(B) - Jm. Both vanish when
/// the currents come from currents_from_potentials.
inline std::pair<MultivectorField<Rational>, MultivectorField<Rational>>
wave_residuals(const SuperPotential& sp, const MultivectorField<Rational>& je,
               const MultivectorField<Rational>& jm) {
    detail::require_lorenz(sp);
    return {diamond(sp.A) - je, diamond(sp.B) - jm};
}

}  // namespace sta
