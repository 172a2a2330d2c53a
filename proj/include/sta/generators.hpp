#pragma once

#include <vector>

#include "sta/hertz.hpp"
#include "sta/maxwell.hpp"
#include "sta/rng.hpp"
#include "sta/spinor.hpp"

namespace sta {

// Exact solution families and seeded random corpora. Every generated
// solution satisfies its defining residual identically; the test suites
// re-check that rather than trusting the construction.

/// Knobs for random Fourier-polynomial corpora: blades carry up to
/// max_terms terms, monomials up to total degree max_degree, phases drawn
/// from a small pool of rational wave vectors.
struct CorpusOptions {
    int max_terms = 3;
    int max_degree = 3;
    int max_phases = 3;
};

FourierPoly<Rational> random_poly(Rng& rng, const CorpusOptions& opt = {});
Multivector<Rational> random_multivector(Rng& rng);
Multivector<Complex> random_complex_multivector(Rng& rng);
MultivectorField<Rational> random_field(Rng& rng, const CorpusOptions& opt = {});
MultivectorField<Rational> random_even_field(Rng& rng, const CorpusOptions& opt = {});
MultivectorField<Rational> random_pure_grade_field(Rng& rng, int grade,
                                                   const CorpusOptions& opt = {});

/// Random 1-form with codiff = 0: each component is independent of its
/// own coordinate (both in the monomial and in the phase).
MultivectorField<Rational> random_lorenz_one_form(Rng& rng, const CorpusOptions& opt = {});

/// Rest-frame Dirac-Hestenes solution  cos(m x0) - g2 g1 sin(m x0).
DHRepresentative rest_solution(const Rational& m);

/// Massless solution  psi = kslash X (cos phi + g2 g1 sin phi) with
/// phi = k_mu x^mu. Requires a null wave vector (kslash squares to the
/// Minkowski square of k, so nullity is what kills dirac(psi)); X is any
/// constant odd element.
DHRepresentative null_plane_wave(const WaveVector& k, const Multivector<Rational>& x_odd);

/// Seeded massless solutions: null wave vectors from a rational pool,
/// random odd factors (grade 1 and grade 3 so the scalar and
/// pseudoscalar parts of psi are exercised), random superpositions.
std::vector<DHRepresentative> massless_solution_family(Rng& rng, int count);

/// Massive plane-wave solution of the Dirac-Hestenes equation along a
/// spatial axis: psi = L (cos phi - g2 g1 sin phi) with
/// L = (E + m) + p g_axis g_0 and phi = E x0 + p x_axis, on the rational
/// mass shell E^2 = m^2 + p^2.
DHRepresentative massive_plane_wave(const Rational& m, int axis, const Rational& energy,
                                    const Rational& momentum);

/// Unit even elements for spin-frame changes: rational rotations
/// a + b g2 g1 with a^2 + b^2 = 1, plus the blade g2 g1 itself.
std::vector<SpinElement> dh_stabilizer_spin_elements();

/// Dirac-Hestenes solutions of mass m: rest solution, rational-rotation
/// transports, massive plane waves on rational mass shells, scalings and
/// superpositions.
std::vector<DHRepresentative> dh_solution_family(Rng& rng, const Rational& m, int count);

/// Hertz data read off an even field by grade split (the potentials are
/// the grade parts of psi up to the fixed sign conventions).
HertzData hertz_from_psi(const DHRepresentative& psi, const Rational& m);

/// The rest-frame Hertz solution: G = -cos(m x0), Pi = -g2 g1 sin(m x0),
/// P = 0.
HertzData hertz_rest(const Rational& m);

/// Lorenz pairs (A, B) plus systems derived from them through the
/// superpotential chain; gme_residual vanishes by construction.
SuperPotential random_superpotential(Rng& rng, const CorpusOptions& opt = {});
GMESystem gme_from_superpotential(const SuperPotential& sp);

/// GME solutions: constant 2-forms with zero currents and
/// superpotential-derived systems.
std::vector<GMESystem> gme_solution_family(Rng& rng, int count);

}  // namespace sta
