#include <doctest.h>

#include "sta/generators.hpp"
#include "sta/maxwell.hpp"
#include "test_helpers.hpp"

using namespace sta;
using namespace t;

TEST_CASE("grade validation at construction") {
    CHECK_THROWS_AS(GMESystem(fconst(g(0)), MultivectorField<Rational>::zero(),
                              MultivectorField<Rational>::zero()),
                    grade_error);
    CHECK_THROWS_AS(GMESystem(fconst(g(0) * g(1)), fconst(g(0) * g(1)),
                              MultivectorField<Rational>::zero()),
                    grade_error);
    CHECK_THROWS_AS(SuperPotential(fconst(one()), MultivectorField<Rational>::zero()),
                    grade_error);
}

TEST_CASE("gme_residual examples") {
    auto zero1 = MultivectorField<Rational>::zero();
    GMESystem vacuum(fconst(mv(0b1100, 1)), zero1, zero1);  // constant g2^g3
    CHECK(gme_residual(vacuum).is_zero());

    auto F = fblade(0b0011, x(1));  // x1 g0^g1
    GMESystem sourced(F, fconst(g(0)), zero1);
    CHECK(gme_residual(sourced).is_zero());

    GMESystem unsourced(F, zero1, zero1);
    CHECK(gme_residual(unsourced) == fconst(g(0)));
}

TEST_CASE("split residuals") {
    auto zero1 = MultivectorField<Rational>::zero();
    GMESystem vacuum(fconst(mv(0b0101, 3)), zero1, zero1);
    auto [v1, v2] = gme_split_residuals(vacuum);
    CHECK(v1.is_zero());
    CHECK(v2.is_zero());

    GMESystem sourced(fblade(0b0011, x(1)), fconst(g(0)), zero1);
    auto [s1, s2] = gme_split_residuals(sourced);
    CHECK(s1.is_zero());
    CHECK(s2.is_zero());

    // a magnetic current with closed F shows up in the 3-form residual
    GMESystem mismatch(fconst(mv(0b0011, 1)), zero1, fconst(g(0)));
    auto [m1, m2] = gme_split_residuals(mismatch);
    CHECK(m1.is_zero());
    CHECK(m2 == hodge(fconst(g(0))));

    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
        GMESystem sys(random_pure_grade_field(rng, 2), random_pure_grade_field(rng, 1),
                      random_pure_grade_field(rng, 1));
        auto full = gme_residual(sys);
        auto [r1, r2] = gme_split_residuals(sys);
        CHECK(full == r2 - r1);
        CHECK(full.is_zero() == (r1.is_zero() && r2.is_zero()));
        // dual form of the 3-form half
        CHECK(codiff(hodge(sys.F)) - sys.Jm == -hodge(r2));
    }
}

TEST_CASE("superpotential field examples") {
    // A = x1 g0 satisfies the Lorenz condition; F = dA = g1 ^ g0
    SuperPotential a_only(fblade(0b0001, x(1)), MultivectorField<Rational>::zero());
    CHECK(superpotential_field(a_only) == fconst(wedge(g(1), g(0))));

    SuperPotential b_only(MultivectorField<Rational>::zero(), fblade(0b0001, x(1)));
    CHECK(superpotential_field(b_only) == fconst(g(2) * g(3)));

    SuperPotential constants(fconst(g(0) + g(2)), fconst(q(3) * g(1)));
    CHECK(superpotential_field(constants).is_zero());
}

TEST_CASE("gauge violations are rejected with the residual attached") {
    SuperPotential bad(fblade(0b0001, x(0)), MultivectorField<Rational>::zero());
    CHECK_THROWS_AS(superpotential_field(bad), gauge_error);
    CHECK_THROWS_AS(currents_from_potentials(bad), gauge_error);
    CHECK_THROWS_AS(wave_residuals(bad, MultivectorField<Rational>::zero(),
                                   MultivectorField<Rational>::zero()),
                    gauge_error);
    try {
        (void)superpotential_field(bad);
        CHECK(false);
    } catch (const gauge_error& e) {
        CHECK(!e.residual_dump().empty());
    }
}

TEST_CASE("currents_from_potentials examples") {
    SuperPotential linear(fblade(0b0001, x(1)), MultivectorField<Rational>::zero());
    auto [je0, jm0] = currents_from_potentials(linear);
    CHECK(je0.is_zero());
    CHECK(jm0.is_zero());

    // A = cos(x1) g0: Je = -codiff(d A) = cos(x1) g0 (the eta11 sign)
    WaveVector k1 = wave(0, 1, 0, 0);
    SuperPotential wavy(fblade(0b0001, cosw(k1)), MultivectorField<Rational>::zero());
    auto [je1, jm1] = currents_from_potentials(wavy);
    CHECK(je1 == fblade(0b0001, cosw(k1)));
    CHECK(jm1.is_zero());

    auto [je2, jm2] =
        currents_from_potentials(SuperPotential(MultivectorField<Rational>::zero(),
                                                MultivectorField<Rational>::zero()));
    CHECK(je2.is_zero());
    CHECK(jm2.is_zero());
}

TEST_CASE("full superpotential chain closes the GME") {
    Rng rng(88);
    for (int t = 0; t < 40; ++t) {
        auto sp = random_superpotential(rng);
        auto F = superpotential_field(sp);
        auto direct = dirac(sp.A + fconst(gamma5<Rational>()) * sp.B);
        CHECK(F == direct);
        auto [je, jm] = currents_from_potentials(sp);
        GMESystem sys(F, je, jm);
        CHECK(gme_residual(sys).is_zero());
        auto [ra, rb] = wave_residuals(sp, je, jm);
        CHECK(ra.is_zero());
        CHECK(rb.is_zero());
        // under the Lorenz condition the magnetic current is -codiff(dB)
        CHECK(jm == -codiff(d(sp.B)));
    }
}

TEST_CASE("volume-element commutation identities need no gauge") {
    CHECK(gamma5_commutation_identities(fblade(0b0001, x(1))).first.is_zero());
    CHECK(gamma5_commutation_identities(fblade(0b0001, x(1))).second.is_zero());
    CHECK(gamma5_commutation_identities(fblade(0b1000, cosw(wave(0, 0, 1, 0)))).first.is_zero());
    CHECK(
        gamma5_commutation_identities(fblade(0b1000, cosw(wave(0, 0, 1, 0)))).second.is_zero());
    CHECK(gamma5_commutation_identities(MultivectorField<Rational>::zero()).first.is_zero());
    Rng rng(6);
    for (int t = 0; t < 80; ++t) {
        auto b = random_pure_grade_field(rng, 1);  // no Lorenz assumption
        auto [r1, r2] = gamma5_commutation_identities(b);
        CHECK(r1.is_zero());
        CHECK(r2.is_zero());
    }
    CHECK_THROWS_AS(gamma5_commutation_identities(fconst(one())), grade_error);
}

TEST_CASE("wave residual example with explicit current") {
    WaveVector k1 = wave(0, 1, 0, 0);
    SuperPotential sp(fblade(0b0001, cosw(k1)), MultivectorField<Rational>::zero());
    auto [ra, rb] = wave_residuals(sp, fblade(0b0001, cosw(k1)),
                                   MultivectorField<Rational>::zero());
    CHECK(ra.is_zero());
    CHECK(rb.is_zero());
}
