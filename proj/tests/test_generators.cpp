#include <doctest.h>

#include "sta/generators.hpp"
#include "test_helpers.hpp"

using namespace sta;
using namespace t;

TEST_CASE("rest solution solves the equation at its own mass only") {
    auto psi = rest_solution(q(1));
    CHECK(dh_residual(psi, q(1)).is_zero());
    CHECK_FALSE(dh_residual(psi, q(2)).is_zero());
}

TEST_CASE("null plane wave requires a null wave vector") {
    CHECK_THROWS_AS(null_plane_wave(wave(1, 0, 0, 0), g(1)), error);
    CHECK_NOTHROW(null_plane_wave(wave(1, 0, 0, 1), g(1)));
    CHECK_NOTHROW(null_plane_wave(wave(3, 1, 2, 2), g(2)));
    // every family member is an exact massless solution
    Rng rng(1);
    for (const auto& psi : massless_solution_family(rng, 25))
        CHECK(dirac(psi.field()).is_zero());
}

TEST_CASE("massless family exercises all even grades") {
    Rng rng(2);
    auto family = massless_solution_family(rng, 40);
    bool scalar_seen = false, pseudo_seen = false;
    for (const auto& psi : family) {
        scalar_seen = scalar_seen || !grade(psi.field(), 0).is_zero();
        pseudo_seen = pseudo_seen || !grade(psi.field(), 4).is_zero();
    }
    CHECK(scalar_seen);
    CHECK(pseudo_seen);
}

TEST_CASE("dh family members are exact solutions") {
    Rng rng(3);
    Rational m(1);
    for (const auto& psi : dh_solution_family(rng, m, 30))
        CHECK(dh_residual(psi, m).is_zero());
}

TEST_CASE("spin elements are unit") {
    for (const auto& u : dh_stabilizer_spin_elements()) {
        CHECK(is_even(u.value()));
        CHECK(u.value() * reverse(u.value()) == one());
    }
}

TEST_CASE("lorenz generator output is exactly gauge-fixed") {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        auto a = random_lorenz_one_form(rng);
        CHECK(is_pure_grade(a, 1));
        CHECK(lorenz_residual(a).is_zero());
    }
}

TEST_CASE("gme family members are exact solutions") {
    Rng rng(5);
    for (const auto& sys : gme_solution_family(rng, 20))
        CHECK(gme_residual(sys).is_zero());
}

TEST_CASE("random corpora honor their options") {
    Rng rng(6);
    CorpusOptions opt;
    opt.max_degree = 2;
    for (int t = 0; t < 30; ++t) {
        auto p = random_poly(rng, opt);
        for (const auto& [key, amp] : p.terms()) {
            int degree = key.expo[0] + key.expo[1] + key.expo[2] + key.expo[3];
            CHECK(degree <= 2);
            CHECK_FALSE(ring<Rational>::is_zero(amp));
        }
        CHECK(is_even(random_even_field(rng)));
        CHECK(is_pure_grade(random_pure_grade_field(rng, 2), 2));
    }
}

TEST_CASE("seeded corpora are reproducible") {
    Rng a(42), b(42);
    for (int t = 0; t < 10; ++t) {
        CHECK(random_field(a) == random_field(b));
        CHECK(random_multivector(a) == random_multivector(b));
    }
}
