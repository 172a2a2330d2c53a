#include <doctest.h>

#include "sta/generators.hpp"
#include "test_helpers.hpp"

using namespace sta;
using namespace t;

TEST_CASE("fourier poly canonical form") {
    // cos(-k x) folds onto cos(k x); sin flips its amplitude
    WaveVector k = wave(1, 0, -2, 0);
    WaveVector mk = wave(-1, 0, 2, 0);
    CHECK(FourierPoly<Rational>::cosine(k) == FourierPoly<Rational>::cosine(mk));
    CHECK(FourierPoly<Rational>::sine(mk) ==
          FourierPoly<Rational>::wave(Trig::sin, k, q(-1)));
    // zero wave vector collapses: cos -> 1, sin -> 0
    CHECK(FourierPoly<Rational>::cosine(wave(0, 0, 0, 0)) == pconst(1));
    CHECK(FourierPoly<Rational>::sine(wave(0, 0, 0, 0)).is_zero());
    // merge and cancel
    auto p = pconst(1, 2) + pconst(1, 2) - pconst(1);
    CHECK(p.is_zero());
}

TEST_CASE("product-to-sum identities") {
    WaveVector ka = wave(1, 0, 0, 0), kb = wave(0, 2, 0, 0);
    auto ca = cosw(ka), cb = cosw(kb), sa = sinw(ka), sb = sinw(kb);
    // sin^2 + cos^2 = 1
    CHECK(ca * ca + sa * sa == pconst(1));
    // cos(a)cos(b) - sin(a)sin(b) = cos(a+b)
    CHECK(ca * cb - sa * sb == cosw(ka + kb));
    // sin(a)cos(b) + cos(a)sin(b) = sin(a+b)
    CHECK(sa * cb + ca * sb == sinw(ka + kb));
    // derivative of a product of waves obeys Leibniz
    auto prod = ca * sb;
    CHECK(prod.partial(0) == ca.partial(0) * sb);
    CHECK(prod.partial(1) == ca * sb.partial(1));
}

TEST_CASE("partial derivative examples") {
    CHECK(partial(fscalar(x(0)), 0) == fscalar(pconst(1)));
    WaveVector k = wave(3, 0, 0, 0);  // m = 3
    CHECK(partial(fscalar(cosw(k)), 0) ==
          fscalar(FourierPoly<Rational>::wave(Trig::sin, k, q(-3))));
    CHECK(partial(fblade(0b0011, x(1)), 1) == fblade(0b0011, pconst(1)));
    // commuting second derivatives
    auto f = fblade(0b0101, x(0) * x(2) * sinw(wave(1, 1, 0, 0)));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            CHECK(partial(partial(f, mu), nu) == partial(partial(f, nu), mu));
}

TEST_CASE("dirac operator examples") {
    CHECK(dirac(fconst(mv(0b0110, 5))).is_zero());
    CHECK(dirac(fscalar(x(1)) * fconst(g(0))) == fconst(g(1) * g(0)));
    WaveVector k = wave(2, 0, 0, 0);
    CHECK(dirac(fscalar(cosw(k))) ==
          fblade(0b0001, FourierPoly<Rational>::wave(Trig::sin, k, q(-2))));
}

TEST_CASE("d and codiff examples") {
    CHECK(d(fscalar(x(0))) == fconst(g(0)));
    CHECK(codiff(fscalar(x(0)) * fconst(g(0))) == fconst(-one()));
    CHECK(codiff(fscalar(x(1)) * fconst(g(0))).is_zero());
}

TEST_CASE("diamond examples") {
    CHECK(diamond(fscalar(x(0) * x(0))) == fscalar(pconst(2)));
    WaveVector k = wave(3, 0, 0, 0);
    CHECK(diamond(fscalar(cosw(k))) == fscalar(q(-9) * cosw(k)));
    auto linear = fscalar(x(1)) * fconst(g(0) * g(2)) + fscalar(x(3)) * fconst(one());
    CHECK(diamond(linear).is_zero());
}

TEST_CASE("exterior calculus identities on a random corpus") {
    Rng rng(99);
    for (int t = 0; t < 150; ++t) {
        auto f = random_field(rng);
        CHECK(dirac(f) == d(f) - codiff(f));
        CHECK(d(d(f)).is_zero());
        CHECK(codiff(codiff(f)).is_zero());
        CHECK(diamond(f) == -(d(codiff(f)) + codiff(d(f))));
    }
}

TEST_CASE("leibniz rule for fields") {
    Rng rng(100);
    CorpusOptions opt;
    opt.max_terms = 2;
    for (int t = 0; t < 60; ++t) {
        auto f = random_field(rng, opt);
        auto h = random_field(rng, opt);
        for (int mu = 0; mu < 4; ++mu)
            CHECK(partial(f * h, mu) == partial(f, mu) * h + f * partial(h, mu));
    }
}

TEST_CASE("eval_at examples") {
    CHECK(eval_at(fscalar(x(1)) * fconst(g(0)), at(0, 3, 0, 0)) == mv(0b0001, 3));
    WaveVector k = wave(2, 0, 0, 0);
    CHECK(eval_at(fscalar(cosw(k)), at(0, 5, -1, 2)) == one());
    CHECK(eval_at(fscalar(sinw(k)), at(0, 0, 0, 0)).is_zero());
    // nonzero phase value cannot be evaluated exactly
    CHECK_THROWS_AS(eval_at(fscalar(sinw(k)), at(1, 0, 0, 0)), exactness_error);
    CHECK_THROWS_AS(eval_at(fscalar(cosw(k)), at(3, 0, 0, 0)), exactness_error);
    // mixed monomial evaluation stays exact
    auto f = fscalar(x(0) * x(0) * x(3)) * fconst(mv(0b1100, 1, 2));
    CHECK(eval_at(f, at(2, 0, 0, 3)) == mv(0b1100, 6));
}

TEST_CASE("parallel product kernel equals the serial reference") {
    Rng rng(4242);
    CorpusOptions big;
    big.max_terms = 7;
    big.max_phases = 5;
    for (int t = 0; t < 10; ++t) {
        auto a = random_field(rng, big) + random_field(rng, big);
        auto b = random_field(rng, big) + random_field(rng, big);
        CHECK(multiply_parallel(a, b) == multiply_serial(a, b));
        CHECK(a * b == multiply_serial(a, b));
    }
}

TEST_CASE("field lifts agree pointwise with constant algebra") {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        auto a = random_multivector(rng);
        auto b = random_multivector(rng);
        CHECK(fconst(a) * fconst(b) == fconst(a * b));
        CHECK(wedge(fconst(a), fconst(b)) == fconst(wedge(a, b)));
        CHECK(lcontract(fconst(a), fconst(b)) == fconst(lcontract(a, b)));
        CHECK(hodge(fconst(a)) == fconst(hodge(a)));
        CHECK(reverse(fconst(a)) == fconst(reverse(a)));
    }
}
