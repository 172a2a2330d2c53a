#include "sta/generators.hpp"

#include <array>

namespace sta {

namespace {

// Rational null wave vectors (k0^2 = k1^2 + k2^2 + k3^2) used by the
// massless family.
const std::array<WaveVector, 6>& null_pool() {
    static const std::array<WaveVector, 6> pool = {
        WaveVector(rational(1), rational(0), rational(0), rational(1)),
        WaveVector(rational(1), rational(1), rational(0), rational(0)),
        WaveVector(rational(5, 2), rational(3, 2), rational(2), rational(0)),
        WaveVector(rational(3), rational(1), rational(2), rational(2)),
        WaveVector(rational(7), rational(2), rational(3), rational(6)),
        WaveVector(rational(13, 3), rational(1), rational(4, 3), rational(4)),
    };
    return pool;
}

// Rational mass shells (E/m, p/m) with E^2 - p^2 = m^2, from scaled
// Pythagorean triples.
struct Shell {
    Rational energy_over_m;
    Rational momentum_over_m;
};

const std::array<Shell, 4>& shell_pool() {
    static const std::array<Shell, 4> pool = {
        Shell{rational(5, 4), rational(3, 4)},
        Shell{rational(5, 3), rational(4, 3)},
        Shell{rational(13, 12), rational(5, 12)},
        Shell{rational(17, 8), rational(15, 8)},
    };
    return pool;
}

// Rational points on the unit circle for spin rotations a + b g2 g1.
const std::array<std::pair<Rational, Rational>, 4>& circle_pool() {
    static const std::array<std::pair<Rational, Rational>, 4> pool = {
        std::pair<Rational, Rational>{rational(3, 5), rational(4, 5)},
        std::pair<Rational, Rational>{rational(4, 5), rational(-3, 5)},
        std::pair<Rational, Rational>{rational(5, 13), rational(12, 13)},
        std::pair<Rational, Rational>{rational(8, 17), rational(-15, 17)},
    };
    return pool;
}

WaveVector random_pool_wave(Rng& rng) {
    const auto& pool = null_pool();
    WaveVector k = pool[static_cast<std::size_t>(rng.range(0, static_cast<long>(pool.size()) - 1))];
    Rational scale = rng.small_rational(true);
    return WaveVector(scale * k.k[0], scale * k.k[1], scale * k.k[2], scale * k.k[3]);
}

// Generic (not necessarily null) rational wave vectors for corpora.
WaveVector random_wave(Rng& rng) {
    WaveVector k;
    for (int mu = 0; mu < 4; ++mu) k.k[mu] = rational(rng.range(-3, 3), rng.range(1, 2));
    if (k.is_zero()) k.k[0] = rational(1);
    return k;
}

TermKey random_key(Rng& rng, const CorpusOptions& opt, int phase_budget) {
    TermKey key;
    int degree_left = opt.max_degree;
    for (int mu = 0; mu < 4; ++mu) {
        int e = static_cast<int>(rng.range(0, degree_left > 1 ? 1 : degree_left));
        if (rng.chance(1, 3)) e = static_cast<int>(rng.range(0, degree_left));
        key.expo[mu] = static_cast<std::uint16_t>(e);
        degree_left -= e;
        if (degree_left <= 0) break;
    }
    if (phase_budget > 0 && rng.chance(1, 2)) {
        key.has_phase = true;
        key.trig = rng.chance(1, 2) ? Trig::cos : Trig::sin;
        key.wave = random_wave(rng);
    }
    return key;
}

const Multivector<Rational>& g21_upper() {
    static const Multivector<Rational> b =
        Multivector<Rational>::generator(2) * Multivector<Rational>::generator(1);
    return b;
}

}  // namespace

FourierPoly<Rational> random_poly(Rng& rng, const CorpusOptions& opt) {
    FourierPoly<Rational> p;
    int terms = static_cast<int>(rng.range(1, opt.max_terms));
    int phase_budget = opt.max_phases;
    for (int t = 0; t < terms; ++t) {
        TermKey key = random_key(rng, opt, phase_budget);
        if (key.has_phase) --phase_budget;
        p.add_term(key, rng.small_rational(true));
    }
    return p;
}

Multivector<Rational> random_multivector(Rng& rng) {
    Multivector<Rational> m;
    for (int i = 0; i < kBladeCount; ++i)
        if (rng.chance(1, 2)) m[static_cast<BladeMask>(i)] = rng.small_rational();
    return m;
}

Multivector<Complex> random_complex_multivector(Rng& rng) {
    Multivector<Complex> m;
    for (int i = 0; i < kBladeCount; ++i)
        if (rng.chance(1, 2)) m[static_cast<BladeMask>(i)] = rng.small_complex();
    return m;
}

MultivectorField<Rational> random_field(Rng& rng, const CorpusOptions& opt) {
    MultivectorField<Rational> f;
    int blades = static_cast<int>(rng.range(1, 3));
    for (int b = 0; b < blades; ++b)
        f[static_cast<BladeMask>(rng.range(0, kBladeCount - 1))] += random_poly(rng, opt);
    return f;
}

MultivectorField<Rational> random_even_field(Rng& rng, const CorpusOptions& opt) {
    static const std::array<BladeMask, 8> even_masks = {0b0000, 0b0011, 0b0101, 0b0110,
                                                        0b1001, 0b1010, 0b1100, 0b1111};
    MultivectorField<Rational> f;
    int blades = static_cast<int>(rng.range(1, 3));
    for (int b = 0; b < blades; ++b)
        f[even_masks[static_cast<std::size_t>(rng.range(0, 7))]] += random_poly(rng, opt);
    return f;
}

MultivectorField<Rational> random_pure_grade_field(Rng& rng, int grade,
                                                   const CorpusOptions& opt) {
    MultivectorField<Rational> f;
    int blades = static_cast<int>(rng.range(1, 3));
    for (int b = 0; b < blades; ++b) {
        BladeMask m;
        do {
            m = static_cast<BladeMask>(rng.range(0, kBladeCount - 1));
        } while (blade_grade(m) != grade);
        f[m] += random_poly(rng, opt);
    }
    return f;
}

MultivectorField<Rational> random_lorenz_one_form(Rng& rng, const CorpusOptions& opt) {
    MultivectorField<Rational> a;
    for (int nu = 0; nu < 4; ++nu) {
        if (!rng.chance(2, 3)) continue;
        FourierPoly<Rational> p;
        int terms = static_cast<int>(rng.range(1, opt.max_terms));
        for (int t = 0; t < terms; ++t) {
            TermKey key = random_key(rng, opt, opt.max_phases);
            key.expo[nu] = 0;          // the component must not see x^nu
            if (key.has_phase) {
                key.wave.k[nu] = 0;
                if (key.wave.is_zero()) key.has_phase = false;
            }
            p.add_term(key, rng.small_rational(true));
        }
        a[static_cast<BladeMask>(1u << nu)] += p;
    }
    return a;
}

DHRepresentative rest_solution(const Rational& m) {
    WaveVector k(m, rational(0), rational(0), rational(0));
    MultivectorField<Rational> psi;
    psi[kScalarBlade] = FourierPoly<Rational>::cosine(k);
    // -g2 g1 sin = +(g1^g2) sin
    psi[0b0110] = FourierPoly<Rational>::sine(k);
    return DHRepresentative(std::move(psi));
}

DHRepresentative null_plane_wave(const WaveVector& k, const Multivector<Rational>& x_odd) {
    if (!k.is_null())
        throw error("plane-wave vector is not null: k.k = " +
                    rational_to_string(k.minkowski_square()));
    Multivector<Rational> kslash;
    for (int mu = 0; mu < 4; ++mu)
        kslash += k.k[mu] * Multivector<Rational>::generator(mu);
    auto amplitude = kslash * x_odd;
    if (!is_even(amplitude)) throw parity_error("plane-wave factor must be odd");
    auto envelope = MultivectorField<Rational>::scalar(FourierPoly<Rational>::cosine(k)) +
                    MultivectorField<Rational>::constant(g21_upper()) *
                        MultivectorField<Rational>::scalar(FourierPoly<Rational>::sine(k));
    return DHRepresentative(MultivectorField<Rational>::constant(amplitude) * envelope);
}

std::vector<DHRepresentative> massless_solution_family(Rng& rng, int count) {
    std::vector<DHRepresentative> out;
    out.reserve(static_cast<std::size_t>(count));
    static const std::array<BladeMask, 8> odd_masks = {0b0001, 0b0010, 0b0100, 0b1000,
                                                       0b0111, 0b1011, 0b1101, 0b1110};
    while (static_cast<int>(out.size()) < count) {
        Multivector<Rational> x_odd;
        int factors = static_cast<int>(rng.range(1, 2));
        for (int i = 0; i < factors; ++i)
            x_odd[odd_masks[static_cast<std::size_t>(rng.range(0, 7))]] +=
                rng.small_rational(true);
        auto candidate = null_plane_wave(random_pool_wave(rng), x_odd);
        if (candidate.field().is_zero()) continue;
        if (!out.empty() && rng.chance(1, 3)) {
            auto mixed = candidate.field() + rng.small_rational(true) * out.back().field();
            out.emplace_back(std::move(mixed));
        } else {
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

DHRepresentative massive_plane_wave(const Rational& m, int axis, const Rational& energy,
                                    const Rational& momentum) {
    if (axis < 1 || axis > 3) throw error("plane-wave axis must be spatial (1..3)");
    if (energy * energy - momentum * momentum != m * m)
        throw error("(E, p) is off the mass shell E^2 - p^2 = m^2");
    WaveVector k(energy, rational(0), rational(0), rational(0));
    k.k[axis] = momentum;
    auto boost = Multivector<Rational>::scalar(energy + m) +
                 momentum * (Multivector<Rational>::generator(axis) *
                             Multivector<Rational>::generator(0));
    auto envelope = MultivectorField<Rational>::scalar(FourierPoly<Rational>::cosine(k)) -
                    MultivectorField<Rational>::constant(g21_upper()) *
                        MultivectorField<Rational>::scalar(FourierPoly<Rational>::sine(k));
    return DHRepresentative(MultivectorField<Rational>::constant(boost) * envelope);
}

std::vector<SpinElement> dh_stabilizer_spin_elements() {
    std::vector<SpinElement> out;
    out.push_back(SpinElement(g21_upper()));
    for (const auto& [a, b] : circle_pool()) {
        out.push_back(SpinElement(Multivector<Rational>::scalar(a) + b * g21_upper()));
    }
    return out;
}

std::vector<DHRepresentative> dh_solution_family(Rng& rng, const Rational& m, int count) {
    auto spins = dh_stabilizer_spin_elements();
    auto id = SpinElement::identity();
    std::vector<DHRepresentative> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        DHRepresentative base = rest_solution(m);
        switch (rng.range(0, 3)) {
            case 0:
                break;
            case 1: {
                const auto& shell = shell_pool()[static_cast<std::size_t>(
                    rng.range(0, static_cast<long>(shell_pool().size()) - 1))];
                base = massive_plane_wave(m, static_cast<int>(rng.range(1, 3)),
                                          shell.energy_over_m * m, shell.momentum_over_m * m);
                break;
            }
            case 2: {
                const auto& u = spins[static_cast<std::size_t>(
                    rng.range(0, static_cast<long>(spins.size()) - 1))];
                base = spin_transport(rest_solution(m), id, u);
                break;
            }
            default: {
                const auto& u = spins[static_cast<std::size_t>(
                    rng.range(0, static_cast<long>(spins.size()) - 1))];
                auto boosted = massive_plane_wave(
                    m, static_cast<int>(rng.range(1, 3)),
                    shell_pool()[0].energy_over_m * m, shell_pool()[0].momentum_over_m * m);
                base = spin_transport(boosted, id, u);
                break;
            }
        }
        auto scaled = rng.small_rational(true) * base.field();
        if (!out.empty() && rng.chance(1, 4)) scaled += out.back().field();
        out.emplace_back(std::move(scaled));
    }
    return out;
}

HertzData hertz_from_psi(const DHRepresentative& psi, const Rational& m) {
    auto parts = decompose_even(psi);
    // psi's pseudoscalar part is -g5 P with the upper volume element, i.e.
    // +g_5 P with the lowered one used by the Hertz formulas.
    return HertzData(std::move(parts.two_form_part), std::move(parts.scalar_part),
                     std::move(parts.pseudoscalar_part), m);
}

HertzData hertz_rest(const Rational& m) { return hertz_from_psi(rest_solution(m), m); }

SuperPotential random_superpotential(Rng& rng, const CorpusOptions& opt) {
    return SuperPotential(random_lorenz_one_form(rng, opt), random_lorenz_one_form(rng, opt));
}

GMESystem gme_from_superpotential(const SuperPotential& sp) {
    auto f = superpotential_field(sp);
    auto [je, jm] = currents_from_potentials(sp);
    return GMESystem(std::move(f), std::move(je), std::move(jm));
}

std::vector<GMESystem> gme_solution_family(Rng& rng, int count) {
    std::vector<GMESystem> out;
    out.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        if (rng.chance(1, 4)) {
            Multivector<Rational> constant;
            static const std::array<BladeMask, 6> two_masks = {0b0011, 0b0101, 0b0110,
                                                               0b1001, 0b1010, 0b1100};
            constant[two_masks[static_cast<std::size_t>(rng.range(0, 5))]] =
                rng.small_rational(true);
            out.emplace_back(MultivectorField<Rational>::constant(constant),
                             MultivectorField<Rational>::zero(),
                             MultivectorField<Rational>::zero());
        } else {
            out.push_back(gme_from_superpotential(random_superpotential(rng)));
        }
    }
    return out;
}

}  // namespace sta
