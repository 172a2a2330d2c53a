#pragma once

// Independent reference implementations used as oracles by the test
// suites. Everything here is deliberately written without reusing the
// bit-mask machinery of blade.hpp: products reorder explicit factor
// lists, and the Hodge star comes from its defining relation
// a ^ (*b) = <a,b> tau rather than from reversion times the volume
// element. Slow is fine; independent is the point.

#include <algorithm>
#include <vector>

#include "sta/multivector.hpp"

namespace sta::reference {

/// Product of two basis blades by explicit factor-list reordering:
/// concatenate the ascending factor lists, bubble-sort counting swaps,
/// then cancel equal neighbours against the metric.
inline BladeProduct blade_product(BladeMask a, BladeMask b) {
    std::vector<int> factors;
    for (int mu = 0; mu < 4; ++mu)
        if ((a >> mu) & 1) factors.push_back(mu);
    for (int mu = 0; mu < 4; ++mu)
        if ((b >> mu) & 1) factors.push_back(mu);

    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            if (factors[i] > factors[i + 1]) {
                std::swap(factors[i], factors[i + 1]);
                sign = -sign;
                moved = true;
            }
        }
    }
    std::vector<int> reduced;
    for (std::size_t i = 0; i < factors.size();) {
        if (i + 1 < factors.size() && factors[i] == factors[i + 1]) {
            sign *= metric_sign(factors[i]);
            i += 2;
        } else {
            reduced.push_back(factors[i]);
            i += 1;
        }
    }
    BladeMask mask = 0;
    for (int mu : reduced) mask |= static_cast<BladeMask>(1u << mu);
    return {mask, sign};
}

template <typename R>
Multivector<R> multiply(const Multivector<R>& a, const Multivector<R>& b) {
    Multivector<R> r;
    for (int i = 0; i < kBladeCount; ++i) {
        for (int j = 0; j < kBladeCount; ++j) {
            auto p = blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
            R term = a[static_cast<BladeMask>(i)] * b[static_cast<BladeMask>(j)];
            if (p.sign < 0) term = -term;
            r[p.mask] += term;
        }
    }
    return r;
}

/// Induced metric on a basis r-form: product of the diagonal metric signs
/// over its factors.
inline int blade_metric(BladeMask m) {
    int s = 1;
    for (int mu = 0; mu < 4; ++mu)
        if ((m >> mu) & 1) s *= metric_sign(mu);
    return s;
}

/// Sign of the permutation (factors of m, factors of complement) relative
/// to (0,1,2,3), by explicit inversion counting.
inline int complement_permutation_sign(BladeMask m) {
    std::vector<int> perm;
    for (int mu = 0; mu < 4; ++mu)
        if ((m >> mu) & 1) perm.push_back(mu);
    for (int mu = 0; mu < 4; ++mu)
        if (!((m >> mu) & 1)) perm.push_back(mu);
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return (inversions & 1) ? -1 : 1;
}

/// Combinatorial Hodge star: on a basis blade e_I,
///   *e_I = <e_I, e_I> * sgn(I, complement I) * e_{complement I},
/// which is the unique solution of e_I ^ (*e_I) = <e_I, e_I> tau.
template <typename R>
Multivector<R> hodge(const Multivector<R>& a) {
    Multivector<R> out;
    for (int i = 0; i < kBladeCount; ++i) {
        BladeMask m = static_cast<BladeMask>(i);
        if (ring<R>::is_zero(a[m])) continue;
        BladeMask comp = static_cast<BladeMask>(~m & 0b1111u);
        int sign = blade_metric(m) * complement_permutation_sign(m);
        R term = a[m];
        if (sign < 0) term = -term;
        out[comp] += term;
    }
    return out;
}

}  // namespace sta::reference
