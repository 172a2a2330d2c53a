#pragma once

#include <array>
#include <algorithm>
#include <cstddef>
#include <vector>
#include <string>

#include "sta/fourier_poly.hpp"
#include "sta/multivector.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sta {

/// Multivector-valued function on Minkowski spacetime: one FourierPoly
/// per basis blade. Grade structure, products and the exterior-calculus
/// operators all lift from the constant algebra blade by blade.
template <typename R>
class MultivectorField {
public:
    MultivectorField() = default;

    static MultivectorField zero() { return MultivectorField(); }

    static MultivectorField constant(const Multivector<R>& m) {
        MultivectorField f;
        for (int i = 0; i < kBladeCount; ++i) {
            const R& c = m[static_cast<BladeMask>(i)];
            if (!ring<R>::is_zero(c)) f.c_[i] = FourierPoly<R>::constant(c);
        }
        return f;
    }

    static MultivectorField scalar(FourierPoly<R> p) {
        MultivectorField f;
        f.c_[kScalarBlade] = std::move(p);
        return f;
    }

    static MultivectorField blade_field(BladeMask mask, FourierPoly<R> p) {
        MultivectorField f;
        f.c_[mask] = std::move(p);
        return f;
    }

    /// The coordinate function x^mu as a scalar field.
    static MultivectorField coordinate(int mu) {
        return scalar(FourierPoly<R>::coordinate(mu));
    }

    static MultivectorField generator(int mu) {
        return constant(Multivector<R>::generator(mu));
    }

    const FourierPoly<R>& operator[](BladeMask mask) const { return c_[mask]; }
    FourierPoly<R>& operator[](BladeMask mask) { return c_[mask]; }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& p : c_) n += p.term_count();
        return n;
    }

    friend bool operator==(const MultivectorField& a, const MultivectorField& b) {
        for (int i = 0; i < kBladeCount; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const MultivectorField& a, const MultivectorField& b) {
        return !(a == b);
    }

    friend MultivectorField operator+(const MultivectorField& a,
                                      const MultivectorField& b) {
        MultivectorField r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend MultivectorField operator-(const MultivectorField& a,
                                      const MultivectorField& b) {
        MultivectorField r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend MultivectorField operator-(const MultivectorField& a) {
        MultivectorField r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    MultivectorField& operator+=(const MultivectorField& o) { return *this = *this + o; }
    MultivectorField& operator-=(const MultivectorField& o) { return *this = *this - o; }

    friend MultivectorField operator*(const R& s, const MultivectorField& a) {
        MultivectorField r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend MultivectorField operator*(const FourierPoly<R>& s, const MultivectorField& a) {
        MultivectorField r;
        for (int i = 0; i < kBladeCount; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend MultivectorField operator*(const MultivectorField& a, const FourierPoly<R>& s) {
        return s * a;
    }

    std::array<FourierPoly<R>, kBladeCount>& raw() { return c_; }
    const std::array<FourierPoly<R>, kBladeCount>& raw() const { return c_; }

private:
    std::array<FourierPoly<R>, kBladeCount> c_;
};

namespace detail {

// Shared kernel for the three bilinear products. `Pred` filters blade
// pairs: everything for the geometric product, disjoint masks for the
// wedge, subset masks for the left contraction.
template <typename R, typename Pred>
void accumulate_products_for_output(const MultivectorField<R>& a,
                                    const MultivectorField<R>& b, Pred pred,
                                    int out, FourierPoly<R>& slot) {
    for (int i = 0; i < kBladeCount; ++i) {
        int j = i ^ out;
        if (!pred(i, j)) continue;
        const auto& pa = a[static_cast<BladeMask>(i)];
        const auto& pb = b[static_cast<BladeMask>(j)];
        if (pa.is_zero() || pb.is_zero()) continue;
        auto p = blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
        FourierPoly<R> prod = pa * pb;
        if (p.sign < 0)
            slot -= prod;
        else
            slot += prod;
    }
}

}  // namespace detail

/// Serial reference product: plain nested loop over blade pairs. Kept as
/// the oracle for the parallel kernel and used directly for small inputs.
template <typename R>
MultivectorField<R> multiply_serial(const MultivectorField<R>& a,
                                    const MultivectorField<R>& b) {
    MultivectorField<R> r;
    auto all = [](int, int) { return true; };
    for (int out = 0; out < kBladeCount; ++out)
        detail::accumulate_products_for_output(a, b, all, out,
                                               r[static_cast<BladeMask>(out)]);
    return r;
}

/// OpenMP product kernel. Work splits into tasks finer than whole blade
/// pairs: a pair whose term-count product is large is chunked along the
/// left operand's term range, so no single product serializes the loop.
/// Tasks run costliest-first under dynamic scheduling; the reduction into
/// output blades happens afterwards in a fixed order, so the result is
/// bit-identical to the serial reference for any thread count.
template <typename R>
MultivectorField<R> multiply_parallel(const MultivectorField<R>& a,
                                      const MultivectorField<R>& b) {
    struct Task {
        BladeMask out;
        BladeMask left;
        int sign;
        std::size_t offset;  // term range within a[left]
        std::size_t length;
        std::size_t cost;
    };
    std::size_t total_cost = 0;
    for (int i = 0; i < kBladeCount; ++i)
        for (int j = 0; j < kBladeCount; ++j)
            total_cost += a[static_cast<BladeMask>(i)].term_count() *
                          b[static_cast<BladeMask>(j)].term_count();
#ifdef _OPENMP
    const std::size_t workers = static_cast<std::size_t>(omp_get_max_threads());
#else
    const std::size_t workers = 1;
#endif
    const std::size_t target = std::max<std::size_t>(256, total_cost / (8 * workers + 1));

    std::vector<Task> tasks;
    tasks.reserve(64);
    for (int out = 0; out < kBladeCount; ++out) {
        for (int i = 0; i < kBladeCount; ++i) {
            int j = i ^ out;
            const auto& pa = a[static_cast<BladeMask>(i)];
            const auto& pb = b[static_cast<BladeMask>(j)];
            if (pa.is_zero() || pb.is_zero()) continue;
            auto p = blade_product(static_cast<BladeMask>(i), static_cast<BladeMask>(j));
            std::size_t na = pa.term_count();
            std::size_t per_term = pb.term_count();
            std::size_t chunk_terms = std::max<std::size_t>(1, target / std::max<std::size_t>(1, per_term));
            for (std::size_t offset = 0; offset < na; offset += chunk_terms) {
                std::size_t len = std::min(chunk_terms, na - offset);
                tasks.push_back({static_cast<BladeMask>(out), static_cast<BladeMask>(i),
                                 p.sign, offset, len, len * per_term});
            }
        }
    }
    std::vector<std::size_t> order(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return tasks[x].cost > tasks[y].cost;
    });

    std::vector<FourierPoly<R>> partials(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long n = 0; n < static_cast<long>(order.size()); ++n) {
        const Task& task = tasks[order[static_cast<std::size_t>(n)]];
        partials[order[static_cast<std::size_t>(n)]] =
            a[task.left].multiply_range(b[static_cast<BladeMask>(task.left ^ task.out)],
                                        task.offset, task.length);
    }

    // Reduction: output blades are independent and each merges its own
    // tasks in generation order, so the result does not depend on
    // scheduling.
    MultivectorField<R> r;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int out = 0; out < kBladeCount; ++out) {
        auto& slot = r[static_cast<BladeMask>(out)];
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].out != out) continue;
            if (tasks[t].sign < 0)
                slot -= partials[t];
            else
                slot += partials[t];
        }
    }
    return r;
}

/// Geometric product; dispatches to the OpenMP kernel when the operands
/// carry enough terms to pay for a parallel region.
template <typename R>
MultivectorField<R> operator*(const MultivectorField<R>& a,
                              const MultivectorField<R>& b) {
    constexpr std::size_t kParallelThreshold = 64;
    if (a.term_count() + b.term_count() >= kParallelThreshold)
        return multiply_parallel(a, b);
    return multiply_serial(a, b);
}

template <typename R>
MultivectorField<R> wedge(const MultivectorField<R>& a, const MultivectorField<R>& b) {
    MultivectorField<R> r;
    auto disjoint = [](int i, int j) { return (i & j) == 0; };
    for (int out = 0; out < kBladeCount; ++out)
        detail::accumulate_products_for_output(a, b, disjoint, out,
                                               r[static_cast<BladeMask>(out)]);
    return r;
}

template <typename R>
MultivectorField<R> lcontract(const MultivectorField<R>& a,
                              const MultivectorField<R>& b) {
    MultivectorField<R> r;
    auto subset = [](int i, int j) { return (i & ~j) == 0; };
    for (int out = 0; out < kBladeCount; ++out)
        detail::accumulate_products_for_output(a, b, subset, out,
                                               r[static_cast<BladeMask>(out)]);
    return r;
}

template <typename R>
MultivectorField<R> grade(const MultivectorField<R>& a, int r) {
    if (r < 0 || r > 4) throw grade_error("grade selector outside 0..4");
    MultivectorField<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        if (blade_grade(static_cast<BladeMask>(i)) == r)
            out[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)];
    return out;
}

template <typename R>
MultivectorField<R> reverse(const MultivectorField<R>& a) {
    MultivectorField<R> out;
    for (int i = 0; i < kBladeCount; ++i) {
        BladeMask m = static_cast<BladeMask>(i);
        out[m] = reversion_sign(blade_grade(m)) < 0 ? -a[m] : a[m];
    }
    return out;
}

template <typename R>
MultivectorField<R> even_part(const MultivectorField<R>& a) {
    MultivectorField<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        if ((blade_grade(static_cast<BladeMask>(i)) & 1) == 0)
            out[static_cast<BladeMask>(i)] = a[static_cast<BladeMask>(i)];
    return out;
}

template <typename R>
bool is_even(const MultivectorField<R>& a) {
    for (int i = 0; i < kBladeCount; ++i)
        if ((blade_grade(static_cast<BladeMask>(i)) & 1) != 0 &&
            !a[static_cast<BladeMask>(i)].is_zero())
            return false;
    return true;
}

/// True when every blade coefficient outside grade r vanishes.
template <typename R>
bool is_pure_grade(const MultivectorField<R>& a, int r) {
    for (int i = 0; i < kBladeCount; ++i)
        if (blade_grade(static_cast<BladeMask>(i)) != r &&
            !a[static_cast<BladeMask>(i)].is_zero())
            return false;
    return true;
}

template <typename R>
MultivectorField<R> hodge(const MultivectorField<R>& a) {
    return reverse(a) * MultivectorField<R>::constant(gamma5<R>());
}

/// Termwise coordinate derivative; partial derivatives commute exactly.
template <typename R>
MultivectorField<R> partial(const MultivectorField<R>& f, int mu) {
    MultivectorField<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        out[static_cast<BladeMask>(i)] = f[static_cast<BladeMask>(i)].partial(mu);
    return out;
}

namespace detail {

// sum_mu g^mu [op] d_mu f, with [op] one of geometric product, wedge,
// contraction. The generator is a single blade, so this stays a per-blade
// loop instead of a full field product.
template <typename R, typename Pred>
MultivectorField<R> dirac_like(const MultivectorField<R>& f, Pred pred) {
    MultivectorField<R> out;
    for (int mu = 0; mu < 4; ++mu) {
        BladeMask g = static_cast<BladeMask>(1u << mu);
        MultivectorField<R> df = partial(f, mu);
        for (int i = 0; i < kBladeCount; ++i) {
            if (!pred(static_cast<int>(g), i)) continue;
            const auto& p = df[static_cast<BladeMask>(i)];
            if (p.is_zero()) continue;
            auto bp = blade_product(g, static_cast<BladeMask>(i));
            if (bp.sign < 0)
                out[bp.mask] -= p;
            else
                out[bp.mask] += p;
        }
    }
    return out;
}

}  // namespace detail

/// Dirac operator g^mu d_mu; equals d(f) - codiff(f) identically.
template <typename R>
MultivectorField<R> dirac(const MultivectorField<R>& f) {
    return detail::dirac_like(f, [](int, int) { return true; });
}

/// Exterior derivative d = sum g^mu ^ d_mu; d(d(f)) = 0.
template <typename R>
MultivectorField<R> d(const MultivectorField<R>& f) {
    return detail::dirac_like(f, [](int g, int i) { return (g & i) == 0; });
}

/// Hodge codifferential, delta = -sum g^mu _| d_mu; codiff(codiff(f)) = 0.
template <typename R>
MultivectorField<R> codiff(const MultivectorField<R>& f) {
    return -detail::dirac_like(f, [](int g, int i) { return (g & ~i) == 0; });
}

/// Contraction half of the Dirac operator, sum g^mu _| d_mu = -codiff.
template <typename R>
MultivectorField<R> dirac_contract(const MultivectorField<R>& f) {
    return detail::dirac_like(f, [](int g, int i) { return (g & ~i) == 0; });
}

/// Wave operator: the squared Dirac operator. Grade-preserving and equal
/// to -(d codiff + codiff d) identically.
template <typename R>
MultivectorField<R> diamond(const MultivectorField<R>& f) {
    return dirac(dirac(f));
}

template <typename R>
Multivector<R> eval_at(const MultivectorField<R>& f, const std::array<Rational, 4>& x) {
    Multivector<R> out;
    for (int i = 0; i < kBladeCount; ++i)
        out[static_cast<BladeMask>(i)] = f[static_cast<BladeMask>(i)].eval(x);
    return out;
}

inline MultivectorField<Complex> complexify(const MultivectorField<Rational>& f) {
    MultivectorField<Complex> out;
    for (int i = 0; i < kBladeCount; ++i)
        out[static_cast<BladeMask>(i)] = complexify(f[static_cast<BladeMask>(i)]);
    return out;
}

using RealField = MultivectorField<Rational>;
using ComplexField = MultivectorField<Complex>;

}  // namespace sta
