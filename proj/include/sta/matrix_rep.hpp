#pragma once

#include <array>
#include <utility>

#include "sta/linalg.hpp"
#include "sta/spinor.hpp"

namespace sta {

/// 4x4 matrix of exact complex rationals: the C(4) face of the
/// complexified spacetime algebra.
class ComplexMatrix4 {
public:
    ComplexMatrix4() = default;

    static ComplexMatrix4 identity() {
        ComplexMatrix4 m;
        for (int i = 0; i < 4; ++i) m.at(i, i) = ring<Complex>::one();
        return m;
    }

    Complex& at(int r, int c) { return e_[r * 4 + c]; }
    const Complex& at(int r, int c) const { return e_[r * 4 + c]; }

    friend ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
        ComplexMatrix4 r;
        for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
        ComplexMatrix4 r;
        for (int i = 0; i < 16; ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend ComplexMatrix4 operator-(const ComplexMatrix4& a) {
        ComplexMatrix4 r;
        for (int i = 0; i < 16; ++i) r.e_[i] = -a.e_[i];
        return r;
    }
    friend ComplexMatrix4 operator*(const Complex& s, const ComplexMatrix4& a) {
        ComplexMatrix4 r;
        for (int i = 0; i < 16; ++i) r.e_[i] = s * a.e_[i];
        return r;
    }
    friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
        ComplexMatrix4 r;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                if (ring<Complex>::is_zero(a.at(i, k))) continue;
                for (int j = 0; j < 4; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const ComplexMatrix4& a, const ComplexMatrix4& b) {
        return a.e_ == b.e_;
    }
    friend bool operator!=(const ComplexMatrix4& a, const ComplexMatrix4& b) {
        return !(a == b);
    }

    std::array<Complex, 4> column(int c) const {
        return {at(0, c), at(1, c), at(2, c), at(3, c)};
    }

    Complex trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }

    bool is_zero() const {
        for (const auto& z : e_)
            if (!ring<Complex>::is_zero(z)) return false;
        return true;
    }

    CMatrix as_cmatrix() const {
        CMatrix m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = at(r, c);
        return m;
    }

    int rank() const { return static_cast<int>(as_cmatrix().rank()); }

    /// Exact inverse by Gauss-Jordan; throws if singular.
    ComplexMatrix4 inverse() const {
        CMatrix aug(4, 8);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, 4 + r) = ring<Complex>::one();
        }
        if (aug.row_reduce_upto(4) != 4) throw error("singular matrix has no inverse");
        ComplexMatrix4 inv;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) inv.at(r, c) = aug.at(r, 4 + c);
        return inv;
    }

private:
    std::array<Complex, 16> e_{};
};

/// Gamma matrices in the Dirac basis. The anticommutation relations are
/// verified at construction rather than trusted.
struct GammaRep {
    std::array<ComplexMatrix4, 4> g;

    explicit GammaRep(std::array<ComplexMatrix4, 4> matrices) : g(std::move(matrices)) {
        auto id = ComplexMatrix4::identity();
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                auto anti = g[mu] * g[nu] + g[nu] * g[mu];
                auto expect = Complex(Rational(mu == nu ? 2 * metric_sign(mu) : 0)) * id;
                if (anti != expect)
                    throw error("gamma matrices violate the generator relations");
            }
    }

    /// Dirac basis: g0 = diag(1,1,-1,-1), g^k off-diagonal Pauli blocks.
    static GammaRep standard() {
        auto one = ring<Complex>::one();
        auto i = Complex::i();
        ComplexMatrix4 g0, g1, g2, g3;
        g0.at(0, 0) = one;
        g0.at(1, 1) = one;
        g0.at(2, 2) = -one;
        g0.at(3, 3) = -one;
        // g^k = [[0, sigma_k], [-sigma_k, 0]]
        g1.at(0, 3) = one;
        g1.at(1, 2) = one;
        g1.at(2, 1) = -one;
        g1.at(3, 0) = -one;
        g2.at(0, 3) = -i;
        g2.at(1, 2) = i;
        g2.at(2, 1) = i;
        g2.at(3, 0) = -i;
        g3.at(0, 2) = one;
        g3.at(1, 3) = -one;
        g3.at(2, 0) = -one;
        g3.at(3, 1) = one;
        return GammaRep({g0, g1, g2, g3});
    }
};

/// The unique algebra homomorphism extending g^mu -> gamma matrix: each
/// basis blade maps to the product of its factors, coefficients extend
/// linearly. Injective (the 16 images are linearly independent).
ComplexMatrix4 rep(const Multivector<Complex>& a, const GammaRep& gamma);

/// Basis change making the representation of the standard idempotent the
/// elementary matrix E11. Computed by exact linear algebra from rep(f):
/// the new basis is (image vector of f, kernel basis of f).
class ColumnBasis {
public:
    static ColumnBasis compute(const GammaRep& gamma, const IdempotentSpec& f);

    const ComplexMatrix4& change() const { return s_; }          // S
    const ComplexMatrix4& change_inverse() const { return s_inv_; }

    /// Per-blade column images S * rep(blade) * v where v = S^{-1} e1;
    /// the building blocks of every ideal-element column.
    const std::array<std::array<Complex, 4>, kBladeCount>& blade_columns() const {
        return blade_cols_;
    }

    const GammaRep& gamma() const { return gamma_; }

    /// Gamma matrices conjugated into the column basis, S g^mu S^{-1}.
    const std::array<ComplexMatrix4, 4>& gamma_in_basis() const { return gamma_basis_; }

private:
    ColumnBasis(GammaRep gamma, ComplexMatrix4 s, ComplexMatrix4 s_inv);

    GammaRep gamma_;
    ComplexMatrix4 s_;
    ComplexMatrix4 s_inv_;
    std::array<ComplexMatrix4, 4> gamma_basis_;
    std::array<std::array<Complex, 4>, kBladeCount> blade_cols_;
};

/// Column-spinor-valued function of spacetime: four exact complex scalar
/// functions.
struct ColumnSpinorField {
    std::array<FourierPoly<Complex>, 4> c;

    bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    friend bool operator==(const ColumnSpinorField& a, const ColumnSpinorField& b) {
        return a.c == b.c;
    }
    friend ColumnSpinorField operator+(const ColumnSpinorField& a,
                                       const ColumnSpinorField& b) {
        return {{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]}};
    }
    friend ColumnSpinorField operator-(const ColumnSpinorField& a,
                                       const ColumnSpinorField& b) {
        return {{a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]}};
    }
};

/// Ideal element as a column field in the basis where rep(f) = E11: the
/// linear bijection between the rank-4 ideal and C^4-valued functions.
ColumnSpinorField column_field(const IdealElement& psi, const ColumnBasis& basis);

/// The column at one admissible evaluation point.
std::array<Complex, 4> column_extract(const IdealElement& psi, const ColumnBasis& basis,
                                      const std::array<Rational, 4>& x);

/// Column-side Dirac residual, computed with the conjugated gamma
/// matrices:  unit * g^mu d_mu(column) - m * column. Agrees exactly with
/// the column image of ideal_dirac_residual.
ColumnSpinorField matrix_dirac_residual(const IdealElement& psi, const Rational& m,
                                        const ColumnBasis& basis);

}  // namespace sta
