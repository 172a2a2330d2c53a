#include "sta/matrix_rep.hpp"

namespace sta {

ComplexMatrix4 rep(const Multivector<Complex>& a, const GammaRep& gamma) {
    ComplexMatrix4 out;
    for (int i = 0; i < kBladeCount; ++i) {
        const Complex& coeff = a[static_cast<BladeMask>(i)];
        if (ring<Complex>::is_zero(coeff)) continue;
        ComplexMatrix4 blade = ComplexMatrix4::identity();
        for (int mu = 0; mu < 4; ++mu)
            if ((i >> mu) & 1) blade = blade * gamma.g[mu];
        out = out + coeff * blade;
    }
    return out;
}

ColumnBasis::ColumnBasis(GammaRep gamma, ComplexMatrix4 s, ComplexMatrix4 s_inv)
    : gamma_(std::move(gamma)), s_(std::move(s)), s_inv_(std::move(s_inv)) {
    for (int mu = 0; mu < 4; ++mu) gamma_basis_[mu] = s_ * gamma_.g[mu] * s_inv_;
    // v = S^{-1} e1 is the image vector chosen for the idempotent; the
    // column of blade b is S * rep(b) * v.
    std::array<Complex, 4> v = s_inv_.column(0);
    for (int b = 0; b < kBladeCount; ++b) {
        auto m = rep(complexify(Multivector<Rational>::unit_blade(static_cast<BladeMask>(b))),
                     gamma_);
        auto sm = s_ * m;
        for (int r = 0; r < 4; ++r) {
            Complex acc;
            for (int c = 0; c < 4; ++c) acc += sm.at(r, c) * v[c];
            blade_cols_[b][r] = acc;
        }
    }
}

ColumnBasis ColumnBasis::compute(const GammaRep& gamma, const IdempotentSpec& f) {
    ComplexMatrix4 pf = rep(f.value(), gamma);
    if (pf.rank() != 1)
        throw idempotent_error("idempotent does not represent as a rank-1 projector");

    // First nonzero column of rep(f) spans the image.
    std::array<Complex, 4> v{};
    bool found = false;
    for (int c = 0; c < 4 && !found; ++c) {
        for (int r = 0; r < 4; ++r)
            if (!ring<Complex>::is_zero(pf.at(r, c))) {
                v = pf.column(c);
                found = true;
                break;
            }
    }
    if (!found) throw idempotent_error("zero projector");

    auto kernel = pf.as_cmatrix().kernel_basis();
    if (kernel.size() != 3)
        throw idempotent_error("projector kernel is not three-dimensional");

    // New basis (v, kernel): in it the projector is E11 because
    // rep(f) v = v and rep(f) annihilates the rest.
    ComplexMatrix4 s_inv;
    for (int r = 0; r < 4; ++r) {
        s_inv.at(r, 0) = v[r];
        for (int c = 0; c < 3; ++c) s_inv.at(r, c + 1) = kernel[c][r];
    }
    ComplexMatrix4 s = s_inv.inverse();
    return ColumnBasis(gamma, std::move(s), std::move(s_inv));
}

ColumnSpinorField column_field(const IdealElement& psi, const ColumnBasis& basis) {
    ColumnSpinorField out;
    const auto& cols = basis.blade_columns();
    for (int b = 0; b < kBladeCount; ++b) {
        const auto& coeff = psi.value()[static_cast<BladeMask>(b)];
        if (coeff.is_zero()) continue;
        for (int r = 0; r < 4; ++r)
            out.c[r] += coeff * FourierPoly<Complex>::constant(cols[b][r]);
    }
    return out;
}

std::array<Complex, 4> column_extract(const IdealElement& psi, const ColumnBasis& basis,
                                      const std::array<Rational, 4>& x) {
    auto field = column_field(psi, basis);
    return {field.c[0].eval(x), field.c[1].eval(x), field.c[2].eval(x),
            field.c[3].eval(x)};
}

ColumnSpinorField matrix_dirac_residual(const IdealElement& psi, const Rational& m,
                                        const ColumnBasis& basis) {
    auto col = column_field(psi, basis);
    ColumnSpinorField out;
    const auto& g = basis.gamma_in_basis();
    for (int mu = 0; mu < 4; ++mu) {
        std::array<FourierPoly<Complex>, 4> dcol;
        for (int r = 0; r < 4; ++r) dcol[r] = col.c[r].partial(mu);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                if (ring<Complex>::is_zero(g[mu].at(r, c))) continue;
                out.c[r] += g[mu].at(r, c) * dcol[c];
            }
    }
    Complex mass(m);
    for (int r = 0; r < 4; ++r)
        out.c[r] = kIdealDiracUnit * out.c[r] - mass * col.c[r];
    return out;
}

}  // namespace sta
