#pragma once

#include <cstddef>
#include <vector>

#include "sta/rational.hpp"

namespace sta {

/// Dense matrix of exact complex rationals, sized at runtime. Just enough
/// linear algebra for rank, kernel and inverse computations over an exact
/// field; pivoting is by first nonzero entry since there is no roundoff
/// to balance.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    /// Row-reduces in place; returns the rank. Records pivot columns when
    /// a destination is supplied.
    std::size_t row_reduce(std::vector<std::size_t>* pivot_cols = nullptr) {
        return row_reduce_upto(cols_, pivot_cols);
    }

    /// Row-reduces using pivots from the first `pivot_limit` columns only;
    /// the remaining columns are carried along (Gauss-Jordan on an
    /// augmented block). Returns the number of pivots found.
    std::size_t row_reduce_upto(std::size_t pivot_limit,
                                std::vector<std::size_t>* pivot_cols = nullptr) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < pivot_limit && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && ring<Complex>::is_zero(at(pivot, col))) ++pivot;
            if (pivot == rows_) continue;
            if (pivot != rank)
                for (std::size_t c = 0; c < cols_; ++c)
                    std::swap(at(pivot, c), at(rank, c));
            Complex inv = ring<Complex>::one() / at(rank, col);
            for (std::size_t c = 0; c < cols_; ++c) at(rank, c) = at(rank, c) * inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || ring<Complex>::is_zero(at(r, col))) continue;
                Complex factor = at(r, col);
                for (std::size_t c = 0; c < cols_; ++c)
                    at(r, c) = at(r, c) - factor * at(rank, c);
            }
            if (pivot_cols) pivot_cols->push_back(col);
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        CMatrix copy = *this;
        return copy.row_reduce();
    }

    /// Basis of the null space, one vector per column of the result.
    std::vector<std::vector<Complex>> kernel_basis() const {
        CMatrix reduced = *this;
        std::vector<std::size_t> pivots;
        std::size_t rank = reduced.row_reduce(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Complex>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (is_pivot[free_col]) continue;
            std::vector<Complex> v(cols_);
            v[free_col] = ring<Complex>::one();
            for (std::size_t r = 0; r < rank; ++r)
                v[pivots[r]] = -reduced.at(r, free_col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

}  // namespace sta
