#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "hdlr/errors.hpp"
#include "hdlr/rational.hpp"

namespace hdlr {

/// Dense matrix over an exact field element F (Rational, Expr, ...).
template <class F>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a; // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    F& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const F& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Row-reduces [A | b...] in place over the field; returns pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        F inv = m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) / inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            F factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Solves A x = b when the columns of A are independent; nullopt when the
/// system is inconsistent. Throws SingularBasis on rank-deficient A.
template <class F>
std::optional<std::vector<F>> solve_unique(const Matrix<F>& A, const std::vector<F>& b) {
    Matrix<F> aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    auto pivots = row_reduce(aug);
    std::vector<F> x(A.cols, F(0));
    std::size_t row = 0;
    for (std::size_t p : pivots) {
        if (p == A.cols) return std::nullopt; // pivot in the rhs column: inconsistent
        x[p] = aug.at(row, A.cols);
        ++row;
    }
    for (; row < aug.rows; ++row)
        if (!aug.at(row, A.cols).is_zero()) return std::nullopt;
    if (pivots.size() != A.cols) throw SingularBasis("solve_unique: dependent columns");
    return x;
}

/// Rank over the rationals.
template <class F>
std::size_t rank(Matrix<F> m) {
    return row_reduce(m).size();
}

/// Precomputed row reduction for repeatedly solving A x = b with fixed A.
template <class F>
class PreparedSolver {
public:
    explicit PreparedSolver(Matrix<F> A) : n_(A.rows), m_(A.cols) {
        Matrix<F> aug(n_, m_ + n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) aug.at(i, j) = A.at(i, j);
            aug.at(i, m_ + i) = F(1);
        }
        // eliminate only on the A block; the identity block records row ops
        pivots_.clear();
        std::size_t row = 0;
        for (std::size_t col = 0; col < m_ && row < n_; ++col) {
            std::size_t sel = row;
            while (sel < n_ && aug.at(sel, col).is_zero()) ++sel;
            if (sel == n_) continue;
            if (sel != row)
                for (std::size_t j = 0; j < aug.cols; ++j) std::swap(aug.at(sel, j), aug.at(row, j));
            F inv = aug.at(row, col);
            for (std::size_t j = 0; j < aug.cols; ++j) aug.at(row, j) = aug.at(row, j) / inv;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == row || aug.at(i, col).is_zero()) continue;
                F factor = aug.at(i, col);
                for (std::size_t j = 0; j < aug.cols; ++j)
                    aug.at(i, j) = aug.at(i, j) - factor * aug.at(row, j);
            }
            pivots_.push_back(col);
            ++row;
        }
        red_ = std::move(aug);
    }

    bool full_column_rank() const { return pivots_.size() == m_; }

    /// Unique solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<F>> solve(const std::vector<F>& b) const {
        std::vector<F> tb(n_, F(0));
        for (std::size_t i = 0; i < n_; ++i) {
            F acc(0);
            for (std::size_t k = 0; k < n_; ++k) {
                if (red_.at(i, m_ + k).is_zero() || b[k].is_zero()) continue;
                acc += red_.at(i, m_ + k) * b[k];
            }
            tb[i] = acc;
        }
        std::vector<F> x(m_, F(0));
        for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = tb[r];
        for (std::size_t r = pivots_.size(); r < n_; ++r)
            if (!tb[r].is_zero()) return std::nullopt;
        return x;
    }

private:
    std::size_t n_, m_;
    Matrix<F> red_;
    std::vector<std::size_t> pivots_;
};

/// Determinant of a square integer matrix.
mpz_class int_determinant(const std::vector<std::vector<long>>& m);

/// Rank of an integer matrix.
std::size_t int_rank(const std::vector<std::vector<long>>& m);

/// Divides the vector by the gcd of its entries (gcd 0 for the zero vector).
std::vector<long> primitivize(std::vector<long> v);

/// Unimodular U with U*G in column Hermite-like form; used to build the
/// projection Z^m -> Z^m / <columns of G> for saturated sublattices.
/// Returns U (m x m); the last m-r rows of U give quotient coordinates,
/// where r = rank(G). Requires the sublattice to be saturated (smooth cones).
std::vector<std::vector<mpz_class>> quotient_transform(const std::vector<std::vector<long>>& columns,
                                                       int ambient_dim, std::size_t& rank_out);

} // namespace hdlr
