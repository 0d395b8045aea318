#include "hdlr/linalg.hpp"

#include <numeric>

namespace hdlr {

mpz_class int_determinant(const std::vector<std::vector<long>>& m) {
    std::size_t n = m.size();
    Matrix<Rational> q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error("int_determinant: not square");
        for (std::size_t j = 0; j < n; ++j) q.at(i, j) = Rational(m[i][j]);
    }
    // fraction-based elimination; fine at this scale
    Rational det(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = row;
        while (sel < n && q.at(sel, col).is_zero()) ++sel;
        if (sel == n) return 0;
        if (sel != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(q.at(sel, j), q.at(row, j));
            det = -det;
        }
        det *= q.at(row, col);
        Rational inv = q.at(row, col).reciprocal();
        for (std::size_t j = col; j < n; ++j) q.at(row, j) *= inv;
        for (std::size_t i = row + 1; i < n; ++i) {
            Rational factor = q.at(i, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j)
                q.at(i, j) -= factor * q.at(row, j);
        }
        ++row;
    }
    if (!det.is_integer()) throw Error("int_determinant: internal error");
    return det.num();
}

std::size_t int_rank(const std::vector<std::vector<long>>& m) {
    if (m.empty()) return 0;
    Matrix<Rational> q(m.size(), m[0].size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) q.at(i, j) = Rational(m[i][j]);
    return rank(std::move(q));
}

std::vector<long> primitivize(std::vector<long> v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g > 1)
        for (long& x : v) x /= g;
    return v;
}

std::vector<std::vector<mpz_class>> quotient_transform(const std::vector<std::vector<long>>& columns,
                                                       int ambient_dim, std::size_t& rank_out) {
    // integer row reduction of [G | I] by unimodular row operations, pushing G
    // into a triangular form; the rows of U past the rank span the quotient
    std::size_t m = static_cast<std::size_t>(ambient_dim);
    std::size_t k = columns.size();
    std::vector<std::vector<mpz_class>> g(m, std::vector<mpz_class>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) g[i][j] = columns[j][i];
    std::vector<std::vector<mpz_class>> u(m, std::vector<mpz_class>(m, 0));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

    auto row_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (std::size_t j = 0; j < k; ++j) g[dst][j] -= q * g[src][j];
        for (std::size_t j = 0; j < m; ++j) u[dst][j] -= q * u[src][j];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(g[a], g[b]);
        std::swap(u[a], u[b]);
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < m; ++col) {
        // gcd elimination below the current row
        while (true) {
            std::size_t nz = m;
            mpz_class best = 0;
            for (std::size_t i = row; i < m; ++i) {
                if (g[i][col] == 0) continue;
                mpz_class a = abs(g[i][col]);
                if (nz == m || a < best) {
                    nz = i;
                    best = a;
                }
            }
            if (nz == m) break; // column already zero below
            if (nz != row) row_swap(nz, row);
            bool clean = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (g[i][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), g[i][col].get_mpz_t(), g[row][col].get_mpz_t());
                row_axpy(i, row, q);
                if (g[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (g[row][col] != 0) ++row;
    }
    rank_out = row;
    return u;
}

} // namespace hdlr
