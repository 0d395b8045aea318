#include <doctest.h>

#include "hdlr/closedform.hpp"
#include "hdlr/errors.hpp"

using namespace hdlr;

namespace {
Expr h() { return ex_h(); }
Expr one() { return Expr(1); }
} // namespace

TEST_CASE("c_projective examples") {
    CHECK(c_projective(2, 3, 3, 1) == Expr(3) * h().pow(2));
    CHECK(c_projective(2, 1, 1, 1) == Expr());
    CHECK(c_projective(1, 2, 2, 1) == h());
    CHECK_THROWS_AS(c_projective(2, 4, 1, 1), IndexOutOfRange);
}

TEST_CASE("cohomological identities parts 1-3 for m <= 8") {
    for (int m = 1; m <= 8; ++m)
        for (int i = 1; i <= m + 1; ++i)
            for (int j = 1; j <= m + 1; ++j)
                for (int k = 1; k <= m + 1; ++k) {
                    Expr c = c_projective(m, i, j, k);
                    if (k > i || k > j) CHECK(c.is_zero());
                    if (i > 1 && j < m + 1) CHECK(c == c_projective(m, i - 1, j + 1, k));
                    if (j < m + 1 && k < m + 1) CHECK(c == c_projective(m, i, j + 1, k + 1));
                }
}

TEST_CASE("point-cell products vanish by the binomial convention") {
    // c^k_{m+1,m+1} with k = m+1 needs binom(m-1, m-1) = 1; k > anything gives 0
    for (int m = 1; m <= 4; ++m) {
        CHECK(c_projective(m, 1, 1, 1) == Expr());               // binom(-1, m-1) = 0
        CHECK(c_projective(m, m + 1, m + 1, m + 1) == h().pow(m)); // binom(m-1,m-1) h^m
    }
}

TEST_CASE("C_projective examples") {
    CHECK(C_projective(1, 2, 2, 2) == one() + h());
    CHECK(C_projective(1, 2, 2, 1) == Expr() - (one() + h()) * (one() + Expr(2) * h()));
    CHECK(C_projective(2, 3, 3, 2) ==
          Expr() - (one() + h()).pow(2) * (one() + Expr(3) * h()));
    // normalization: C~ of the top diagonal with k = m+1 is 1
    for (int m = 1; m <= 5; ++m)
        CHECK(C_tilde_projective(m, m + 1, m + 1, m + 1) == one());
}

TEST_CASE("K-theoretic identities parts 1-3 for m <= 6") {
    for (int m = 1; m <= 6; ++m)
        for (int i = 1; i <= m + 1; ++i)
            for (int j = 1; j <= m + 1; ++j)
                for (int k = 1; k <= m + 1; ++k) {
                    Expr c = C_projective(m, i, j, k);
                    if (k > i || k > j) CHECK(c.is_zero());
                    if (i > 1 && j < m + 1) CHECK(c == C_projective(m, i - 1, j + 1, k));
                    if (j < m + 1 && k < m + 1) CHECK(c == C_projective(m, i, j + 1, k + 1));
                }
}

TEST_CASE("residue terms of Gr(1,n)") {
    CHECK(c_term_projective(3, 3, 3, 1, 1) == h().pow(2));
    CHECK(c_term_projective(3, 3, 3, 1, 2) == Expr());
    CHECK(c_term_projective(3, 3, 3, 1, 3) == Expr(2) * h().pow(2));
    // diagonal rule
    CHECK(c_term_projective(3, 2, 3, 2, 2) == h().pow(2));
    CHECK(c_term_projective(3, 2, 2, 2, 2) == Expr());
}

TEST_CASE("term sums recover the projective constants for n <= 7") {
    for (int n = 2; n <= 7; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    Expr sum;
                    for (int l = 1; l <= n; ++l) sum += c_term_projective(n, i, j, k, l);
                    CHECK(sum == c_projective(n - 1, i, j, k));
                }
}

TEST_CASE("each residue term is a nonnegative integer multiple of h^(n-1)") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l) {
                        Expr t = c_term_projective(n, i, j, k, l);
                        if (t.is_zero()) continue;
                        Expr ratio = t / h().pow(n - 1);
                        CHECK(ratio.is_constant());
                        CHECK(ratio.coeff().is_integer());
                        CHECK(ratio.coeff().sign() > 0);
                    }
}

TEST_CASE("p polynomial of Gr(1,n)") {
    SUBCASE("designated coefficient at (3,3,3,1)") {
        auto [p, coeff] = p_poly_projective(3, 3, 3, 1);
        CHECK(coeff == Expr(3) * h().pow(2));
        // the polynomial itself: h z^3 + 3 h^2 z^2 + 3 h^3 z + h^4
        Expr z = ex_z(1);
        CHECK(p == h() * z.pow(3) + Expr(3) * h().pow(2) * z.pow(2) +
                       Expr(3) * h().pow(3) * z + h().pow(4));
    }
    SUBCASE("coefficient matches the summed residue terms") {
        for (int n = 3; n <= 6; ++n)
            for (int i = 2; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    for (int k = 1; k < i; ++k) {
                        auto [p, coeff] = p_poly_projective(n, i, j, k);
                        Expr sum;
                        for (int l = 1; l <= n; ++l) sum += c_term_projective(n, i, j, k, l);
                        CHECK(coeff == sum);
                    }
    }
    SUBCASE("negative designated degree means a vanishing constant") {
        // i + j - k < n: coefficient of a negative power is 0
        auto [p, coeff] = p_poly_projective(5, 2, 2, 1);
        CHECK(coeff == Expr());
        CHECK(c_projective(4, 2, 2, 1) == Expr());
    }
    SUBCASE("top-cell coefficient equals binom(2m-k, m-1) h^m") {
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= m; ++k) {
                auto [p, coeff] = p_poly_projective(m + 1, m + 1, m + 1, k);
                CHECK(coeff == Expr(binomial(2 * m - k, m - 1)) * h().pow(m));
            }
    }
}

TEST_CASE("Pieri closed forms on Gr(2,n)") {
    SUBCASE("diagonal") {
        CHECK(c_pieri_gr2(4, 3, 3, 3) == h().pow(4));     // j = n-1
        CHECK(c_pieri_gr2(4, 2, 2, 2) == Expr());          // j != n-1
    }
    SUBCASE("term-by-term example at n = 4, I = J = {3,4}, K = {1,4}") {
        CHECK(c_pieri_term_gr2(4, 3, 3, 1, 1) == h().pow(4));
        CHECK(c_pieri_term_gr2(4, 3, 3, 1, 2) == Expr());
        CHECK(c_pieri_term_gr2(4, 3, 3, 1, 3) == Expr(6) * h().pow(4));
        CHECK(c_pieri_gr2(4, 3, 3, 1) == Expr(7) * h().pow(4));
    }
    SUBCASE("p polynomial coefficient matches the summed terms") {
        for (int n = 4; n <= 6; ++n)
            for (int i = 2; i <= n - 1; ++i)
                for (int j = i; j <= n - 1; ++j)
                    for (int k = 1; k < i; ++k) {
                        auto [p, coeff] = p_poly_pieri(n, i, j, k);
                        CHECK(coeff == c_pieri_gr2(n, i, j, k));
                    }
    }
    SUBCASE("Pieri triple guard") {
        CHECK_THROWS_AS(c_pieri_term_gr2(4, 4, 3, 1, 1), IndexOutOfRange);
    }
}

TEST_CASE("closed-form tables emit the nonzero constants") {
    SCTable t = projective_table(2, "csm");
    CHECK(t.space == "P^2");
    REQUIRE(t.find("3", "3", "1") != nullptr);
    CHECK(*t.find("3", "3", "1") == Expr(3) * h().pow(2));
    CHECK(t.find("1", "1", "1") == nullptr);
}
