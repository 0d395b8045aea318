#pragma once

#include <string>

#include "hdlr/expression.hpp"
#include "hdlr/weightfn.hpp"

namespace hdlr {

/// Result of a nonequivariant degeneration. Both evaluation routes are run
/// and must agree exactly; `certificate` keeps the reduced input expression.
struct LimitResult {
    Expr value;
    std::string method; // "sum_and_cancel" (cross-checked by "line_substitution")
    Expr certificate;
};

/// z_1..z_n -> 0. The input must reduce to a polynomial in the z variables
/// (denominators in h alone are tolerated); otherwise PoleAtOrigin.
LimitResult limit_H(const Expr& expr, int n);

/// z_1..z_n -> 1 through the change of variables zeta_b = z_b - 1; the input
/// may be Laurent in z. Throws PoleAtOne.
LimitResult limit_K(const Expr& expr, int n);

/// Polynomial in nu = -1-h, with the exact h round trip asserted.
class NuPolynomial {
public:
    static NuPolynomial from_h(const Expr& h_poly);
    const Expr& nu_form() const { return nu_; }
    Expr to_h() const;
    /// All coefficients nonnegative (content of Conjecture statements).
    bool nonnegative() const;
    /// Coefficient of the lowest nu-power (zero polynomial: 0).
    Rational lowest_coefficient() const;
    int lowest_degree() const;

private:
    Expr nu_;
};

/// Exact rewrite h = -1 - nu.
Expr nu_expand(const Expr& h_poly);
/// Inverse rewrite nu = -1 - h.
Expr nu_to_h(const Expr& nu_poly);

/// Size budget for weight-function computations.
struct Budget {
    int max_d = 2;
    int max_n = 5;
    bool allow_big = false; // opens Gr(3,6) for single constants
    void check(int d, int n) const;
};

/// Nonequivariant structure constant: equivariant_sc composed with the
/// matching limit. Cohomology: polynomial in h; K-theory: polynomial in h
/// whose nu-form is exposed through NuPolynomial.
Expr sc_nonequivariant(Theory th, const SubsetIndex& I, const SubsetIndex& J,
                       const SubsetIndex& K, const Budget& budget = {});

/// Same, through a prebuilt restriction cache.
Expr sc_nonequivariant(const GrContext& ctx, int ipos, int jpos, int kpos);

/// Full nonequivariant (or equivariant) table for Gr(d,n).
SCTable gr_table(Theory th, int d, int n, bool equivariant, const Budget& budget = {});

} // namespace hdlr
