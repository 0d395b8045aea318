#pragma once

#include <array>
#include <utility>

#include "hdlr/expression.hpp"
#include "hdlr/sctable.hpp"

namespace hdlr {

/// Closed-form structure constants of projective spaces and the Pieri-type
/// constants of 2-plane Grassmannians, realized through exact residues.

/// Cohomological constant of P^m: binom(i+j-k-2, m-1) h^m.
Expr c_projective(int m, int i, int j, int k);

/// K-theoretic constant of P^m, signed and unnormalized:
/// C = (-1)^(m+i+j+k+1) (1+h)^m * [ binom(i+j-k-2, m) h^(i+j-k-m-2)
///                                 + binom(i+j-k-1, m) h^(i+j-k-m-1) ].
Expr C_projective(int m, int i, int j, int k);
/// The normalized form C~ alone.
Expr C_tilde_projective(int m, int i, int j, int k);

/// Single residue term c^{k,l}_{i,j} for Gr(1,n); the three residue cases plus
/// the diagonal rule.
Expr c_term_projective(int n, int i, int j, int k, int l);

/// The polynomial p^k_{i,j}(z) together with its designated coefficient
/// (the degree i+j-k-n term in z). Requires k < i <= j.
std::pair<Expr, Expr> p_poly_projective(int n, int i, int j, int k);

/// Pieri constants of Gr(2,n): subsets are encoded by their least element
/// (all of I, J, K, L contain n). Residue term for L = {l, n}.
Expr c_pieri_term_gr2(int n, int i, int j, int k, int l);
/// Full Pieri constant: sum over l.
Expr c_pieri_gr2(int n, int i, int j, int k);
/// p^K_{I,J} and its degree i+j-k-n+1 coefficient. Requires k < i <= j.
std::pair<Expr, Expr> p_poly_pieri(int n, int i, int j, int k);

/// Full closed-form tables (pipeline "closedform").
SCTable projective_table(int m, const std::string& kind); // kind: csm | mc

} // namespace hdlr
