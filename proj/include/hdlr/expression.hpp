#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hdlr/polynomial.hpp"

namespace hdlr {

/// Multivariate rational function kept in factored form:
///     coeff * prod_i base_i^{e_i},   e_i in Z \ {0},
/// with every base primitive (coprime integer coefficients, positive leading
/// coefficient), non-constant, and the list sorted with equal bases merged.
/// Numerators produced by addition stay expanded; denominators stay split
/// into their original (linear, hence irreducible) factors, so repeated
/// exact division fully reduces the fraction.
class Expr {
public:
    Expr() : c_(0) {}
    Expr(Rational c) : c_(std::move(c)) {} // NOLINT: implicit by design
    Expr(long n) : c_(n) {}                // NOLINT
    Expr(int n) : c_(n) {}                 // NOLINT
    explicit Expr(Var v) : c_(1) { f_.emplace_back(Polynomial(v), 1); }
    explicit Expr(const Polynomial& p);
    static Expr from_factors(Rational coeff, std::vector<std::pair<Polynomial, int>> factors);

    bool is_zero() const { return c_.is_zero(); }
    bool is_one() const { return c_.is_one() && f_.empty(); }
    bool is_constant() const { return f_.empty(); }
    bool is_polynomial() const;
    /// Every denominator factor involves only the given variable kinds.
    template <class Pred>
    bool denominator_vars_satisfy(Pred&& pred) const {
        for (auto& [base, e] : f_)
            if (e < 0)
                for (Var v : base.vars())
                    if (!pred(v)) return false;
        return true;
    }

    const Rational& coeff() const { return c_; }
    const std::vector<std::pair<Polynomial, int>>& factors() const { return f_; }

    /// Expanded numerator (rational coefficients; includes the scalar).
    Polynomial numerator() const;
    /// Expanded denominator: primitive with positive leading coefficient.
    Polynomial denominator() const;
    /// Expanded polynomial form; throws NotPolynomial if a denominator remains.
    Polynomial expand() const;

    Expr operator-() const;
    Expr& operator+=(const Expr& o) { *this = *this + o; return *this; }
    Expr& operator-=(const Expr& o) { *this = *this + (-o); return *this; }
    Expr& operator*=(const Expr& o);
    Expr& operator/=(const Expr& o);
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
    friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
    friend Expr operator/(Expr a, const Expr& b) { return a /= b; }
    Expr pow(int e) const;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Exact substitution; bindings may be rational expressions.
    /// Throws IdenticallyZeroDenominator when a denominator factor vanishes.
    Expr substitute(const std::map<Var, Expr>& bindings) const;

    std::set<Var> vars() const;
    bool contains(Var v) const;

    /// Canonical string: expanded "N" or "(N) / (D)" with D primitive.
    std::string str() const;

private:
    Rational c_;
    std::vector<std::pair<Polynomial, int>> f_;
    void normalize();
};

inline Expr ex_z(int i) { return Expr(var_z(i)); }
inline Expr ex_t(int i) { return Expr(var_t(i)); }
inline Expr ex_h() { return Expr(var_h()); }

/// q with q * den = num exactly (expanded certificate); throws NotDivisible.
Expr exact_quotient(const Expr& num, const Expr& den);

/// Coefficient of v^degree; expr must be polynomial in v.
Expr coefficient_of(const Expr& expr, Var v, int degree);

/// v-adic valuation at v = 0 together with the first K+1 power-series
/// coefficients of expr / v^valuation (exact; coefficients in the other vars).
std::pair<int, std::vector<Expr>> series_at_zero(const Expr& expr, Var v, int K);

/// Residue of expr at v = point, by shifted exact series division.
Expr residue_at(const Expr& expr, Var v, const Expr& point);

/// Limit of expr as v -> point along v; nullopt when there is a genuine pole.
std::optional<Expr> limit_at(const Expr& expr, Var v, const Expr& point);

/// Substitute into a plain polynomial (helper; bindings may be rational).
Expr substitute_poly(const Polynomial& p, const std::map<Var, Expr>& bindings);

} // namespace hdlr
