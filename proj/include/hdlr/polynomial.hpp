#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdlr/rational.hpp"
#include "hdlr/variable.hpp"

namespace hdlr {

/// Power product with positive exponents, sorted by variable.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Var v, int e = 1);

    bool is_one() const { return e_.empty(); }
    int total_degree() const;
    int degree_of(Var v) const;
    std::span<const std::pair<Var, int>> entries() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// *this / d; caller must ensure d.divides(*this).
    Monomial divided_by(const Monomial& d) const;

    /// Graded lexicographic order; ties broken so that the earlier variable
    /// in the canonical order carries more weight. Returns <0, 0, >0.
    static int cmp(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    std::size_t hash() const;

    std::string str() const; // "z1^2*h", "1" for the empty product

private:
    std::vector<std::pair<Var, int>> e_;
};

struct Term {
    Monomial m;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Expanded multivariate polynomial over Q: terms sorted descending in the
/// canonical monomial order, no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational c);
    explicit Polynomial(Var v);
    static Polynomial from_terms(std::vector<Term> terms); // normalizes

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    Rational constant_value() const; // requires is_constant()
    const std::vector<Term>& terms() const { return t_; }
    const Term& leading() const { return t_.front(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }
    Polynomial& operator*=(const Rational& c);
    Polynomial pow(int e) const; // e >= 0

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

    int total_degree() const; // -1 for zero
    int degree_of(Var v) const;
    /// Smallest exponent of v over all terms (v-adic valuation); 0 if absent, -1 for zero poly.
    int valuation_of(Var v) const;
    bool contains(Var v) const { return degree_of(v) > 0; }
    std::set<Var> vars() const;

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Polynomial coefficient_of(Var v, int k) const;
    /// All (exponent, coefficient) pairs w.r.t. v, ascending in exponent.
    std::vector<std::pair<int, Polynomial>> collect(Var v) const;
    /// Divides every term by v^k (requires valuation_of(v) >= k).
    Polynomial shift_down(Var v, int k) const;

    /// Exact multivariate division; nullopt when no exact quotient exists.
    std::optional<Polynomial> divide_exact(const Polynomial& d) const;

    /// content * primitive: primitive has coprime integer coefficients and
    /// positive leading coefficient. Zero polynomial: content 0, primitive 0.
    std::pair<Rational, Polynomial> content_primitive() const;

    /// Total order on polynomials (for canonical factor sorting).
    static int cmp(const Polynomial& a, const Polynomial& b);
    std::size_t hash() const;

    std::string str() const; // canonical, e.g. "h^2 - 2*z1*h + 1/2"

private:
    std::vector<Term> t_;
    void normalize();
};

} // namespace hdlr
