#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "hdlr/errors.hpp"

namespace hdlr {

/// Arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1, den >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(int n) : v_(n) {}             // NOLINT
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    /// Parses "123", "-4/7".
    explicit Rational(const std::string& s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(long e) const;
    Rational reciprocal() const;

    /// "7", "-3/4"
    std::string str() const { return v_.get_str(); }
    std::size_t hash() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// gcd of |a|,|b| over Z (gcd(0,0) = 0).
mpz_class gcd(const mpz_class& a, const mpz_class& b);

/// Combinatorial binomial: 0 when k < 0, k > n, or n < 0; else n!/(k!(n-k)!).
Rational binomial(long n, long k);

} // namespace hdlr
