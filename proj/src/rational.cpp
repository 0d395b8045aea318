#include "hdlr/rational.hpp"

#include <functional>

namespace hdlr {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw InvalidInput("Rational: cannot parse '" + s + "'");
    if (v_.get_den() == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("Rational: 0 to negative power");
        return Rational(0);
    }
    mpz_class n, d;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), a);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), a);
    mpq_class r = e > 0 ? mpq_class(n) / mpq_class(d) : mpq_class(d) / mpq_class(n);
    r.canonicalize();
    return Rational(r);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

std::size_t Rational::hash() const {
    // cheap but adequate: fold the limbs of num and den
    auto fold = [](const mpz_class& z) {
        std::size_t h = z < 0 ? 0x9e3779b97f4a7c15ull : 0;
        for (std::size_t i = 0, n = mpz_size(z.get_mpz_t()); i < n; ++i)
            h = h * 1099511628211ull + mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i));
        return h;
    };
    return fold(num()) * 31 + fold(den());
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

} // namespace hdlr
