#include "hdlr/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "hdlr/errors.hpp"

namespace hdlr {

Monomial Monomial::of(Var v, int e) {
    Monomial m;
    if (e < 0) throw Error("Monomial: negative exponent");
    if (e > 0) m.e_.emplace_back(v, e);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : e_) d += e;
    return d;
}

int Monomial::degree_of(Var v) const {
    for (auto& [w, e] : e_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first == o.e_[j].first) {
            r.e_.emplace_back(e_[i].first, e_[i].second + o.e_[j].second);
            ++i, ++j;
        } else if (e_[i].first < o.e_[j].first) {
            r.e_.push_back(e_[i++]);
        } else {
            r.e_.push_back(o.e_[j++]);
        }
    }
    for (; i < e_.size(); ++i) r.e_.push_back(e_[i]);
    for (; j < o.e_.size(); ++j) r.e_.push_back(o.e_[j]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (auto& [v, e] : e_) {
        while (j < o.e_.size() && o.e_[j].first < v) ++j;
        if (j == o.e_.size() || o.e_[j].first != v || o.e_[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, e] : e_) {
        int sub = 0;
        while (j < d.e_.size() && d.e_[j].first < v) ++j;
        if (j < d.e_.size() && d.e_[j].first == v) sub = d.e_[j].second;
        if (e - sub < 0) throw Error("Monomial: not divisible");
        if (e - sub > 0) r.e_.emplace_back(v, e - sub);
    }
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // lexicographic with the earliest variable dominant
    std::size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
        if (a.e_[i].first == b.e_[j].first) {
            if (a.e_[i].second != b.e_[j].second)
                return a.e_[i].second < b.e_[j].second ? -1 : 1;
            ++i, ++j;
        } else {
            // the one holding the earlier variable has positive exponent there
            return a.e_[i].first < b.e_[j].first ? 1 : -1;
        }
    }
    if (i < a.e_.size()) return 1;
    if (j < b.e_.size()) return -1;
    return 0;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto& [v, e] : e_) {
        h = (h ^ (static_cast<std::size_t>(v.kind) << 24 ^ v.index)) * 1099511628211ull;
        h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
    }
    return h;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (auto& [v, e] : e_) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {
struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};
} // namespace

Polynomial::Polynomial(Rational c) {
    if (!c.is_zero()) t_.push_back({Monomial(), std::move(c)});
}

Polynomial::Polynomial(Var v) { t_.push_back({Monomial::of(v), Rational(1)}); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& term : t_) {
        if (!out.empty() && out.back().m == term.m)
            out.back().c += term.c;
        else
            out.push_back(std::move(term));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    // a cancellation may expose an earlier duplicate only if input was unsorted equal-run; handled above
    t_ = std::move(out);
}

Rational Polynomial::constant_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_constant()) throw Error("Polynomial: not constant");
    return t_[0].c;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& term : r.t_) term.c = -term.c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    std::vector<Term> merged;
    merged.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].m, o.t_[j].m);
        if (c > 0) {
            merged.push_back(std::move(t_[i++]));
        } else if (c < 0) {
            merged.push_back(o.t_[j++]);
        } else {
            Rational s = t_[i].c + o.t_[j].c;
            if (!s.is_zero()) merged.push_back({t_[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < t_.size(); ++i) merged.push_back(std::move(t_[i]));
    for (; j < o.t_.size(); ++j) merged.push_back(o.t_[j]);
    t_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    if (a.t_.size() == 1 || b.t_.size() == 1) {
        const Polynomial& big = a.t_.size() == 1 ? b : a;
        const Term& s = a.t_.size() == 1 ? a.t_[0] : b.t_[0];
        std::vector<Term> out;
        out.reserve(big.t_.size());
        for (auto& term : big.t_) out.push_back({term.m * s.m, term.c * s.c});
        Polynomial r;
        r.t_ = std::move(out); // order preserved under one-term multiplication
        return r;
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.t_.size() * 2);
    for (auto& ta : a.t_)
        for (auto& tb : b.t_) {
            auto [it, fresh] = acc.try_emplace(ta.m * tb.m, Rational(0));
            it->second += ta.c * tb.c;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return Monomial::cmp(x.m, y.m) > 0; });
    Polynomial r;
    r.t_ = std::move(out);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& term : t_) term.c *= c;
    return *this;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error("Polynomial: negative power");
    Polynomial r{Rational(1)};
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (auto& term : t_) d = std::max(d, term.m.total_degree());
    return d;
}

int Polynomial::degree_of(Var v) const {
    int d = 0;
    for (auto& term : t_) d = std::max(d, term.m.degree_of(v));
    return d;
}

int Polynomial::valuation_of(Var v) const {
    if (t_.empty()) return -1;
    int d = t_[0].m.degree_of(v);
    for (auto& term : t_) d = std::min(d, term.m.degree_of(v));
    return d;
}

std::set<Var> Polynomial::vars() const {
    std::set<Var> s;
    for (auto& term : t_)
        for (auto& [v, e] : term.m.entries()) s.insert(v);
    return s;
}

Polynomial Polynomial::coefficient_of(Var v, int k) const {
    std::vector<Term> out;
    for (auto& term : t_)
        if (term.m.degree_of(v) == k)
            out.push_back({term.m.divided_by(Monomial::of(v, k)), term.c});
    return from_terms(std::move(out));
}

std::vector<std::pair<int, Polynomial>> Polynomial::collect(Var v) const {
    std::vector<std::pair<int, Polynomial>> out;
    for (int k = valuation_of(v); k <= degree_of(v); ++k) {
        if (k < 0) break;
        Polynomial c = coefficient_of(v, k);
        if (!c.is_zero()) out.emplace_back(k, std::move(c));
    }
    return out;
}

Polynomial Polynomial::shift_down(Var v, int k) const {
    if (k == 0) return *this;
    std::vector<Term> out;
    out.reserve(t_.size());
    Monomial d = Monomial::of(v, k);
    for (auto& term : t_) out.push_back({term.m.divided_by(d), term.c});
    Polynomial r;
    r.t_ = std::move(out);
    r.normalize(); // order can change when v disappears from terms
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw Error("Polynomial: division by zero");
    if (is_zero()) return Polynomial();
    if (d.is_constant()) {
        Polynomial q = *this;
        q *= d.constant_value().reciprocal();
        return q;
    }
    Polynomial rem = *this;
    std::vector<Term> q;
    const Term& lead = d.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lead.m.divides(lr.m)) return std::nullopt;
        Term qt{lr.m.divided_by(lead.m), lr.c / lead.c};
        Polynomial sub;
        sub.t_.push_back(qt);
        rem -= sub * d;
        q.push_back(std::move(qt));
    }
    return from_terms(std::move(q));
}

std::pair<Rational, Polynomial> Polynomial::content_primitive() const {
    if (is_zero()) return {Rational(0), Polynomial()};
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& term : t_) {
        num_gcd = gcd(num_gcd, term.c.num());
        mpz_class g = gcd(den_lcm, term.c.den());
        den_lcm = den_lcm / g * term.c.den();
    }
    Rational content{mpq_class(num_gcd, den_lcm)};
    if (t_[0].c.sign() < 0) content = -content;
    Polynomial prim = *this;
    prim *= content.reciprocal();
    return {content, prim};
}

int Polynomial::cmp(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.t_.size(); ++i) {
        int c = Monomial::cmp(a.t_[i].m, b.t_[i].m);
        if (c != 0) return c;
        if (a.t_[i].c != b.t_[i].c) return a.t_[i].c < b.t_[i].c ? -1 : 1;
    }
    return 0;
}

std::size_t Polynomial::hash() const {
    std::size_t h = 14695981039346656037ull;
    for (auto& term : t_) h = (h ^ term.m.hash() ^ term.c.hash()) * 1099511628211ull;
    return h;
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const Term& term = t_[i];
        Rational c = term.c;
        if (i == 0) {
            if (c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (term.m.is_one()) {
            s += c.str();
        } else {
            if (!c.is_one()) s += c.str() + "*";
            s += term.m.str();
        }
    }
    return s;
}

} // namespace hdlr
