#include "hdlr/expression.hpp"

#include <algorithm>

#include "hdlr/errors.hpp"

namespace hdlr {

Expr::Expr(const Polynomial& p) : c_(0) {
    if (p.is_zero()) return;
    auto [content, prim] = p.content_primitive();
    c_ = content;
    if (!prim.is_constant()) f_.emplace_back(std::move(prim), 1);
}

Expr Expr::from_factors(Rational coeff, std::vector<std::pair<Polynomial, int>> factors) {
    Expr e;
    e.c_ = std::move(coeff);
    e.f_ = std::move(factors);
    e.normalize();
    return e;
}

void Expr::normalize() {
    if (c_.is_zero()) {
        for (auto& [base, e] : f_)
            if (e < 0 && base.is_zero()) throw Error("Expr: zero denominator factor");
        f_.clear();
        return;
    }
    // fold constants, extract content, drop exponent-0 entries
    std::vector<std::pair<Polynomial, int>> fs;
    fs.reserve(f_.size());
    for (auto& [base, e] : f_) {
        if (e == 0) continue;
        if (base.is_zero()) {
            if (e < 0) throw Error("Expr: zero denominator factor");
            c_ = Rational(0);
            f_.clear();
            return;
        }
        auto [content, prim] = base.content_primitive();
        c_ *= content.pow(e);
        if (!prim.is_constant()) fs.emplace_back(std::move(prim), e);
    }
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        return Polynomial::cmp(a.first, b.first) < 0;
    });
    f_.clear();
    for (auto& fe : fs) {
        if (!f_.empty() && f_.back().first == fe.first)
            f_.back().second += fe.second;
        else
            f_.push_back(std::move(fe));
    }
    std::erase_if(f_, [](const auto& fe) { return fe.second == 0; });

    // cancellation: divide factors on one side by factors of the other
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < f_.size() && !changed; ++i) {
            for (std::size_t j = 0; j < f_.size() && !changed; ++j) {
                if (f_[i].second <= 0 || f_[j].second >= 0) continue;
                // positive base i, negative base j: try f_[i] = q * f_[j]
                if (auto q = f_[i].first.divide_exact(f_[j].first)) {
                    int a = f_[i].second;
                    f_[j].second += a;
                    auto [content, prim] = q->content_primitive();
                    c_ *= content.pow(a);
                    if (prim.is_constant()) {
                        f_.erase(f_.begin() + static_cast<std::ptrdiff_t>(i));
                    } else {
                        f_[i].first = std::move(prim);
                    }
                    changed = true;
                } else if (auto r = f_[j].first.divide_exact(f_[i].first)) {
                    // denominator base j = q * numerator base i
                    int b = f_[j].second;
                    f_[i].second += b;
                    auto [content, prim] = r->content_primitive();
                    c_ *= content.pow(b);
                    if (prim.is_constant()) {
                        f_.erase(f_.begin() + static_cast<std::ptrdiff_t>(j));
                    } else {
                        f_[j].first = std::move(prim);
                    }
                    changed = true;
                }
            }
        }
        if (changed) {
            std::sort(f_.begin(), f_.end(), [](const auto& a, const auto& b) {
                return Polynomial::cmp(a.first, b.first) < 0;
            });
            std::vector<std::pair<Polynomial, int>> merged;
            for (auto& fe : f_) {
                if (fe.second == 0) continue;
                if (!merged.empty() && merged.back().first == fe.first)
                    merged.back().second += fe.second;
                else
                    merged.push_back(std::move(fe));
            }
            std::erase_if(merged, [](const auto& fe) { return fe.second == 0; });
            f_ = std::move(merged);
        }
    }
}

bool Expr::is_polynomial() const {
    for (auto& [base, e] : f_)
        if (e < 0) return false;
    return true;
}

Polynomial Expr::numerator() const {
    Polynomial n{c_};
    for (auto& [base, e] : f_)
        if (e > 0) n *= base.pow(e);
    return n;
}

Polynomial Expr::denominator() const {
    Polynomial d{Rational(1)};
    for (auto& [base, e] : f_)
        if (e < 0) d *= base.pow(-e);
    return d;
}

Polynomial Expr::expand() const {
    if (!is_polynomial()) {
        // the factorwise reduction is complete for irreducible denominators;
        // fall back to one whole-numerator division before giving up
        Polynomial n = numerator(), d = denominator();
        if (auto q = n.divide_exact(d)) return *q;
        throw NotPolynomial("Expr: not a polynomial: " + str());
    }
    return numerator();
}

Expr Expr::operator-() const {
    Expr e = *this;
    e.c_ = -e.c_;
    return e;
}

Expr& Expr::operator*=(const Expr& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = Expr();
        return *this;
    }
    c_ *= o.c_;
    f_.insert(f_.end(), o.f_.begin(), o.f_.end());
    normalize();
    return *this;
}

Expr& Expr::operator/=(const Expr& o) { return *this *= o.pow(-1); }

Expr Expr::pow(int e) const {
    if (e == 0) return Expr(Rational(1));
    if (is_zero()) {
        if (e < 0) throw Error("Expr: division by zero");
        return Expr();
    }
    Expr r;
    r.c_ = c_.pow(e);
    r.f_ = f_;
    for (auto& fe : r.f_) fe.second *= e;
    return r;
}

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // shared part: per base the signed minimum exponent; in particular the
    // whole common denominator moves into `shared`, leaving polynomial residues
    std::vector<std::pair<Polynomial, int>> shared, ra, rb;
    std::size_t i = 0, j = 0;
    auto push = [](std::vector<std::pair<Polynomial, int>>& v, const Polynomial& p, int e) {
        if (e != 0) v.emplace_back(p, e);
    };
    while (i < a.f_.size() || j < b.f_.size()) {
        int c;
        if (i == a.f_.size()) c = 1;
        else if (j == b.f_.size()) c = -1;
        else c = Polynomial::cmp(a.f_[i].first, b.f_[j].first);
        if (c < 0) {
            int s = std::min(a.f_[i].second, 0);
            push(shared, a.f_[i].first, s);
            push(ra, a.f_[i].first, a.f_[i].second - s);
            push(rb, a.f_[i].first, -s);
            ++i;
        } else if (c > 0) {
            int s = std::min(b.f_[j].second, 0);
            push(shared, b.f_[j].first, s);
            push(rb, b.f_[j].first, b.f_[j].second - s);
            push(ra, b.f_[j].first, -s);
            ++j;
        } else {
            int s = std::min(a.f_[i].second, b.f_[j].second);
            push(shared, a.f_[i].first, s);
            push(ra, a.f_[i].first, a.f_[i].second - s);
            push(rb, b.f_[j].first, b.f_[j].second - s);
            ++i, ++j;
        }
    }
    // residues are pure products of polynomials: expand and add
    Polynomial pa{a.c_}, pb{b.c_};
    for (auto& [base, e] : ra) pa *= base.pow(e);
    for (auto& [base, e] : rb) pb *= base.pow(e);
    Polynomial n = pa + pb;
    if (n.is_zero()) return Expr();
    shared.emplace_back(std::move(n), 1);
    return Expr::from_factors(Rational(1), std::move(shared));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.c_ == b.c_ && a.f_ == b.f_) return true;
    return (a - b).is_zero();
}

Expr substitute_poly(const Polynomial& p, const std::map<Var, Expr>& bindings) {
    bool touched = false;
    for (auto& [v, e] : bindings) {
        (void)e;
        if (p.degree_of(v) > 0) {
            touched = true;
            break;
        }
    }
    if (!touched) return Expr(p);
    Expr sum;
    for (auto& term : p.terms()) {
        Expr val{term.c};
        for (auto& [v, e] : term.m.entries()) {
            auto it = bindings.find(v);
            if (it != bindings.end())
                val *= it->second.pow(e);
            else
                val *= Expr(v).pow(e);
        }
        sum += val;
    }
    return sum;
}

Expr Expr::substitute(const std::map<Var, Expr>& bindings) const {
    if (is_constant()) return Expr(c_);
    std::vector<std::pair<Expr, int>> values;
    values.reserve(f_.size());
    for (auto& [base, e] : f_) values.emplace_back(substitute_poly(base, bindings), e);
    for (auto& [val, e] : values)
        if (e < 0 && val.is_zero())
            throw IdenticallyZeroDenominator("substitute: denominator factor became zero");
    Expr r{c_};
    for (auto& [val, e] : values) {
        if (val.is_zero()) return Expr();
        r *= val.pow(e);
    }
    return r;
}

std::set<Var> Expr::vars() const {
    std::set<Var> s;
    for (auto& [base, e] : f_) {
        auto bs = base.vars();
        s.insert(bs.begin(), bs.end());
    }
    return s;
}

bool Expr::contains(Var v) const {
    for (auto& [base, e] : f_)
        if (base.degree_of(v) > 0) return true;
    return false;
}

std::string Expr::str() const {
    Polynomial d = denominator();
    if (d.is_constant()) return numerator().str();
    Polynomial n = numerator();
    if (auto q = n.divide_exact(d)) return q->str();
    return "(" + n.str() + ") / (" + d.str() + ")";
}

Expr exact_quotient(const Expr& num, const Expr& den) {
    if (den.is_zero()) throw Error("exact_quotient: zero divisor");
    Expr q = num / den;
    if (q.is_polynomial()) return q;
    Polynomial n = q.numerator(), d = q.denominator();
    if (auto p = n.divide_exact(d)) return Expr(*p);
    throw NotDivisible("exact_quotient: no exact polynomial quotient");
}

Expr coefficient_of(const Expr& expr, Var v, int degree) {
    if (!expr.denominator_vars_satisfy([&](Var w) { return w != v; }))
        throw NotPolynomial("coefficient_of: expression has a pole in " + v.name());
    if (degree < 0) return Expr();
    // the denominator is free of v, so coefficients split across it
    Expr c{expr.numerator().coefficient_of(v, degree)};
    Polynomial d = expr.denominator();
    if (!d.is_constant()) c /= Expr(d);
    return c;
}

namespace {

// truncated power series in one variable, coefficients exact expressions
using Series = std::vector<Expr>; // s[k] = coefficient of v^k, size K+1

Series series_mul(const Series& a, const Series& b, int K) {
    Series r(static_cast<std::size_t>(K) + 1, Expr());
    for (int i = 0; i <= K; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            r[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

Series series_inverse(const Series& a, int K) {
    Series r(static_cast<std::size_t>(K) + 1, Expr());
    Expr inv0 = Expr(Rational(1)) / a[0];
    r[0] = inv0;
    for (int k = 1; k <= K; ++k) {
        Expr acc;
        for (int j = 1; j <= k; ++j)
            acc += a[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
        r[static_cast<std::size_t>(k)] = -(acc * inv0);
    }
    return r;
}

Series series_pow(Series base, int e, int K) {
    Series r(static_cast<std::size_t>(K) + 1, Expr());
    r[0] = Expr(Rational(1));
    bool invert = e < 0;
    unsigned k = static_cast<unsigned>(invert ? -e : e);
    if (invert) base = series_inverse(base, K);
    while (k) {
        if (k & 1u) r = series_mul(r, base, K);
        k >>= 1u;
        if (k) base = series_mul(base, base, K);
    }
    return r;
}

Series poly_to_series(const Polynomial& unit, Var v, int K) {
    Series s(static_cast<std::size_t>(K) + 1, Expr());
    for (int k = 0; k <= std::min(K, unit.degree_of(v)); ++k)
        s[static_cast<std::size_t>(k)] = Expr(unit.coefficient_of(v, k));
    return s;
}

} // namespace

std::pair<int, std::vector<Expr>> series_at_zero(const Expr& expr, Var v, int K) {
    if (expr.is_zero()) throw Error("series_at_zero: zero expression has no valuation");
    int valuation = 0;
    Series acc(static_cast<std::size_t>(K) + 1, Expr());
    acc[0] = Expr(expr.coeff());
    for (auto& [base, e] : expr.factors()) {
        int val = base.valuation_of(v);
        valuation += e * val;
        Polynomial unit = base.shift_down(v, val);
        acc = series_mul(acc, series_pow(poly_to_series(unit, v, K), e, K), K);
    }
    return {valuation, std::move(acc)};
}

Expr residue_at(const Expr& expr, Var v, const Expr& point) {
    if (point.contains(v)) throw InvalidInput("residue_at: point depends on " + v.name());
    Expr shifted = point.is_zero()
                       ? expr
                       : expr.substitute({{v, Expr(v) + point}});
    if (shifted.is_zero()) return Expr();
    auto probe = series_at_zero(shifted, v, 0);
    int order = -probe.first;
    if (order <= 0) return Expr();
    auto [val, s] = series_at_zero(shifted, v, order - 1);
    return s[static_cast<std::size_t>(order - 1)];
}

std::optional<Expr> limit_at(const Expr& expr, Var v, const Expr& point) {
    if (point.contains(v)) throw InvalidInput("limit_at: point depends on " + v.name());
    Expr shifted = point.is_zero() ? expr : expr.substitute({{v, Expr(v) + point}});
    if (shifted.is_zero()) return Expr();
    auto [val, s] = series_at_zero(shifted, v, 0);
    if (val < 0) return std::nullopt;
    if (val > 0) return Expr();
    return s[0];
}

} // namespace hdlr
