#include "hdlr/limits.hpp"

#include "hdlr/errors.hpp"

namespace hdlr {

namespace {

/// Evaluation limit along the generic line z_b = point + b*eps; nullopt on pole.
std::optional<Expr> line_limit(const Expr& expr, int n, const Rational& point) {
    std::map<Var, Expr> bind;
    for (int b = 1; b <= n; ++b)
        bind[var_z(b)] = Expr(point) + Expr(b) * Expr(var_eps());
    Expr along;
    try {
        along = expr.substitute(bind);
    } catch (const IdenticallyZeroDenominator&) {
        return std::nullopt;
    }
    return limit_at(along, var_eps(), Expr());
}

} // namespace

LimitResult limit_H(const Expr& expr, int n) {
    // sum_and_cancel: after full reduction the expression must be free of
    // z-denominators, so the limit is evaluation at the origin
    if (!expr.denominator_vars_satisfy([](Var v) { return v == var_h(); }))
        throw PoleAtOrigin("limit_H: certified non-polynomial in z: " + expr.str());
    std::map<Var, Expr> zero;
    for (int b = 1; b <= n; ++b) zero[var_z(b)] = Expr();
    Expr value = expr.substitute(zero);
    // line_substitution cross-check
    auto check = line_limit(expr, n, Rational(0));
    if (!check) throw PoleAtOrigin("limit_H: pole along the probe line");
    if (!(*check == value)) throw Error("limit_H: evaluation routes disagree");
    return {value, "sum_and_cancel", expr};
}

LimitResult limit_K(const Expr& expr, int n) {
    // zeta_b = z_b - 1, then the limit at zeta -> 0
    std::map<Var, Expr> to_one;
    for (int b = 1; b <= n; ++b) to_one[var_z(b)] = Expr(1);
    Expr value;
    try {
        value = expr.substitute(to_one);
    } catch (const IdenticallyZeroDenominator&) {
        throw PoleAtOne("limit_K: denominator vanishes at z = 1: " + expr.str());
    }
    auto check = line_limit(expr, n, Rational(1));
    if (!check) throw PoleAtOne("limit_K: pole along the probe line at z = 1");
    if (!(*check == value)) throw Error("limit_K: evaluation routes disagree");
    return {value, "sum_and_cancel", expr};
}

NuPolynomial NuPolynomial::from_h(const Expr& h_poly) {
    NuPolynomial p;
    p.nu_ = nu_expand(h_poly);
    if (!(nu_to_h(p.nu_) == h_poly)) throw Error("NuPolynomial: round trip failed");
    return p;
}

Expr NuPolynomial::to_h() const { return nu_to_h(nu_); }

bool NuPolynomial::nonnegative() const {
    if (nu_.is_zero()) return true;
    Polynomial p = nu_.expand();
    for (auto& term : p.terms())
        if (term.c.sign() < 0) return false;
    return true;
}

Rational NuPolynomial::lowest_coefficient() const {
    if (nu_.is_zero()) return Rational(0);
    Polynomial p = nu_.expand();
    int v = p.valuation_of(var_nu());
    return p.coefficient_of(var_nu(), v).constant_value();
}

int NuPolynomial::lowest_degree() const {
    if (nu_.is_zero()) return -1;
    return nu_.expand().valuation_of(var_nu());
}

Expr nu_expand(const Expr& h_poly) {
    if (!h_poly.is_polynomial())
        throw NotPolynomial("nu_expand: input not polynomial: " + h_poly.str());
    Expr out = h_poly.substitute({{var_h(), Expr(-1) - Expr(var_nu())}});
    return out;
}

Expr nu_to_h(const Expr& nu_poly) {
    return nu_poly.substitute({{var_nu(), Expr(-1) - ex_h()}});
}

void Budget::check(int d, int n) const {
    int lim_d = allow_big ? 3 : max_d;
    int lim_n = allow_big ? std::max(6, max_n) : max_n;
    int eff_d = std::min(d, n - d);
    if (d < 0 || n < 1 || d > n) throw InvalidInput("Budget: need 0 <= d <= n");
    if (eff_d > lim_d || n > lim_n)
        throw BudgetExceeded("Gr(" + std::to_string(d) + "," + std::to_string(n) +
                             ") exceeds the configured budget");
}

Expr sc_nonequivariant(Theory th, const SubsetIndex& I, const SubsetIndex& J,
                       const SubsetIndex& K, const Budget& budget) {
    budget.check(I.d(), I.n);
    Expr hat = equivariant_sc(th, I, J, K);
    LimitResult lim = th == Theory::H ? limit_H(hat, I.n) : limit_K(hat, I.n);
    Expr v = lim.value;
    if (!v.is_polynomial() || !v.denominator_vars_satisfy([](Var) { return false; }))
        throw NotPolynomial("sc_nonequivariant: limit not polynomial in h: " + v.str());
    return v;
}

Expr sc_nonequivariant(const GrContext& ctx, int ipos, int jpos, int kpos) {
    Expr hat = ctx.equivariant(ipos, jpos, kpos);
    LimitResult lim = ctx.theory() == Theory::H ? limit_H(hat, ctx.n()) : limit_K(hat, ctx.n());
    Expr v = lim.value;
    if (!v.is_polynomial())
        throw NotPolynomial("sc_nonequivariant: limit not polynomial in h: " + v.str());
    return v;
}

SCTable gr_table(Theory th, int d, int n, bool equivariant, const Budget& budget) {
    budget.check(d, n);
    GrContext ctx(th, d, n);
    SCTable t;
    t.space = "Gr(" + std::to_string(d) + "," + std::to_string(n) + ")";
    t.kind = th == Theory::H ? "csm" : "mc";
    t.theory = theory_name(th);
    t.pipeline = "weightfn";
    t.equivariant = equivariant;
    int N = static_cast<int>(ctx.subsets().size());
    for (auto& s : ctx.subsets()) t.labels.push_back(s.str());
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                Expr v = equivariant ? ctx.equivariant(i, j, k) : sc_nonequivariant(ctx, i, j, k);
                if (v.is_zero()) continue;
                t.entries.push_back({ctx.subsets()[static_cast<std::size_t>(i)].str(),
                                     ctx.subsets()[static_cast<std::size_t>(j)].str(),
                                     ctx.subsets()[static_cast<std::size_t>(k)].str(), std::move(v)});
            }
    return t;
}

} // namespace hdlr
