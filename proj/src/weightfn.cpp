#include "hdlr/weightfn.hpp"

#include <algorithm>

#include "hdlr/errors.hpp"

namespace hdlr {

SubsetIndex::SubsetIndex(int n_, std::vector<int> elems_) : n(n_), elems(std::move(elems_)) {
    std::sort(elems.begin(), elems.end());
    for (std::size_t a = 0; a < elems.size(); ++a) {
        if (elems[a] < 1 || elems[a] > n) throw IndexOutOfRange("SubsetIndex: element out of range");
        if (a > 0 && elems[a] == elems[a - 1]) throw InvalidInput("SubsetIndex: repeated element");
    }
}

SubsetIndex SubsetIndex::parse(int n, const std::string& text) {
    std::vector<int> e;
    if (text.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            e.push_back(std::stoi(text.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw InvalidInput("SubsetIndex: bad digit string '" + text + "'");
            e.push_back(c - '0');
        }
    }
    return SubsetIndex(n, std::move(e));
}

int SubsetIndex::dim() const {
    int s = 0;
    for (std::size_t a = 0; a < elems.size(); ++a) s += elems[a] - static_cast<int>(a) - 1;
    return s;
}

int SubsetIndex::codim() const { return d() * (n - d()) - dim(); }

bool SubsetIndex::contains(int b) const {
    return std::binary_search(elems.begin(), elems.end(), b);
}

bool SubsetIndex::leq(const SubsetIndex& o) const {
    if (d() != o.d()) return false;
    for (std::size_t a = 0; a < elems.size(); ++a)
        if (elems[a] > o.elems[a]) return false;
    return true;
}

std::vector<int> SubsetIndex::to_partition() const {
    std::vector<int> lambda;
    for (std::size_t a = 0; a < elems.size(); ++a)
        lambda.push_back((n - d()) - (elems[a] - static_cast<int>(a) - 1));
    return lambda; // weakly decreasing since i_a - a is weakly increasing
}

std::string SubsetIndex::str() const {
    std::string s;
    bool digits = n < 10;
    for (std::size_t a = 0; a < elems.size(); ++a) {
        if (!digits && a) s += ",";
        s += std::to_string(elems[a]);
    }
    return s;
}

std::vector<SubsetIndex> all_subsets(int n, int d) {
    std::vector<SubsetIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) cur[static_cast<std::size_t>(a)] = a + 1;
    while (true) {
        out.emplace_back(n, cur);
        int a = d - 1;
        while (a >= 0 && cur[static_cast<std::size_t>(a)] == n - d + a + 1) --a;
        if (a < 0) break;
        ++cur[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < d; ++b)
            cur[static_cast<std::size_t>(b)] = cur[static_cast<std::size_t>(b - 1)] + 1;
    }
    return out;
}

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int b = 1; b <= n; ++b) p[static_cast<std::size_t>(b - 1)] = b;
    return p;
}

Perm longest_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int b = 1; b <= n; ++b) p[static_cast<std::size_t>(b - 1)] = n + 1 - b;
    return p;
}

namespace {

Perm inverse_perm(const Perm& s) {
    Perm inv(s.size());
    for (std::size_t b = 0; b < s.size(); ++b) inv[static_cast<std::size_t>(s[b] - 1)] = static_cast<int>(b) + 1;
    return inv;
}

SubsetIndex apply_perm_to_subset(const Perm& s, const SubsetIndex& I) {
    std::vector<int> e;
    for (int i : I.elems) e.push_back(s[static_cast<std::size_t>(i - 1)]);
    return SubsetIndex(I.n, std::move(e));
}

std::vector<Perm> all_perms(int d) {
    std::vector<Perm> out;
    Perm p = identity_perm(d);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

Expr weight_U(Theory th, const SubsetIndex& I) {
    int n = I.n, d = I.d();
    Expr u{Rational(1)};
    Expr h = ex_h();
    for (int a = 1; a <= d; ++a) {
        int ia = I.elems[static_cast<std::size_t>(a - 1)];
        for (int b = 1; b <= n; ++b) {
            Expr zb = ex_z(b), ta = ex_t(a);
            if (th == Theory::H) {
                if (b < ia)
                    u *= zb - ta + h;
                else if (b == ia)
                    u *= h;
                else
                    u *= zb - ta;
            } else {
                if (b < ia)
                    u *= (zb + h * ta) / zb; // 1 + h t_a / z_b
                else if (b == ia)
                    u *= (Expr(1) + h) * ta / zb;
                else
                    u *= (zb - ta) / zb; // 1 - t_a / z_b
            }
        }
    }
    for (int a = 1; a <= d; ++a)
        for (int b = 1; b <= d; ++b) {
            Expr ta = ex_t(a), tb = ex_t(b);
            if (a < b) u /= th == Theory::H ? (tb - ta) : (tb - ta) / tb; // 1 - t_a/t_b
            if (b <= a) u /= th == Theory::H ? (tb - ta + h) : (tb + h * ta) / tb; // 1 + h t_a/t_b
        }
    return u;
}

namespace {

/// Shared core: W_{sigma,I} with t either left free (subst_t empty) or bound
/// to given expressions per symmetrization slot.
Expr weight_W_impl(Theory th, const Perm& sigma, const SubsetIndex& I,
                   const std::vector<Expr>* t_values, bool iota) {
    int n = I.n, d = I.d();
    SubsetIndex Iback = apply_perm_to_subset(inverse_perm(sigma), I);
    Expr u = weight_U(th, Iback);
    Expr sum;
    for (const Perm& tau : all_perms(d)) {
        std::map<Var, Expr> bind;
        for (int b = 1; b <= n; ++b) {
            Expr img = Expr(var_z(sigma[static_cast<std::size_t>(b - 1)]));
            bind[var_z(b)] = iota ? Expr(1) / img : img;
        }
        if (iota) bind[var_h()] = Expr(1) / ex_h();
        for (int a = 1; a <= d; ++a) {
            // slot a of U receives t_{tau(a)} (or its bound value)
            int slot = tau[static_cast<std::size_t>(a - 1)];
            Expr val = t_values ? (*t_values)[static_cast<std::size_t>(slot - 1)]
                                : Expr(var_t(slot));
            bind[var_t(a)] = iota ? Expr(1) / val : val;
        }
        sum += u.substitute(bind);
    }
    return sum;
}

} // namespace

Expr weight_W(Theory th, const Perm& sigma, const SubsetIndex& I) {
    return weight_W_impl(th, sigma, I, nullptr, false);
}

Expr restrict_W(Theory th, const Perm& sigma, const SubsetIndex& I, const SubsetIndex& L,
                bool iota) {
    std::vector<Expr> tv;
    for (int l : L.elems) tv.emplace_back(var_z(l));
    return weight_W_impl(th, sigma, I, &tv, iota);
}

namespace {

bool laurent_ok(const Expr& e) {
    for (auto& [base, exp] : e.factors()) {
        if (exp >= 0) continue;
        if (base.terms().size() != 1) return false; // only pure monomials below
    }
    return true;
}

} // namespace

Expr restriction(Theory th, const SubsetIndex& I, const SubsetIndex& J) {
    Expr e = restrict_W(th, identity_perm(I.n), I, J, false);
    bool ok = th == Theory::H ? e.is_polynomial() : laurent_ok(e);
    if (!ok)
        throw NotPolynomialAfterRestriction("restriction(" + I.str() + ", " + J.str() +
                                            ") is not polynomial: " + e.str());
    return e;
}

Expr rq_product(Theory th, const SubsetIndex& I) {
    Expr p{Rational(1)};
    Expr h = ex_h();
    for (int a : I.elems)
        for (int b = 1; b <= I.n; ++b) {
            if (I.contains(b)) continue;
            Expr za = ex_z(a), zb = ex_z(b);
            if (th == Theory::H)
                p *= (zb - za) * (zb - za + h);
            else
                p *= ((zb - za) / zb) * ((h * za + zb) / (h * za)); // (1 - za/zb)(1 + zb/(h za))
        }
    return p;
}

Expr dual_weight_at(Theory th, const SubsetIndex& K, const SubsetIndex& L) {
    Perm s0 = longest_perm(K.n);
    if (th == Theory::H) return restrict_W(th, s0, K, L, false);
    int dim = K.dim();
    Expr twist = Expr(dim % 2 ? -1 : 1) * ex_h().pow(-dim); // (-h)^(-dim)
    return twist * restrict_W(th, s0, K, L, true);
}

Expr iota_involution(const Expr& f, int n, int d) {
    std::map<Var, Expr> bind;
    for (int b = 1; b <= n; ++b) bind[var_z(b)] = Expr(1) / ex_z(b);
    for (int a = 1; a <= d; ++a) bind[var_t(a)] = Expr(1) / ex_t(a);
    bind[var_h()] = Expr(1) / ex_h();
    return f.substitute(bind);
}

Expr inner_product(Theory th, const Expr& f, const Expr& g, int n, int d) {
    Expr sum;
    for (auto& I : all_subsets(n, d)) {
        std::map<Var, Expr> bind;
        for (int a = 1; a <= d; ++a)
            bind[var_t(a)] = Expr(var_z(I.elems[static_cast<std::size_t>(a - 1)]));
        sum += f.substitute(bind) * g.substitute(bind) / rq_product(th, I);
    }
    return sum;
}

Expr sc_term(Theory th, const SubsetIndex& I, const SubsetIndex& J, const SubsetIndex& K,
             const SubsetIndex& L) {
    Perm id = identity_perm(I.n);
    Expr t = restrict_W(th, id, I, L) * restrict_W(th, id, J, L) * dual_weight_at(th, K, L);
    return t / rq_product(th, L);
}

namespace {

void certify_sc(Theory th, const Expr& e, const std::string& what) {
    bool ok = true;
    if (th == Theory::H) {
        // polynomial in z; denominators involving only h are still allowed
        ok = e.denominator_vars_satisfy([](Var v) { return v == var_h(); });
    } else {
        // Laurent in z: monomial factors or h-only factors below the line
        for (auto& [base, exp] : e.factors()) {
            if (exp >= 0) continue;
            bool monomial = base.terms().size() == 1;
            bool h_only = true;
            for (Var v : base.vars()) h_only = h_only && v == var_h();
            ok = ok && (monomial || h_only);
        }
    }
    if (!ok) throw NotPolynomial(what + " failed the polynomiality certificate: " + e.str());
}

} // namespace

Expr equivariant_sc(Theory th, const SubsetIndex& I, const SubsetIndex& J, const SubsetIndex& K) {
    Expr sum;
    for (auto& L : all_subsets(I.n, I.d())) sum += sc_term(th, I, J, K, L);
    certify_sc(th, sum, "equivariant_sc(" + I.str() + "," + J.str() + "," + K.str() + ")");
    return sum;
}

GrContext::GrContext(Theory th, int d, int n) : th_(th), d_(d), n_(n) {
    subsets_ = all_subsets(n, d);
    std::size_t N = subsets_.size();
    Perm id = identity_perm(n);
    w_id_.assign(N, std::vector<Expr>(N));
    dual_.assign(N, std::vector<Expr>(N));
    rq_.resize(N);
    for (std::size_t l = 0; l < N; ++l) {
        rq_[l] = rq_product(th, subsets_[l]);
        for (std::size_t i = 0; i < N; ++i) {
            w_id_[i][l] = restrict_W(th, id, subsets_[i], subsets_[l]);
            dual_[i][l] = dual_weight_at(th, subsets_[i], subsets_[l]);
        }
    }
}

int GrContext::position(const SubsetIndex& I) const {
    for (std::size_t p = 0; p < subsets_.size(); ++p)
        if (subsets_[p] == I) return static_cast<int>(p);
    throw IndexOutOfRange("GrContext: subset not of this Grassmannian");
}

Expr GrContext::term(int ipos, int jpos, int kpos, int lpos) const {
    std::size_t i = static_cast<std::size_t>(ipos), j = static_cast<std::size_t>(jpos);
    std::size_t k = static_cast<std::size_t>(kpos), l = static_cast<std::size_t>(lpos);
    return w_id_[i][l] * w_id_[j][l] * dual_[k][l] / rq_[l];
}

Expr GrContext::equivariant(int ipos, int jpos, int kpos) const {
    Expr sum;
    for (std::size_t l = 0; l < subsets_.size(); ++l) {
        const Expr& wi = w_id_[static_cast<std::size_t>(ipos)][l];
        const Expr& wj = w_id_[static_cast<std::size_t>(jpos)][l];
        const Expr& wk = dual_[static_cast<std::size_t>(kpos)][l];
        if (wi.is_zero() || wj.is_zero() || wk.is_zero()) continue;
        sum += wi * wj * wk / rq_[l];
    }
    certify_sc(th_, sum,
               "equivariant_sc(" + subsets_[static_cast<std::size_t>(ipos)].str() + "," +
                   subsets_[static_cast<std::size_t>(jpos)].str() + "," +
                   subsets_[static_cast<std::size_t>(kpos)].str() + ")");
    return sum;
}

} // namespace hdlr
