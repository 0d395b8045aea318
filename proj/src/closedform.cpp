#include "hdlr/closedform.hpp"

#include "hdlr/errors.hpp"

namespace hdlr {

namespace {

// the residue variable z of the closed formulas is var_z(1)
const Var kz = var_z(1);

void check_range(int v, int lo, int hi, const char* what) {
    if (v < lo || v > hi)
        throw IndexOutOfRange(std::string(what) + " = " + std::to_string(v) + " outside [" +
                              std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

Expr zph(int r) { return (ex_z(1) + ex_h()).pow(r); }        // (z+h)^r
Expr zpah(int a, int r) { return (ex_z(1) + Expr(a) * ex_h()).pow(r); } // (z+a*h)^r

Expr res0(const Expr& f) { return residue_at(f, kz, Expr()); }

} // namespace

Expr c_projective(int m, int i, int j, int k) {
    check_range(i, 1, m + 1, "i");
    check_range(j, 1, m + 1, "j");
    check_range(k, 1, m + 1, "k");
    return Expr(binomial(i + j - k - 2, m - 1)) * ex_h().pow(m);
}

Expr C_tilde_projective(int m, int i, int j, int k) {
    check_range(i, 1, m + 1, "i");
    check_range(j, 1, m + 1, "j");
    check_range(k, 1, m + 1, "k");
    Expr out;
    Rational b1 = binomial(i + j - k - 2, m);
    Rational b2 = binomial(i + j - k - 1, m);
    // nonzero binomials force nonnegative h exponents
    if (!b1.is_zero()) out += Expr(b1) * ex_h().pow(i + j - k - m - 2);
    if (!b2.is_zero()) out += Expr(b2) * ex_h().pow(i + j - k - m - 1);
    return out;
}

Expr C_projective(int m, int i, int j, int k) {
    Expr ct = C_tilde_projective(m, i, j, k);
    int sign = ((m + i + j + k + 1) % 2 == 0) ? 1 : -1;
    Expr c = Expr(sign) * (Expr(1) + ex_h()).pow(m) * ct;
    if (!c.is_polynomial()) throw NonPolynomialResult("C_projective: " + c.str());
    return c;
}

Expr c_term_projective(int n, int i, int j, int k, int l) {
    check_range(i, 1, n, "i");
    check_range(j, 1, n, "j");
    check_range(k, 1, n, "k");
    check_range(l, 1, n, "l");
    if (i > j) std::swap(i, j);
    if (!(k <= l && l <= i)) return Expr();
    if (k == i) // forces k = l = i
        return j == n ? ex_h().pow(n - 1) : Expr();
    int dij = i == j ? 1 : 0;
    Expr h = ex_h();
    if (l == k)
        return res0(h.pow(2) * zph(i + j - k - 3) / ex_z(1).pow(i + j - k - n + 1));
    if (l < i)
        return res0(h.pow(3) * zph(i + j + k - 2 * l - 3) * zpah(2, l - k - 1) /
                    ex_z(1).pow(i + j - l - n + 1));
    return res0(h.pow(2 - dij) * zph(k - 1 + (j - i - 1) * (1 - dij)) * zpah(2, i - k - 1) /
                ex_z(1).pow(j - n + 1));
}

std::pair<Expr, Expr> p_poly_projective(int n, int i, int j, int k) {
    check_range(i, 1, n, "i");
    check_range(j, 1, n, "j");
    check_range(k, 1, n, "k");
    if (i > j) std::swap(i, j);
    if (!(k < i)) throw IndexOutOfRange("p_poly_projective needs k < i <= j");
    int dij = i == j ? 1 : 0;
    Expr h = ex_h(), z = ex_z(1);
    Expr p = h.pow(2) * zph(i + j - k - 3);
    p += h.pow(2 - dij) * z.pow(i - k) * zph(k - 1 + (j - i - 1) * (1 - dij)) * zpah(2, i - k - 1);
    for (int l = k + 1; l <= i - 1; ++l)
        p += h.pow(3) * z.pow(l - k) * zph(i + j + k - 2 * l - 3) * zpah(2, l - k - 1);
    Expr coeff = coefficient_of(p, kz, i + j - k - n);
    return {p, coeff};
}

Expr c_pieri_term_gr2(int n, int i, int j, int k, int l) {
    check_range(i, 1, n - 1, "i");
    check_range(j, 1, n - 1, "j");
    check_range(k, 1, n - 1, "k");
    check_range(l, 1, n - 1, "l");
    if (i > j) std::swap(i, j);
    if (!(k <= l && l <= i)) return Expr();
    if (k == i) // diagonal: k = l = i
        return j == n - 1 ? ex_h().pow(2 * (n - 2)) : Expr();
    int dij = i == j ? 1 : 0;
    Expr h = ex_h();
    if (l == k)
        return res0(h.pow(n) * zph(i + j - k - 3) / ex_z(1).pow(i + j - k - n + 2));
    if (l < i)
        return res0(Expr(2) * h.pow(n + 1) * zph(i + j + k - 2 * l - 3) * zpah(3, l - k - 1) /
                    ex_z(1).pow(i + j - l - n + 2));
    return res0(Expr(2) * h.pow(n - dij) * zph(k - 1 + (j - i - 1) * (1 - dij)) *
                zpah(3, i - k - 1) / ex_z(1).pow(j - n + 2));
}

Expr c_pieri_gr2(int n, int i, int j, int k) {
    Expr sum;
    for (int l = 1; l <= n - 1; ++l) sum += c_pieri_term_gr2(n, i, j, k, l);
    return sum;
}

std::pair<Expr, Expr> p_poly_pieri(int n, int i, int j, int k) {
    check_range(i, 1, n - 1, "i");
    check_range(j, 1, n - 1, "j");
    check_range(k, 1, n - 1, "k");
    if (i > j) std::swap(i, j);
    if (!(k < i)) throw IndexOutOfRange("p_poly_pieri needs k < i <= j");
    int dij = i == j ? 1 : 0;
    Expr h = ex_h(), z = ex_z(1);
    Expr p = h.pow(n) * zph(i + j - k - 3);
    for (int l = k + 1; l <= i - 1; ++l)
        p += Expr(2) * h.pow(n + 1) * z.pow(l - k) * zph(i + j + k - 2 * l - 3) * zpah(3, l - k - 1);
    p += Expr(2) * h.pow(n - dij) * z.pow(i - k) * zph(k - 1 + (j - i - 1) * (1 - dij)) *
         zpah(3, i - k - 1);
    Expr coeff = coefficient_of(p, kz, i + j - k - n + 1);
    return {p, coeff};
}

SCTable projective_table(int m, const std::string& kind) {
    if (kind != "csm" && kind != "mc") throw InvalidInput("kind must be csm or mc");
    SCTable t;
    t.space = "P^" + std::to_string(m);
    t.kind = kind;
    t.pipeline = "closedform";
    for (int i = 1; i <= m + 1; ++i) t.labels.push_back(std::to_string(i));
    for (int i = 1; i <= m + 1; ++i)
        for (int j = i; j <= m + 1; ++j)
            for (int k = 1; k <= m + 1; ++k) {
                Expr v = kind == "csm" ? c_projective(m, i, j, k) : C_projective(m, i, j, k);
                if (v.is_zero()) continue;
                t.entries.push_back(
                    {std::to_string(i), std::to_string(j), std::to_string(k), std::move(v)});
            }
    return t;
}

} // namespace hdlr
