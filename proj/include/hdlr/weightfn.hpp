#pragma once

#include <string>
#include <vector>

#include "hdlr/expression.hpp"
#include "hdlr/sctable.hpp"

namespace hdlr {

enum class Theory { H, K };
inline const char* theory_name(Theory t) { return t == Theory::H ? "H" : "K"; }

/// Sorted d-element subset of [1,n]; indexes fixed points and Schubert cells.
struct SubsetIndex {
    int n = 0;
    std::vector<int> elems; // ascending, 1-based

    SubsetIndex() = default;
    SubsetIndex(int n_, std::vector<int> elems_);
    /// "34" (digits, n < 10) or "3,4".
    static SubsetIndex parse(int n, const std::string& text);

    int d() const { return static_cast<int>(elems.size()); }
    int dim() const;   // sum (i_a - a)
    int codim() const; // d(n-d) - dim
    bool contains(int b) const;
    /// Componentwise (Bruhat) order.
    bool leq(const SubsetIndex& o) const;
    /// lambda_I = ((n-d) - (i_a - a))_a, weakly decreasing.
    std::vector<int> to_partition() const;
    std::string str() const;

    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
};

std::vector<SubsetIndex> all_subsets(int n, int d);

using Perm = std::vector<int>; // sigma[b-1] = sigma(b), 1-based images
Perm identity_perm(int n);
Perm longest_perm(int n);

/// U^H_I or U^K_I of the weight-function definition, in t_1..t_d, z_1..z_n, h,
/// kept in factored form.
Expr weight_U(Theory th, const SubsetIndex& I);

/// W_{sigma,I} = Sym_t U_{sigma^{-1}(I)}(t; z_sigma; h), free t variables.
Expr weight_W(Theory th, const Perm& sigma, const SubsetIndex& I);

/// W_{sigma,I} evaluated at t = z_L; with iota, the involution
/// f(t;z;h) -> f(1/t;1/z;1/h) is applied to the whole W first.
Expr restrict_W(Theory th, const Perm& sigma, const SubsetIndex& I, const SubsetIndex& L,
                bool iota = false);

/// Fixed-point restriction of csm(Omega_I) (H) or mC(Omega_I) (K) at x_J.
/// Asserts the result is a (Laurent) polynomial.
Expr restriction(Theory th, const SubsetIndex& I, const SubsetIndex& J);

/// R_I * Q_I denominator of the inner product at fixed point I.
Expr rq_product(Theory th, const SubsetIndex& I);

/// The dual function of the orthogonality statement evaluated at z_L:
/// W^H_{s0,K}(z_L), or (-h)^{-dim Omega_K} iota(W^K_{s0,K})(z_L).
Expr dual_weight_at(Theory th, const SubsetIndex& K, const SubsetIndex& L);

/// <f, g> per theory: sum over I of f(z_I) g(z_I) / (R_I Q_I).
Expr inner_product(Theory th, const Expr& f, const Expr& g, int n, int d);

/// The iota involution on expressions in t, z, h.
Expr iota_involution(const Expr& f, int n, int d);

/// Single fixed-point summand c-hat^{K,L}_{I,J}; sums to equivariant_sc over L.
Expr sc_term(Theory th, const SubsetIndex& I, const SubsetIndex& J, const SubsetIndex& K,
             const SubsetIndex& L);

/// Equivariant structure constant via weight-function orthogonality,
/// certified polynomial (H) or z-Laurent (K). Throws NotPolynomial on failure.
Expr equivariant_sc(Theory th, const SubsetIndex& I, const SubsetIndex& J, const SubsetIndex& K);

/// Shared cache of weight-function restrictions for a fixed (theory, d, n):
/// all table computations go through this to avoid recomputation.
class GrContext {
public:
    GrContext(Theory th, int d, int n);

    Theory theory() const { return th_; }
    int d() const { return d_; }
    int n() const { return n_; }
    const std::vector<SubsetIndex>& subsets() const { return subsets_; }
    int position(const SubsetIndex& I) const;

    const Expr& w_id_at(int ipos, int lpos) const { return w_id_[ipos][lpos]; }
    const Expr& dual_at(int kpos, int lpos) const { return dual_[kpos][lpos]; }
    const Expr& rq(int lpos) const { return rq_[lpos]; }

    Expr term(int ipos, int jpos, int kpos, int lpos) const;
    Expr equivariant(int ipos, int jpos, int kpos) const;

private:
    Theory th_;
    int d_, n_;
    std::vector<SubsetIndex> subsets_;
    std::vector<std::vector<Expr>> w_id_, dual_;
    std::vector<Expr> rq_;
};

} // namespace hdlr
