#pragma once

#include <map>
#include <vector>

#include "hdlr/expression.hpp"
#include "hdlr/fan.hpp"
#include "hdlr/sctable.hpp"

namespace hdlr {

class CohRing;

/// Element of H*(X)[h] (or its Chern-character image) in the cell-closure
/// basis [V_{s_i}]: one coefficient per cell, each a rational function of h.
class CohClass {
public:
    CohClass() = default;
    CohClass(const CohRing* ring, std::vector<Expr> coords)
        : ring_(ring), coords_(std::move(coords)) {}

    const std::vector<Expr>& coords() const { return coords_; }
    const CohRing* ring() const { return ring_; }
    bool is_zero() const;

    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(const CohClass& a, const CohClass& b);
    CohClass operator*(const Expr& s) const;
    friend bool operator==(const CohClass& a, const CohClass& b);

private:
    const CohRing* ring_ = nullptr;
    std::vector<Expr> coords_;
};

/// Toric cohomology: the Stanley-Reisner quotient realized as an explicit
/// finite-rank graded module with precomputed multiplication of the
/// cell-closure basis classes.
class CohRing {
public:
    /// Builds SR/J degree by degree; RankMismatch when the degree-d rank does
    /// not equal the number of cells of codimension d.
    static CohRing build(ShelledFan shelled);

    const ShelledFan& shelled() const { return sf_; }
    int rank() const { return static_cast<int>(sf_.r()); }
    int m() const { return sf_.m(); }
    /// Cohomological degree of the basis class of cell i (1-based) = codim.
    int basis_degree(int cell) const { return sf_.cell_codim(cell); }

    CohClass zero() const { return {this, std::vector<Expr>(static_cast<std::size_t>(rank()))}; }
    CohClass unit() const;
    /// [V_gamma] expanded in the basis.
    CohClass class_of_cone(const RaySet& gamma) const;
    /// Product of two basis classes, precomputed.
    const std::vector<Rational>& basis_product(int ci, int cj) const;

    /// c^sm of the CW cell i: sum over its cones of h^(m - dim) [V_gamma].
    CohClass csm_cell(int i) const;
    /// Chern character of mC of cell i. Projective fans use the orbit formula
    /// directly; other fans require experimental=true (GRR over the star fans).
    CohClass mc_chern_character_cell(int i, bool experimental = false) const;

    /// Unique coefficients of target over a triangular basis, certified by
    /// re-multiplication. Throws SingularBasis.
    std::vector<Expr> expand_in_basis(const CohClass& target,
                                      const std::vector<CohClass>& basis) const;

    /// Full structure-constant table of the csm or mc basis.
    SCTable structure_constants(const std::string& kind, bool experimental = false) const;

private:
    ShelledFan sf_;
    std::vector<RaySet> cones_;
    std::map<RaySet, int> cone_index_;
    std::vector<std::vector<Rational>> cone_coords_;           // per cone
    std::vector<std::vector<std::vector<Rational>>> pair_;     // basis x basis
    friend class StarAlgebra;
};

} // namespace hdlr
