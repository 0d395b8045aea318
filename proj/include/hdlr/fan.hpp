#pragma once

#include <string>
#include <vector>

#include "hdlr/errors.hpp"

namespace hdlr {

/// Simplicial cone in a fixed fan, identified by its sorted set of ray
/// indices (0-based). The zero cone is the empty set.
using RaySet = std::vector<int>;

/// Complete smooth simplicial fan. Cones are stored as ray-index sets; the
/// face closure is generated from the maximal cones on construction.
class Fan {
public:
    static Fan make(int dim, std::vector<std::vector<long>> rays,
                    std::vector<RaySet> max_cones);
    static Fan from_json(const std::string& text); // 1-based ray indices
    std::string to_json() const;

    int dim() const { return dim_; }
    const std::vector<std::vector<long>>& rays() const { return rays_; }
    const std::vector<RaySet>& max_cones() const { return max_cones_; }
    /// All cones (face closure), sorted by (size, lex); includes the zero cone.
    const std::vector<RaySet>& cones() const { return cones_; }

    bool has_cone(const RaySet& c) const;
    std::vector<RaySet> cones_containing(const RaySet& c) const;

private:
    int dim_ = 0;
    std::vector<std::vector<long>> rays_;
    std::vector<RaySet> max_cones_;
    std::vector<RaySet> cones_;
};

struct FanValidation {
    bool smooth = false;
    bool complete = false;
    bool rays_ok = false;
    std::vector<std::string> failures;
    bool pass() const { return smooth && complete && rays_ok; }
    std::string str() const;
};

/// Smoothness (unimodular maximal cones), completeness (every wall shared by
/// exactly two maximal cones), primitive distinct rays. Never throws.
FanValidation validate_fan(const Fan& fan);

/// Star of a cone: the fan of { gamma' + R*gamma : gamma' contains gamma } in
/// the quotient lattice, generators re-primitivized. Throws ConeNotInFan.
/// When orig_ray_of_star_ray is given, records which original ray each star
/// ray projects from.
Fan star(const Fan& fan, const RaySet& gamma, std::vector<int>* orig_ray_of_star_ray = nullptr);

/// Combinatorial isomorphism modulo a lattice automorphism (small fans only).
bool fans_isomorphic(const Fan& a, const Fan& b);

/// Shelling data derived from an explicit order of the maximal cones.
class ShelledFan {
public:
    const Fan& fan() const { return fan_; }
    int m() const { return fan_.dim(); }
    int r() const { return static_cast<int>(order_.size()); }
    /// Shelling order: order()[p] is the index of the p-th maximal cone.
    const std::vector<int>& order() const { return order_; }
    /// Shelling cones s_1..s_r (1-based accessor).
    const RaySet& s(int i) const { return shelling_[static_cast<std::size_t>(i - 1)]; }
    /// Cell i (1-based) as the set of cones composing it; dim is nondecreasing in i.
    const std::vector<RaySet>& cell(int i) const { return cells_[static_cast<std::size_t>(i - 1)]; }
    /// Closure of cell i is the orbit closure of this cone (= s_{r-i+1}).
    const RaySet& closure_cone(int i) const { return s(r() - i + 1); }
    int cell_dim(int i) const { return m() - static_cast<int>(closure_cone(i).size()); }
    int cell_codim(int i) const { return static_cast<int>(closure_cone(i).size()); }
    const std::string& cell_label(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
    const std::string& space() const { return space_; }

    friend ShelledFan shell(const Fan&, const std::vector<int>&);
    friend ShelledFan builtin_space(const std::string&, int);

private:
    Fan fan_;
    std::vector<int> order_;
    std::vector<RaySet> shelling_;
    std::vector<std::vector<RaySet>> cells_;
    std::vector<std::string> labels_;
    std::string space_ = "custom";
};

/// Computes s_i and the CW cells from an explicit maximal-cone order
/// (0-based indices into fan.max_cones()). Throws NotAPermutation /
/// DegenerateShelling. The fan must validate smooth and complete.
ShelledFan shell(const Fan& fan, const std::vector<int>& order);

/// Built-in spaces with the shelling hard-coded:
///   "projective" (any m >= 1), "hirzebruch", "a2_permutohedral" (alias "a2").
ShelledFan builtin_space(const std::string& name, int m = 0);

} // namespace hdlr
