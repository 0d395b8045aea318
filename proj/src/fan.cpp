#include "hdlr/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "hdlr/linalg.hpp"

namespace hdlr {

namespace {

bool is_sorted_unique(const RaySet& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] >= c[i]) return false;
    return true;
}

bool subset_of(const RaySet& a, const RaySet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RaySet intersect(const RaySet& a, const RaySet& b) {
    RaySet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

} // namespace

Fan Fan::make(int dim, std::vector<std::vector<long>> rays, std::vector<RaySet> max_cones) {
    Fan f;
    f.dim_ = dim;
    f.rays_ = std::move(rays);
    for (auto& r : f.rays_)
        if (static_cast<int>(r.size()) != dim) throw InvalidInput("Fan: ray dimension mismatch");
    for (auto& c : max_cones) {
        std::sort(c.begin(), c.end());
        if (!is_sorted_unique(c)) throw InvalidInput("Fan: repeated ray in cone");
        for (int i : c)
            if (i < 0 || i >= static_cast<int>(f.rays_.size()))
                throw InvalidInput("Fan: ray index out of range");
    }
    f.max_cones_ = std::move(max_cones);
    // face closure: all subsets of maximal cones (simplicial fans)
    std::set<RaySet> faces;
    for (auto& c : f.max_cones_) {
        std::size_t n = c.size();
        for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
            RaySet face;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (1ull << b)) face.push_back(c[b]);
            faces.insert(std::move(face));
        }
    }
    f.cones_.assign(faces.begin(), faces.end());
    std::sort(f.cones_.begin(), f.cones_.end(), [](const RaySet& a, const RaySet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return f;
}

Fan Fan::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<long>> rays = j.at("rays").get<std::vector<std::vector<long>>>();
    std::vector<RaySet> mc;
    for (auto& cone : j.at("max_cones")) {
        RaySet c;
        for (auto& idx : cone) c.push_back(idx.get<int>() - 1); // 1-based on disk
        mc.push_back(std::move(c));
    }
    return make(dim, std::move(rays), std::move(mc));
}

std::string Fan::to_json() const {
    nlohmann::json j;
    j["dim"] = dim_;
    j["rays"] = rays_;
    auto& mc = j["max_cones"] = nlohmann::json::array();
    for (auto& c : max_cones_) {
        nlohmann::json cone = nlohmann::json::array();
        for (int i : c) cone.push_back(i + 1);
        mc.push_back(std::move(cone));
    }
    return j.dump(2);
}

bool Fan::has_cone(const RaySet& c) const {
    return std::binary_search(cones_.begin(), cones_.end(), c,
                              [](const RaySet& a, const RaySet& b) {
                                  if (a.size() != b.size()) return a.size() < b.size();
                                  return a < b;
                              });
}

std::vector<RaySet> Fan::cones_containing(const RaySet& c) const {
    std::vector<RaySet> out;
    for (auto& g : cones_)
        if (subset_of(c, g)) out.push_back(g);
    return out;
}

std::string FanValidation::str() const {
    if (pass()) return "ok";
    std::string s;
    for (auto& f : failures) s += f + "\n";
    return s;
}

FanValidation validate_fan(const Fan& fan) {
    FanValidation v;
    v.rays_ok = true;
    std::set<std::vector<long>> seen;
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
        const auto& r = fan.rays()[i];
        long g = 0;
        bool zero = true;
        for (long x : r) {
            g = std::gcd(g, x);
            zero = zero && x == 0;
        }
        if (zero || g != 1) {
            v.rays_ok = false;
            v.failures.push_back("ray " + std::to_string(i + 1) + " is not primitive");
        }
        if (!seen.insert(r).second) {
            v.rays_ok = false;
            v.failures.push_back("ray " + std::to_string(i + 1) + " repeats an earlier ray");
        }
    }

    v.smooth = true;
    for (std::size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        const auto& c = fan.max_cones()[ci];
        if (static_cast<int>(c.size()) != fan.dim()) {
            v.smooth = false;
            v.failures.push_back("maximal cone " + std::to_string(ci + 1) + " is not full-dimensional");
            continue;
        }
        std::vector<std::vector<long>> m;
        for (int i : c) m.push_back(fan.rays()[static_cast<std::size_t>(i)]);
        mpz_class det = fan.dim() == 0 ? mpz_class(1) : int_determinant(m);
        if (det != 1 && det != -1) {
            v.smooth = false;
            v.failures.push_back("maximal cone " + std::to_string(ci + 1) +
                                 " fails unimodularity (det " + det.get_str() + ")");
        }
    }

    // smooth-complete criterion: every wall lies in exactly two maximal cones
    v.complete = true;
    std::map<RaySet, int> wall_count;
    for (auto& c : fan.max_cones()) {
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
            RaySet wall;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != drop) wall.push_back(c[i]);
            wall_count[wall]++;
        }
        if (c.empty()) wall_count[{}] += 2; // dim-0 fan: trivially complete
    }
    for (auto& [wall, count] : wall_count) {
        if (count != 2) {
            v.complete = false;
            std::string w = "{";
            for (std::size_t i = 0; i < wall.size(); ++i)
                w += (i ? "," : "") + std::to_string(wall[i] + 1);
            v.failures.push_back("wall " + w + "} lies in " + std::to_string(count) +
                                 " maximal cones (expected 2)");
        }
    }
    if (fan.max_cones().empty()) {
        v.complete = false;
        v.failures.push_back("no maximal cones");
    }
    return v;
}

Fan star(const Fan& fan, const RaySet& gamma, std::vector<int>* orig_ray_of_star_ray) {
    RaySet g = gamma;
    std::sort(g.begin(), g.end());
    if (!fan.has_cone(g)) throw ConeNotInFan("star: cone not in fan");
    if (g.empty()) {
        if (orig_ray_of_star_ray) {
            orig_ray_of_star_ray->resize(fan.rays().size());
            for (std::size_t i = 0; i < fan.rays().size(); ++i)
                (*orig_ray_of_star_ray)[i] = static_cast<int>(i);
        }
        return fan;
    }

    std::vector<std::vector<long>> generators;
    for (int i : g) generators.push_back(fan.rays()[static_cast<std::size_t>(i)]);
    std::size_t rk = 0;
    auto u = quotient_transform(generators, fan.dim(), rk);
    if (rk != g.size()) throw Error("star: degenerate cone generators");
    std::size_t qdim = static_cast<std::size_t>(fan.dim()) - rk;

    auto project = [&](const std::vector<long>& x) {
        std::vector<long> out(qdim, 0);
        for (std::size_t i = 0; i < qdim; ++i) {
            mpz_class acc = 0;
            for (std::size_t j = 0; j < x.size(); ++j) acc += u[rk + i][j] * x[j];
            if (!acc.fits_slong_p()) throw Error("star: projection overflow");
            out[i] = acc.get_si();
        }
        return out;
    };

    std::vector<std::vector<long>> new_rays;
    std::vector<int> new_orig;
    std::map<std::vector<long>, int> ray_index;
    std::vector<RaySet> new_max;
    for (auto& mc : fan.max_cones()) {
        if (!subset_of(g, mc)) continue;
        RaySet img;
        for (int i : mc) {
            if (std::binary_search(g.begin(), g.end(), i)) continue;
            auto p = primitivize(project(fan.rays()[static_cast<std::size_t>(i)]));
            auto [it, fresh] = ray_index.try_emplace(p, static_cast<int>(new_rays.size()));
            if (fresh) {
                new_rays.push_back(p);
                new_orig.push_back(i);
            } else if (new_orig[static_cast<std::size_t>(it->second)] != i) {
                throw Error("star: distinct rays project to the same quotient ray");
            }
            img.push_back(it->second);
        }
        std::sort(img.begin(), img.end());
        new_max.push_back(std::move(img));
    }
    if (orig_ray_of_star_ray) *orig_ray_of_star_ray = new_orig;
    return Fan::make(static_cast<int>(qdim), std::move(new_rays), std::move(new_max));
}

bool fans_isomorphic(const Fan& a, const Fan& b) {
    if (a.dim() != b.dim() || a.rays().size() != b.rays().size() ||
        a.max_cones().size() != b.max_cones().size())
        return false;
    if (a.dim() == 0) return true;
    std::set<RaySet> b_cones(b.max_cones().begin(), b.max_cones().end());
    if (a.max_cones().empty()) return true;

    // send one maximal cone of a to every maximal cone of b in every ray order;
    // the images of its rays determine the candidate lattice map
    const RaySet& base = a.max_cones()[0];
    std::vector<std::vector<long>> abase;
    for (int i : base) abase.push_back(a.rays()[static_cast<std::size_t>(i)]);
    std::size_t n = static_cast<std::size_t>(a.dim());

    for (auto target : b.max_cones()) {
        std::sort(target.begin(), target.end());
        do {
            // solve M * abase[k] = brays[target[k]] over Q, check integrality
            Matrix<Rational> sys(n * n, n * n);
            std::vector<Rational> rhs(n * n);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t row = 0; row < n; ++row) {
                    for (std::size_t col = 0; col < n; ++col)
                        sys.at(k * n + row, row * n + col) = Rational(abase[k][col]);
                    rhs[k * n + row] =
                        Rational(b.rays()[static_cast<std::size_t>(target[k])][row]);
                }
            std::optional<std::vector<Rational>> sol;
            try {
                sol = solve_unique(sys, rhs);
            } catch (const SingularBasis&) {
                sol = std::nullopt;
            }
            if (sol) {
                bool integral = true;
                for (auto& x : *sol) integral = integral && x.is_integer();
                if (integral) {
                    // check that the map sends rays to rays and cones to cones
                    auto apply = [&](const std::vector<long>& x) {
                        std::vector<long> y(n, 0);
                        for (std::size_t row = 0; row < n; ++row)
                            for (std::size_t col = 0; col < n; ++col)
                                y[row] += (*sol)[row * n + col].num().get_si() * x[col];
                        return y;
                    };
                    std::map<std::vector<long>, int> b_ray_index;
                    for (std::size_t i = 0; i < b.rays().size(); ++i)
                        b_ray_index[b.rays()[i]] = static_cast<int>(i);
                    bool ok = true;
                    std::vector<int> ray_map(a.rays().size(), -1);
                    for (std::size_t i = 0; i < a.rays().size() && ok; ++i) {
                        auto it = b_ray_index.find(apply(a.rays()[i]));
                        if (it == b_ray_index.end())
                            ok = false;
                        else
                            ray_map[i] = it->second;
                    }
                    for (auto& mc : a.max_cones()) {
                        if (!ok) break;
                        RaySet img;
                        for (int i : mc) img.push_back(ray_map[static_cast<std::size_t>(i)]);
                        std::sort(img.begin(), img.end());
                        ok = b_cones.count(img) > 0;
                    }
                    if (ok) return true;
                }
            }
        } while (std::next_permutation(target.begin(), target.end()));
    }
    return false;
}

ShelledFan shell(const Fan& fan, const std::vector<int>& order) {
    int r = static_cast<int>(fan.max_cones().size());
    if (static_cast<int>(order.size()) != r) throw NotAPermutation("shell: order length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int i : order) {
        if (i < 0 || i >= r || seen[static_cast<std::size_t>(i)])
            throw NotAPermutation("shell: order is not a permutation of the maximal cones");
        seen[static_cast<std::size_t>(i)] = true;
    }
    auto val = validate_fan(fan);
    if (!val.pass()) throw InvalidInput("shell: fan fails validation:\n" + val.str());

    int m = fan.dim();
    auto sigma = [&](int p) -> const RaySet& { // 1-based position in the order
        return fan.max_cones()[static_cast<std::size_t>(order[static_cast<std::size_t>(p - 1)])];
    };

    ShelledFan sf;
    sf.fan_ = fan;
    sf.order_ = order;
    sf.shelling_.resize(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        if (i == r) {
            sf.shelling_[static_cast<std::size_t>(i - 1)] = sigma(r);
            continue;
        }
        bool found = false;
        RaySet s = sigma(i);
        for (int j = i + 1; j <= r; ++j) {
            RaySet w = intersect(sigma(i), sigma(j));
            if (static_cast<int>(w.size()) == m - 1) {
                s = found ? intersect(s, w) : w;
                found = true;
            }
        }
        // no later wall neighbor: s_i degenerates to the maximal cone itself
        sf.shelling_[static_cast<std::size_t>(i - 1)] = s;
        if (!fan.has_cone(s)) throw DegenerateShelling("shell: s_i is not a cone of the fan");
    }

    // cells: Omega_1 = O_{s_r}; Omega_i = cones containing s_{r-i+1} minus earlier cells
    std::set<RaySet> used;
    sf.cells_.resize(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        const RaySet& si = sf.shelling_[static_cast<std::size_t>(r - i)];
        std::vector<RaySet> cell;
        for (auto& g : fan.cones_containing(si))
            if (!used.count(g)) cell.push_back(g);
        for (auto& g : cell) used.insert(g);
        sf.cells_[static_cast<std::size_t>(i - 1)] = std::move(cell);
    }
    if (used.size() != fan.cones().size())
        throw DegenerateShelling("shell: cells do not cover the fan");
    for (int i = 1; i <= r; ++i) {
        if (sf.cells_[static_cast<std::size_t>(i - 1)].empty())
            throw DegenerateShelling("shell: empty cell");
        // closure cone must realize the minimal dimension in its cell
        std::size_t mind = static_cast<std::size_t>(m) + 1;
        for (auto& g : sf.cells_[static_cast<std::size_t>(i - 1)]) mind = std::min(mind, g.size());
        if (mind != sf.closure_cone(i).size())
            throw DegenerateShelling("shell: cell closure mismatch");
        if (i > 1 && sf.cell_dim(i) < sf.cell_dim(i - 1))
            throw DegenerateShelling("shell: cell dimensions not monotone");
    }
    sf.labels_.resize(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) sf.labels_[static_cast<std::size_t>(i - 1)] = std::to_string(i);
    return sf;
}

ShelledFan builtin_space(const std::string& name, int m) {
    if (name == "projective") {
        if (m < 1) throw UnknownSpace("projective space needs m >= 1");
        std::vector<std::vector<long>> rays;
        for (int i = 0; i < m; ++i) {
            std::vector<long> e(static_cast<std::size_t>(m), 0);
            e[static_cast<std::size_t>(i)] = 1;
            rays.push_back(std::move(e));
        }
        rays.emplace_back(static_cast<std::size_t>(m), -1);
        std::vector<RaySet> mc;
        for (int i = 0; i <= m; ++i) {
            RaySet c;
            for (int j = 0; j <= m; ++j)
                if (j != i) c.push_back(j);
            mc.push_back(std::move(c));
        }
        std::vector<int> order(static_cast<std::size_t>(m + 1));
        std::iota(order.begin(), order.end(), 0);
        ShelledFan sf = shell(Fan::make(m, std::move(rays), std::move(mc)), order);
        sf.space_ = "projective";
        return sf;
    }
    if (name == "hirzebruch") {
        std::vector<std::vector<long>> rays = {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}};
        std::vector<RaySet> mc = {{0, 3}, {0, 1}, {2, 3}, {1, 2}};
        ShelledFan sf = shell(Fan::make(2, std::move(rays), std::move(mc)), {0, 1, 2, 3});
        sf.space_ = "hirzebruch";
        return sf;
    }
    if (name == "a2_permutohedral" || name == "a2") {
        // rays in the (omega_1, omega_2) coordinates
        std::vector<std::vector<long>> rays = {
            {1, 0},   // omega1
            {0, 1},   // omega2
            {-1, 1},  // omega2 - omega1
            {-1, 0},  // -omega1
            {0, -1},  // -omega2
            {1, -1},  // omega1 - omega2
        };
        // maximal cones sigma_w in the shelling order id < (1,2) < (1,2,3) < (2,3) < (1,3,2) < (1,3)
        std::vector<RaySet> mc = {
            {0, 1}, // id
            {1, 2}, // (1,2)
            {2, 3}, // (1,2,3)
            {0, 5}, // (2,3)
            {4, 5}, // (1,3,2)
            {3, 4}, // (1,3)
        };
        ShelledFan sf = shell(Fan::make(2, std::move(rays), std::move(mc)), {0, 1, 2, 3, 4, 5});
        sf.space_ = "a2_permutohedral";
        // cells inherit the Weyl labels of their defining shelling cones, in reverse order
        std::vector<std::string> wnames = {"id", "(1,2)", "(1,2,3)", "(2,3)", "(1,3,2)", "(1,3)"};
        for (int i = 1; i <= 6; ++i) sf.labels_[static_cast<std::size_t>(i - 1)] = wnames[static_cast<std::size_t>(6 - i)];
        return sf;
    }
    throw UnknownSpace("unknown built-in space '" + name + "'");
}

} // namespace hdlr
