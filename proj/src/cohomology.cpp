#include "hdlr/cohomology.hpp"

#include <algorithm>
#include <optional>

#include "hdlr/linalg.hpp"

namespace hdlr {

namespace {

using Multiset = std::vector<int>; // sorted ray indices with repetition

RaySet support_of(const Multiset& w) {
    RaySet s;
    for (int i : w)
        if (s.empty() || s.back() != i) s.push_back(i);
    return s;
}

Multiset squarefree(const RaySet& c) { return c; }

Multiset merge_multisets(const Multiset& a, const Multiset& b) {
    Multiset r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

/// Degree-by-degree monomial reduction of SR/J onto a basis of cone classes.
/// With a prescribed basis it verifies ranks (RankMismatch); in auto mode
/// it picks the basis greedily from the cone classes themselves.
class GradedReduction {
public:
    // basis_cones: global basis in a fixed order (prescribed mode), or empty
    // for auto mode. After build(), basis() lists the chosen cones.
    static GradedReduction build(const Fan& fan, std::vector<RaySet> prescribed) {
        GradedReduction g;
        g.fan_ = &fan;
        g.m_ = fan.dim();
        bool auto_mode = prescribed.empty();
        g.basis_ = std::move(prescribed);

        // enumerate monomials per degree with cone support
        g.deg_.resize(static_cast<std::size_t>(g.m_) + 1);
        for (auto& cone : fan.cones())
            g.enumerate(cone, Multiset{}, 0);
        for (auto& dd : g.deg_)
            std::sort(dd.monos.begin(), dd.monos.end());
        for (auto& dd : g.deg_)
            for (std::size_t i = 0; i < dd.monos.size(); ++i) dd.index[dd.monos[i]] = static_cast<int>(i);

        for (int d = 0; d <= g.m_; ++d) g.build_degree(d, auto_mode);
        // global order of the basis: prescribed order, or by (degree, cone)
        if (auto_mode) {
            g.basis_.clear();
            for (int d = 0; d <= g.m_; ++d)
                for (auto& c : g.deg_[static_cast<std::size_t>(d)].basis_cones) g.basis_.push_back(c);
        }
        for (std::size_t b = 0; b < g.basis_.size(); ++b) g.basis_pos_[g.basis_[b]] = static_cast<int>(b);
        return g;
    }

    const std::vector<RaySet>& basis() const { return basis_; }

    /// Coordinates of a monomial (multiset of rays) over the global basis.
    std::vector<Rational> reduce(const Multiset& w) const {
        std::vector<Rational> out(basis_.size(), Rational(0));
        int d = static_cast<int>(w.size());
        if (d > m_) return out;
        const DegreeData& dd = deg_[static_cast<std::size_t>(d)];
        auto it = dd.index.find(w);
        if (it == dd.index.end()) return out; // support is not a cone: class is zero
        std::vector<Rational> rhs(dd.monos.size(), Rational(0));
        rhs[static_cast<std::size_t>(it->second)] = Rational(1);
        auto x = dd.solver->solve(rhs);
        if (!x) throw RankMismatch("reduce: monomial not in span of basis + relations");
        for (std::size_t k = 0; k < dd.basis_cones.size(); ++k)
            out[static_cast<std::size_t>(basis_pos_.at(dd.basis_cones[k]))] = (*x)[dd.j_cols + k];
        return out;
    }

private:
    struct DegreeData {
        std::vector<Multiset> monos;
        std::map<Multiset, int> index;
        std::vector<RaySet> basis_cones;
        std::size_t j_cols = 0;
        std::optional<PreparedSolver<Rational>> solver;
    };

    const Fan* fan_ = nullptr;
    int m_ = 0;
    std::vector<RaySet> basis_;
    std::map<RaySet, int> basis_pos_;
    std::vector<DegreeData> deg_;

    void enumerate(const RaySet& cone, Multiset prefix, std::size_t from) {
        // multisets of size <= m supported exactly on `cone`
        if (prefix.size() > static_cast<std::size_t>(m_)) return;
        if (support_of(prefix) == cone)
            deg_[prefix.size()].monos.push_back(prefix);
        if (prefix.size() == static_cast<std::size_t>(m_)) return;
        for (std::size_t i = from; i < cone.size(); ++i) {
            Multiset next = prefix;
            next.push_back(cone[static_cast<std::size_t>(i)]);
            enumerate(cone, std::move(next), i);
        }
    }

    void build_degree(int d, bool auto_mode) {
        DegreeData& dd = deg_[static_cast<std::size_t>(d)];
        const auto& rays = fan_->rays();
        // J generators: (monomial of degree d-1) x (linear relation per coordinate)
        std::vector<std::vector<Rational>> jcols;
        if (d >= 1) {
            const DegreeData& lower = deg_[static_cast<std::size_t>(d - 1)];
            for (auto& w : lower.monos) {
                for (int t = 0; t < m_; ++t) {
                    std::vector<Rational> col(dd.monos.size(), Rational(0));
                    bool nonzero = false;
                    for (std::size_t i = 0; i < rays.size(); ++i) {
                        long coeff = rays[i][static_cast<std::size_t>(t)];
                        if (coeff == 0) continue;
                        Multiset wi = merge_multisets(w, {static_cast<int>(i)});
                        auto it = dd.index.find(wi);
                        if (it == dd.index.end()) continue; // killed by SR
                        col[static_cast<std::size_t>(it->second)] += Rational(coeff);
                        nonzero = true;
                    }
                    if (nonzero) jcols.push_back(std::move(col));
                }
            }
        }
        dd.j_cols = jcols.size();

        // candidate basis columns
        std::vector<RaySet> candidates;
        if (auto_mode) {
            for (auto& c : fan_->cones())
                if (static_cast<int>(c.size()) == d) candidates.push_back(c);
        } else {
            for (auto& c : basis_)
                if (static_cast<int>(c.size()) == d) candidates.push_back(c);
        }

        Matrix<Rational> A(dd.monos.size(), jcols.size() + candidates.size());
        for (std::size_t j = 0; j < jcols.size(); ++j)
            for (std::size_t i = 0; i < dd.monos.size(); ++i) A.at(i, j) = jcols[j][i];
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            auto it = dd.index.find(squarefree(candidates[k]));
            if (it == dd.index.end()) throw RankMismatch("basis cone is not a cone of the fan");
            A.at(static_cast<std::size_t>(it->second), jcols.size() + k) = Rational(1);
        }

        PreparedSolver<Rational> solver(std::move(A));
        // rank bookkeeping: pivots among J columns give rank(J_d)
        Matrix<Rational> jonly(dd.monos.size(), jcols.size());
        for (std::size_t j = 0; j < jcols.size(); ++j)
            for (std::size_t i = 0; i < dd.monos.size(); ++i) jonly.at(i, j) = jcols[j][i];
        std::size_t rank_j = rank(std::move(jonly));
        std::size_t quotient_rank = dd.monos.size() - rank_j;

        if (auto_mode) {
            // keep the candidates that are independent mod J: re-run with
            // incremental selection
            std::vector<RaySet> chosen;
            Matrix<Rational> acc(dd.monos.size(), jcols.size() + candidates.size());
            for (std::size_t j = 0; j < jcols.size(); ++j)
                for (std::size_t i = 0; i < dd.monos.size(); ++i) acc.at(i, j) = jcols[j][i];
            std::size_t used = jcols.size();
            std::size_t base_rank = rank_j;
            for (auto& cand : candidates) {
                auto it = dd.index.find(squarefree(cand));
                Matrix<Rational> trial(dd.monos.size(), used + 1);
                for (std::size_t i = 0; i < dd.monos.size(); ++i)
                    for (std::size_t j = 0; j < used; ++j) trial.at(i, j) = acc.at(i, j);
                trial.at(static_cast<std::size_t>(it->second), used) = Rational(1);
                if (rank(std::move(trial)) > base_rank) {
                    for (std::size_t i = 0; i < dd.monos.size(); ++i) acc.at(i, used) = Rational(0);
                    acc.at(static_cast<std::size_t>(it->second), used) = Rational(1);
                    ++used;
                    ++base_rank;
                    chosen.push_back(cand);
                    if (chosen.size() == quotient_rank) break;
                }
            }
            if (chosen.size() != quotient_rank)
                throw RankMismatch("cone classes do not span the quotient");
            dd.basis_cones = std::move(chosen);
            // rebuild the solver over the chosen columns only
            Matrix<Rational> A2(dd.monos.size(), jcols.size() + dd.basis_cones.size());
            for (std::size_t j = 0; j < jcols.size(); ++j)
                for (std::size_t i = 0; i < dd.monos.size(); ++i) A2.at(i, j) = jcols[j][i];
            for (std::size_t k = 0; k < dd.basis_cones.size(); ++k) {
                auto it = dd.index.find(squarefree(dd.basis_cones[k]));
                A2.at(static_cast<std::size_t>(it->second), jcols.size() + k) = Rational(1);
            }
            dd.solver.emplace(std::move(A2));
            return;
        }

        if (quotient_rank != candidates.size())
            throw RankMismatch("degree " + std::to_string(d) + ": quotient rank " +
                               std::to_string(quotient_rank) + " != cell count " +
                               std::to_string(candidates.size()));
        // the prescribed basis columns must all be pivots (independent mod J)
        std::size_t total_rank = rank_j + candidates.size();
        Matrix<Rational> full(dd.monos.size(), jcols.size() + candidates.size());
        for (std::size_t j = 0; j < jcols.size(); ++j)
            for (std::size_t i = 0; i < dd.monos.size(); ++i) full.at(i, j) = jcols[j][i];
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            auto it = dd.index.find(squarefree(candidates[k]));
            full.at(static_cast<std::size_t>(it->second), jcols.size() + k) = Rational(1);
        }
        if (rank(std::move(full)) != total_rank)
            throw RankMismatch("degree " + std::to_string(d) + ": basis classes dependent mod J");
        dd.basis_cones = candidates;
        dd.solver.emplace(std::move(solver));
    }
};

Var const kH = var_H();
Var const kh = var_h();

Polynomial trunc_H(const Polynomial& p, int m) {
    std::vector<Term> keep;
    for (auto& t : p.terms())
        if (t.m.degree_of(kH) <= m) keep.push_back(t);
    return Polynomial::from_terms(std::move(keep));
}

/// e^{a H} mod H^{m+1}
Polynomial exp_H(long a, int m) {
    Polynomial out{Rational(1)};
    Rational fact(1);
    Polynomial pw{Rational(1)};
    Polynomial aH = Polynomial(kH);
    aH *= Rational(a);
    for (int k = 1; k <= m; ++k) {
        pw = trunc_H(pw * aH, m);
        fact *= Rational(k);
        Polynomial term = pw;
        term *= fact.reciprocal();
        out += term;
    }
    return out;
}

/// Coefficient list of x / (1 - e^{-x}) up to degree n.
std::vector<Rational> todd_series(int n) {
    // (1 - e^{-x})/x = sum_{k>=0} (-1)^k x^k / (k+1)!
    std::vector<Rational> u(static_cast<std::size_t>(n) + 1);
    Rational fact(1);
    for (int k = 0; k <= n; ++k) {
        fact *= Rational(k + 1);
        u[static_cast<std::size_t>(k)] = Rational((k % 2) ? -1 : 1) / fact;
    }
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1);
    inv[0] = Rational(1);
    for (int k = 1; k <= n; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += u[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc;
    }
    return inv;
}

} // namespace

bool CohClass::is_zero() const {
    for (auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

CohClass& CohClass::operator+=(const CohClass& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

CohClass CohClass::operator*(const Expr& s) const {
    CohClass r = *this;
    for (auto& c : r.coords_) c *= s;
    return r;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
    const CohRing* ring = a.ring();
    CohClass out = ring->zero();
    int n = ring->rank();
    for (int i = 0; i < n; ++i) {
        if (a.coords()[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.coords()[static_cast<std::size_t>(j)].is_zero()) continue;
            Expr s = a.coords()[static_cast<std::size_t>(i)] * b.coords()[static_cast<std::size_t>(j)];
            const auto& prod = ring->basis_product(i + 1, j + 1);
            for (int k = 0; k < n; ++k)
                if (!prod[static_cast<std::size_t>(k)].is_zero())
                    out.coords_[static_cast<std::size_t>(k)] += s * Expr(prod[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

bool operator==(const CohClass& a, const CohClass& b) {
    for (std::size_t i = 0; i < a.coords().size(); ++i)
        if (a.coords()[i] != b.coords()[i]) return false;
    return true;
}

CohRing CohRing::build(ShelledFan shelled) {
    CohRing r;
    r.sf_ = std::move(shelled);
    const Fan& fan = r.sf_.fan();
    std::vector<RaySet> basis;
    for (int c = 1; c <= r.sf_.r(); ++c) basis.push_back(r.sf_.closure_cone(c));
    GradedReduction red = GradedReduction::build(fan, basis);

    r.cones_ = fan.cones();
    for (std::size_t i = 0; i < r.cones_.size(); ++i) r.cone_index_[r.cones_[i]] = static_cast<int>(i);
    r.cone_coords_.resize(r.cones_.size());
    for (std::size_t i = 0; i < r.cones_.size(); ++i)
        r.cone_coords_[i] = red.reduce(squarefree(r.cones_[i]));

    int n = r.rank();
    r.pair_.assign(static_cast<std::size_t>(n),
                   std::vector<std::vector<Rational>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Multiset w = merge_multisets(squarefree(basis[static_cast<std::size_t>(i)]),
                                         squarefree(basis[static_cast<std::size_t>(j)]));
            auto coords = red.reduce(w);
            r.pair_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords;
            r.pair_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(coords);
        }
    return r;
}

CohClass CohRing::unit() const { return class_of_cone({}); }

CohClass CohRing::class_of_cone(const RaySet& gamma) const {
    RaySet g = gamma;
    std::sort(g.begin(), g.end());
    auto it = cone_index_.find(g);
    if (it == cone_index_.end()) throw ConeNotInFan("class_of_cone: not a cone");
    std::vector<Expr> coords;
    coords.reserve(static_cast<std::size_t>(rank()));
    for (auto& q : cone_coords_[static_cast<std::size_t>(it->second)]) coords.emplace_back(q);
    return {this, std::move(coords)};
}

const std::vector<Rational>& CohRing::basis_product(int ci, int cj) const {
    return pair_[static_cast<std::size_t>(ci - 1)][static_cast<std::size_t>(cj - 1)];
}

CohClass CohRing::csm_cell(int i) const {
    if (i < 1 || i > rank()) throw IndexOutOfRange("csm_cell: bad cell index");
    CohClass out = zero();
    for (auto& gamma : sf_.cell(i)) {
        Expr hpow = ex_h().pow(m() - static_cast<int>(gamma.size()));
        out += class_of_cone(gamma) * hpow;
    }
    return out;
}

CohClass CohRing::mc_chern_character_cell(int i, bool experimental) const {
    if (i < 1 || i > rank()) throw IndexOutOfRange("mc_chern_character_cell: bad cell index");
    if (sf_.space() == "projective") {
        // orbit formula: sum over cones of (1+h)^{m-dim} e^{-(m-dim+1)H} (1-e^{-H})^{dim}
        Polynomial acc;
        Polynomial one{Rational(1)};
        Polynomial h1 = one + Polynomial(kh);
        for (auto& gamma : sf_.cell(i)) {
            int g = static_cast<int>(gamma.size());
            Polynomial term = exp_H(-(m() - g + 1), m());
            term = trunc_H(term * (one - exp_H(-1, m())).pow(g), m());
            term = trunc_H(term * h1.pow(m() - g), m());
            acc += term;
        }
        // coordinates: coefficient of H^d lands on the unique cell of codim d
        std::vector<Expr> coords(static_cast<std::size_t>(rank()));
        for (int c = 1; c <= rank(); ++c) {
            int d = sf_.cell_codim(c);
            coords[static_cast<std::size_t>(c - 1)] = Expr(acc.coefficient_of(kH, d));
        }
        return {this, std::move(coords)};
    }
    if (!experimental)
        throw UnsupportedSpace("mc is implemented for projective fans; "
                               "pass experimental=true for other toric spaces");

    // GRR route over star fans: ch(i_* omega) = i_*(ch(omega) td(V)) / td(X)
    auto td_coeffs = todd_series(m());
    // td(X) and its inverse as classes with rational coefficients
    auto eval_series_class = [&](const std::vector<Rational>& coeffs, const CohClass& nilp) {
        CohClass out = zero();
        CohClass pw = unit();
        out += pw * Expr(coeffs[0]);
        for (int k = 1; k <= m(); ++k) {
            pw = pw * nilp;
            if (pw.is_zero()) break;
            out += pw * Expr(coeffs[static_cast<std::size_t>(k)]);
        }
        return out;
    };
    CohClass tdX = unit();
    for (std::size_t ray = 0; ray < sf_.fan().rays().size(); ++ray) {
        CohClass d = class_of_cone({static_cast<int>(ray)});
        tdX = tdX * eval_series_class(td_coeffs, d);
    }
    // invert: tdX = 1 + N with N nilpotent
    CohClass N = tdX - unit();
    std::vector<Rational> geom(static_cast<std::size_t>(m()) + 1);
    for (int k = 0; k <= m(); ++k) geom[static_cast<std::size_t>(k)] = Rational((k % 2) ? -1 : 1);
    CohClass tdX_inv = eval_series_class(geom, N);

    CohClass out = zero();
    Polynomial h1 = Polynomial(Rational(1)) + Polynomial(kh);
    for (auto& gamma : sf_.cell(i)) {
        int g = static_cast<int>(gamma.size());
        // push ch(omega_gamma) td(V_gamma) forward from the star algebra
        std::vector<int> orig_ray;
        Fan st = star(sf_.fan(), gamma, &orig_ray);
        GradedReduction sred = GradedReduction::build(st, {});
        const auto& sbasis = sred.basis();
        std::size_t sb = sbasis.size();
        // multiplication table of the star basis
        std::vector<std::vector<std::vector<Rational>>> stable(
            sb, std::vector<std::vector<Rational>>(sb));
        for (std::size_t p = 0; p < sb; ++p)
            for (std::size_t q = p; q < sb; ++q) {
                auto coords = sred.reduce(merge_multisets(sbasis[p], sbasis[q]));
                stable[p][q] = coords;
                stable[q][p] = std::move(coords);
            }
        auto smul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
            std::vector<Rational> out2(sb, Rational(0));
            for (std::size_t p = 0; p < sb; ++p) {
                if (a[p].is_zero()) continue;
                for (std::size_t q = 0; q < sb; ++q) {
                    if (b[q].is_zero()) continue;
                    Rational s = a[p] * b[q];
                    for (std::size_t k = 0; k < sb; ++k) out2[k] += s * stable[p][q][k];
                }
            }
            return out2;
        };
        auto seval = [&](const std::vector<Rational>& coeffs, const std::vector<Rational>& nilp) {
            std::vector<Rational> acc = sred.reduce({}); // unit
            std::vector<Rational> res(sb, Rational(0));
            for (std::size_t k = 0; k < sb; ++k) res[k] = coeffs[0] * acc[k];
            std::vector<Rational> pw = acc;
            for (int k = 1; k <= st.dim(); ++k) {
                pw = smul(pw, nilp);
                for (std::size_t q = 0; q < sb; ++q) res[q] += coeffs[static_cast<std::size_t>(k)] * pw[q];
            }
            return res;
        };
        auto exp_coeffs = [&](int n) {
            std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
            Rational fact(1);
            c[0] = Rational(1);
            for (int k = 1; k <= n; ++k) {
                fact *= Rational(k);
                c[static_cast<std::size_t>(k)] = fact.reciprocal();
            }
            return c;
        };

        // c1(omega) = -sum of star ray classes; td(V) = prod td(ray class)
        std::vector<Rational> c1(sb, Rational(0));
        std::vector<Rational> prod = sred.reduce({});
        auto td_local = todd_series(st.dim());
        for (std::size_t ray = 0; ray < st.rays().size(); ++ray) {
            auto rc = sred.reduce({static_cast<int>(ray)});
            for (std::size_t k = 0; k < sb; ++k) c1[k] -= rc[k];
            prod = smul(prod, seval(td_local, rc));
        }
        std::vector<Rational> chw = seval(exp_coeffs(st.dim()), c1);
        prod = smul(prod, chw);

        // push forward: star basis cone -> original cone (gamma + preimage rays)
        CohClass pushed = zero();
        for (std::size_t k = 0; k < sb; ++k) {
            if (prod[k].is_zero()) continue;
            RaySet orig = gamma;
            for (int sr : sbasis[k]) orig.push_back(orig_ray[static_cast<std::size_t>(sr)]);
            std::sort(orig.begin(), orig.end());
            pushed += class_of_cone(orig) * Expr(prod[k]);
        }
        out += pushed * tdX_inv * Expr(Polynomial{h1.pow(m() - g)});
    }
    return out;
}

std::vector<Expr> CohRing::expand_in_basis(const CohClass& target,
                                           const std::vector<CohClass>& basis) const {
    std::size_t n = static_cast<std::size_t>(rank());
    if (basis.size() != n) throw SingularBasis("expand_in_basis: basis size mismatch");
    Matrix<Expr> A(n, n);
    std::vector<Expr> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A.at(i, j) = basis[j].coords()[i];
        b[i] = target.coords()[i];
    }
    std::optional<std::vector<Expr>> x;
    try {
        x = solve_unique(A, b);
    } catch (const SingularBasis&) {
        throw SingularBasis("expand_in_basis: basis is singular");
    }
    if (!x) throw SingularBasis("expand_in_basis: target outside basis span");
    // certify by re-multiplication
    CohClass check = zero();
    for (std::size_t j = 0; j < n; ++j) check += basis[j] * (*x)[j];
    if (!(check == target)) throw SingularBasis("expand_in_basis: certification failed");
    return *x;
}

SCTable CohRing::structure_constants(const std::string& kind, bool experimental) const {
    if (kind != "csm" && kind != "mc") throw InvalidInput("kind must be csm or mc");
    int n = rank();
    std::vector<CohClass> classes;
    classes.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        classes.push_back(kind == "csm" ? csm_cell(i) : mc_chern_character_cell(i, experimental));

    SCTable t;
    t.space = sf_.space() == "projective" ? ("P^" + std::to_string(m())) : sf_.space();
    t.kind = kind;
    t.pipeline = "toric";
    for (int i = 1; i <= n; ++i) t.labels.push_back(sf_.cell_label(i));

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            auto coeffs = expand_in_basis(classes[static_cast<std::size_t>(i - 1)] *
                                              classes[static_cast<std::size_t>(j - 1)],
                                          classes);
            for (int k = 1; k <= n; ++k) {
                const Expr& v = coeffs[static_cast<std::size_t>(k - 1)];
                if (v.is_zero()) continue;
                if (!v.is_polynomial())
                    throw NonPolynomialResult("structure constant (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) +
                                              ") is not polynomial in h: " + v.str());
                for (Var var : v.vars())
                    if (!(var == var_h()))
                        throw NonPolynomialResult("structure constant depends on " + var.name());
                if (kind == "mc") {
                    Polynomial p = v.expand();
                    for (auto& term : p.terms())
                        if (!term.c.is_integer())
                            throw NonPolynomialResult("mc structure constant not integral: " + v.str());
                }
                t.entries.push_back({sf_.cell_label(i), sf_.cell_label(j), sf_.cell_label(k), v});
            }
        }
    return t;
}

} // namespace hdlr
