#pragma once

#include <map>
#include <string>
#include <vector>

#include "hdlr/limits.hpp"
#include "hdlr/sctable.hpp"

namespace hdlr {

struct InstanceResult {
    std::string id;
    std::string status; // "pass" | "fail" | "pass_up_to_sign"
    std::string witness; // failing values, both sides in canonical form
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<InstanceResult> results;
    bool conjectural = false; // conjecture suites never hard-fail
    double seconds = 0.0;

    int count(const std::string& status) const;
    /// Hard failure: any plain "fail" in a non-conjectural suite.
    bool hard_fail() const { return !conjectural && count("fail") > 0; }
    void add(std::string id, bool ok, std::string witness = "");

    std::string to_json() const;
    std::string to_text() const;
};

/// Named verification suites:
///   tables        golden comparison against the embedded Tables 1 and 2
///                 (params: data_dir, table=1|2|both)
///   projective_H  toric csm == closed form for m <= max_m; closed-form
///                 identities for m <= 8
///   projective_K  toric mc == closed form for m <= max_m
///   orthogonality all pairings on Gr(1,2..4) and Gr(2,4), both theories
///   cross_pipeline closed form == toric == weight functions, Gr(1,n)
///                 (params: max_n; K theory up to max_n_k)
///   pieri         closed Pieri forms == general solver on Gr(2,4), Gr(2,5)
///   identities    Pascal/Vandermonde ranges and the residue lemmas
///   conjectures   alias for check_conjectures (params: d, n)
///   classical     alias for classical_degeneration_check (params: d, n)
VerificationReport run_suite(const std::string& name,
                             std::map<std::string, std::string> params = {});

/// Conjecture report on Gr(d,n): positivity in nu (literal and up to the
/// global sign (-1)^(d(n-d))), Bruhat vanishing, the two index shifts, and
/// the lowest-nu-coefficient statement. Never a hard failure.
VerificationReport check_conjectures(int d, int n, const Budget& budget = {});

/// Classical-limit checks: cup-product coefficients on Gr(1,n) at
/// codimension-additive triples; h=0 internal consistency of the mc basis;
/// h^dim divisibility for d >= 2.
VerificationReport classical_degeneration_check(int d, int n, const Budget& budget = {});

} // namespace hdlr
