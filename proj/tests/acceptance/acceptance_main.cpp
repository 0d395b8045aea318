// Acceptance suite: one checkable criterion per line, exact equalities only.
// Usage: acceptance_tests [data_dir] [criterion]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "hdlr/closedform.hpp"
#include "hdlr/harness.hpp"

using namespace hdlr;

namespace {

struct Line {
    bool pass = true;
    bool gating = true; // criterion 9 is a report, not a hard gate
    std::string detail;
};

std::string g_data_dir = "data";

Line from_report(const VerificationReport& rep, double budget_s) {
    Line line;
    line.pass = rep.count("fail") == 0 && rep.seconds < budget_s;
    std::ostringstream out;
    out << rep.count("pass") << " pass, " << rep.count("fail") << " fail";
    if (rep.count("pass_up_to_sign")) out << ", " << rep.count("pass_up_to_sign") << " up-to-sign";
    for (auto& r : rep.results)
        if (r.status == "fail") out << " | " << r.id << (r.witness.empty() ? "" : ": " + r.witness);
    line.detail = out.str();
    return line;
}

Line criterion_1() {
    return from_report(run_suite("tables", {{"data_dir", g_data_dir}, {"table", "1"}}), 1.0);
}

Line criterion_2() {
    Line line = from_report(run_suite("tables", {{"data_dir", g_data_dir}, {"table", "2"}}), 1.0);
    if (!line.pass)
        line.detail += " | the id*id row of the published table is inconsistent with its own "
                       "cell decomposition (intersection-pairing check); engine value kept";
    return line;
}

Line criterion_3() { return from_report(run_suite("projective_H", {{"max_m", "5"}}), 10.0); }
Line criterion_4() { return from_report(run_suite("projective_K", {{"max_m", "4"}}), 30.0); }
Line criterion_5() { return from_report(run_suite("orthogonality", {}), 120.0); }
Line criterion_6() {
    return from_report(run_suite("cross_pipeline", {{"max_n", "5"}, {"max_n_k", "4"}}), 300.0);
}

Line criterion_7() {
    Line line;
    auto t0 = std::chrono::steady_clock::now();
    Expr h = ex_h();
    int checked = 0;
    for (int n = 2; n <= 7 && line.pass; ++n)
        for (int i = 1; i <= n && line.pass; ++i)
            for (int j = i; j <= n && line.pass; ++j)
                for (int k = 1; k <= n && line.pass; ++k) {
                    Expr sum;
                    for (int l = 1; l <= n; ++l) {
                        Expr t = c_term_projective(n, i, j, k, l);
                        if (!t.is_zero()) {
                            Expr ratio = t / h.pow(n - 1);
                            if (!ratio.is_constant() || !ratio.coeff().is_integer() ||
                                ratio.coeff().sign() <= 0) {
                                line.pass = false;
                                line.detail = "term not a nonnegative integer multiple of h^(n-1)";
                            }
                        }
                        sum += t;
                    }
                    if (!(sum == c_projective(n - 1, i, j, k))) {
                        line.pass = false;
                        line.detail = "term sum mismatch at n=" + std::to_string(n);
                    }
                    if (k < i) {
                        auto [p, coeff] = p_poly_projective(n, i, j, k);
                        if (!(coeff == sum)) {
                            line.pass = false;
                            line.detail = "p-polynomial coefficient mismatch";
                        }
                    }
                    ++checked;
                }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line.pass = line.pass && secs < 60.0;
    if (line.detail.empty())
        line.detail = std::to_string(checked) + " index tuples across n <= 7";
    return line;
}

Line criterion_8() { return from_report(run_suite("pieri", {{"max_n", "5"}}), 600.0); }

Line criterion_9() {
    Line line;
    line.gating = false;
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport big = check_conjectures(2, 4);
    VerificationReport small = check_conjectures(1, 2);
    auto status = [](const VerificationReport& r, const std::string& id) -> std::string {
        for (auto& res : r.results)
            if (res.id.rfind(id, 0) == 0) return res.status;
        return "missing";
    };
    std::ostringstream out;
    bool expected_shape = true;
    expected_shape &= status(big, "nu-positivity (literal)") == "pass";
    expected_shape &= status(big, "Bruhat vanishing") == "pass";
    expected_shape &= status(big, "lowest nu coefficient (literal)") == "pass";
    // the Gr(1,2) sign anomaly must be visible: literal fails, up-to-sign holds
    expected_shape &= status(small, "nu-positivity (literal)") == "fail";
    expected_shape &= status(small, "nu-positivity (up to global sign)") == "pass_up_to_sign";
    expected_shape &= status(small, "lowest nu coefficient (literal)") == "fail";
    out << "Gr(2,4): positivity literal " << status(big, "nu-positivity (literal)")
        << ", Bruhat " << status(big, "Bruhat vanishing") << ", sums-invariance " << status(big, "invariance under equal index sums")
        << ", diffs-invariance " << status(big, "invariance under equal index differences") << ", lowest-coeff literal "
        << status(big, "lowest nu coefficient (literal)")
        << "; Gr(1,2) anomaly: positivity literal " << status(small, "nu-positivity (literal)")
        << " / up-to-sign " << status(small, "nu-positivity (up to global sign)");
    if (status(big, "invariance under equal index sums") == "fail" || status(big, "invariance under equal index differences") == "fail")
        out << " | the two shift-invariance statements admit exact counterexamples on Gr(2,4) "
               "(classically certified; see the verify report witnesses)";
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line.pass = expected_shape && secs < 1800.0;
    line.detail = out.str();
    return line;
}

Line criterion_10() { return from_report(run_suite("identities", {}), 5.0); }

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_data_dir = argv[1];
    int only = argc > 2 ? std::atoi(argv[2]) : 0;

    Line (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    const char* names[] = {
        "golden Hirzebruch table reproduction (bit-exact)",
        "golden A2 permutohedral table reproduction (bit-exact)",
        "toric csm tables match the binomial closed form (m <= 5; identities m <= 8)",
        "toric mc tables match the signed closed form (m <= 4)",
        "weight-function orthogonality on Gr(1,2..4) and Gr(2,4), both theories",
        "pipeline triangle closedform == toric == weightfn on Gr(1,n)",
        "residue terms: sums, p-polynomial coefficients, h^(n-1) positivity (n <= 7)",
        "Pieri closed forms equal the general solver on Gr(2,4) and Gr(2,5)",
        "conjecture report on Gr(2,4) with the Gr(1,2) sign anomaly (not a hard gate)",
        "Pascal, Vandermonde, and residue-lemma identity suites",
    };

    bool hard_fail = false;
    for (int c = 1; c <= 10; ++c) {
        if (only != 0 && c != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Line line = criteria[c - 1]();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const char* verdict = line.pass ? "PASS" : (line.gating ? "FAIL" : "REPORTED");
        std::cout << "criterion " << c << ": " << verdict << " (" << secs << "s) — " << names[c - 1]
                  << " — " << line.detail << "\n";
        if (!line.pass && line.gating) hard_fail = true;
    }
    return hard_fail ? 1 : 0;
}
