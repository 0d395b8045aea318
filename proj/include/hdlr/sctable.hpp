#pragma once

#include <string>
#include <vector>

#include "hdlr/expression.hpp"

namespace hdlr {

inline constexpr const char* kEngineVersion = "0.1.0";

struct SCEntry {
    std::string i, j, k; // cell labels or subset digit strings
    Expr value;
};

/// Structure-constant table with provenance metadata. Entries are stored for
/// i <= j only (the constants are symmetric) and omit zero values.
struct SCTable {
    std::string space;            // "P^2", "hirzebruch", "Gr(2,4)", ...
    std::string kind;             // "csm" | "mc"
    std::string pipeline;         // "toric" | "closedform" | "weightfn"
    std::string theory;           // "H" | "K" (empty for toric tables)
    bool equivariant = false;
    std::vector<std::string> labels;
    std::vector<SCEntry> entries;

    const Expr* find(const std::string& i, const std::string& j, const std::string& k) const;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_latex() const;
    std::string to_text() const;
    std::string render(const std::string& format) const; // json|csv|latex|text
};

/// Structured JSON encoding of an expression with decimal-string coefficients.
std::string expr_to_json(const Expr& e);

} // namespace hdlr
