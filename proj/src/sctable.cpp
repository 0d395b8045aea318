#include "hdlr/sctable.hpp"

#include <json.hpp>

namespace hdlr {

const Expr* SCTable::find(const std::string& i, const std::string& j, const std::string& k) const {
    for (auto& e : entries)
        if ((e.i == i && e.j == j && e.k == k) || (e.i == j && e.j == i && e.k == k)) return &e.value;
    return nullptr;
}

std::string SCTable::to_json() const {
    nlohmann::json j;
    j["space"] = space;
    j["kind"] = kind;
    if (!labels.empty()) j["labels"] = labels;
    auto& cs = j["constants"] = nlohmann::json::array();
    for (auto& e : entries)
        cs.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"value", e.value.str()}});
    j["meta"] = {{"pipeline", pipeline}, {"version", kEngineVersion}};
    if (!theory.empty()) j["meta"]["theory"] = theory;
    j["meta"]["equivariant"] = equivariant;
    return j.dump(2) + "\n";
}

std::string SCTable::to_csv() const {
    std::string out = "i,j,k,value\n";
    for (auto& e : entries) out += e.i + "," + e.j + "," + e.k + ",\"" + e.value.str() + "\"\n";
    return out;
}

namespace {

std::string latex_value(const Expr& v) {
    std::string s = v.str(), out;
    for (char c : s)
        if (c != '*') out += c;
    return out;
}

} // namespace

std::string SCTable::to_latex() const {
    const char* cls = kind == "mc" ? "\\mathrm{mC}" : "\\mathrm{c^{sm}}";
    std::string out = "\\begin{array}{l}\n";
    std::string cur_i, cur_j, line;
    auto flush = [&]() {
        if (cur_i.empty()) return;
        out += std::string(cls) + "(\\Omega_{" + cur_i + "})" + cls + "(\\Omega_{" + cur_j +
               "}) = " + (line.empty() ? "0" : line) + "\\\\\n";
    };
    // entries are grouped by (i, j) in emission order
    for (auto& e : entries) {
        if (e.i != cur_i || e.j != cur_j) {
            flush();
            cur_i = e.i;
            cur_j = e.j;
            line.clear();
        }
        std::string coeff = latex_value(e.value);
        if (!line.empty()) line += " + ";
        line += "\\left(" + coeff + "\\right)" + cls + "(\\Omega_{" + e.k + "})";
    }
    flush();
    out += "\\end{array}\n";
    return out;
}

std::string SCTable::to_text() const {
    std::string out;
    out += space + " [" + kind + ", " + pipeline + (equivariant ? ", equivariant" : "") + "]\n";
    std::string cur_i, cur_j, line;
    auto flush = [&]() {
        if (cur_i.empty()) return;
        out += "c(" + cur_i + ")*c(" + cur_j + ") = " + (line.empty() ? "0" : line) + "\n";
    };
    for (auto& e : entries) {
        if (e.i != cur_i || e.j != cur_j) {
            flush();
            cur_i = e.i;
            cur_j = e.j;
            line.clear();
        }
        if (!line.empty()) line += " + ";
        line += "(" + e.value.str() + ")*c(" + e.k + ")";
    }
    flush();
    return out;
}

std::string SCTable::render(const std::string& format) const {
    if (format == "json") return to_json();
    if (format == "csv") return to_csv();
    if (format == "latex") return to_latex();
    if (format == "text") return to_text();
    throw InvalidInput("unknown output format '" + format + "'");
}

std::string expr_to_json(const Expr& e) {
    auto poly_json = [](const Polynomial& p) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto& t : p.terms()) {
            nlohmann::json m = nlohmann::json::object();
            for (auto& [v, k] : t.m.entries()) m[v.name()] = k;
            terms.push_back({{"c", t.c.str()}, {"m", m}});
        }
        return terms;
    };
    nlohmann::json j;
    j["num"] = poly_json(e.numerator());
    Polynomial d = e.denominator();
    if (!d.is_constant()) j["den"] = poly_json(d);
    return j.dump();
}

} // namespace hdlr
