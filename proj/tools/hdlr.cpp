#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdlr/cache.hpp"
#include "hdlr/closedform.hpp"
#include "hdlr/cohomology.hpp"
#include "hdlr/harness.hpp"
#include "hdlr/limits.hpp"

using namespace hdlr;

namespace {

constexpr int kExitHardFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitNotPolynomial = 4;

void emit(const std::string& content, const std::string& output) {
    if (output.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        write_file_atomic(output, content);
    }
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
    if (const char* env = std::getenv("HDLR_CACHE_DIR")) return env; // env wins
    if (!flag.empty()) return flag;
    return ResultCache::default_dir();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

// "34,34,14" (digit strings) or "3,11:4,12:1,2" (long form, colon-separated)
std::vector<SubsetIndex> parse_triple(int n, const std::string& text) {
    std::vector<std::string> parts = text.find(':') != std::string::npos ? split(text, ':')
                                                                         : split(text, ',');
    if (parts.size() != 3) throw InvalidInput("--triple expects three subsets, got '" + text + "'");
    std::vector<SubsetIndex> out;
    for (auto& p : parts) out.push_back(SubsetIndex::parse(n, p));
    return out;
}

int cmd_toric(const std::string& builtin, int m, const std::string& fan_path,
              const std::string& order_csv, const std::string& kind, bool experimental,
              const std::string& format, const std::string& output) {
    ShelledFan sf;
    if (!builtin.empty()) {
        sf = builtin_space(builtin, m);
    } else {
        std::ifstream in(fan_path);
        if (!in) {
            std::cerr << "cannot open fan file " << fan_path << "\n";
            return kExitValidation;
        }
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        Fan fan = Fan::from_json(text);
        auto validation = validate_fan(fan);
        if (!validation.pass()) {
            std::cerr << "fan validation failed:\n" << validation.str();
            return kExitValidation;
        }
        std::vector<int> order;
        if (!order_csv.empty()) {
            for (auto& tok : split(order_csv, ',')) order.push_back(std::stoi(tok) - 1);
        } else {
            nlohmann::json j = nlohmann::json::parse(text);
            if (j.contains("order"))
                for (auto& idx : j["order"]) order.push_back(idx.get<int>() - 1);
        }
        if (order.empty()) {
            std::cerr << "no shelling order given (use --order or an \"order\" field)\n";
            return kExitValidation;
        }
        sf = shell(fan, order);
    }
    auto validation = validate_fan(sf.fan());
    if (!validation.pass()) {
        std::cerr << "fan validation failed:\n" << validation.str();
        return kExitValidation;
    }
    CohRing ring = CohRing::build(sf);
    SCTable table = ring.structure_constants(kind, experimental);
    emit(table.render(format), output);
    return 0;
}

int cmd_gr(int d, int n, const std::string& theory, const std::string& triple,
           const std::string& term, bool equivariant, bool allow_big, const std::string& format,
           const std::string& output, const std::string& cache_flag, bool no_cache) {
    Theory th = theory == "K" ? Theory::K : Theory::H;
    Budget budget;
    budget.allow_big = allow_big;
    budget.check(d, n);
    ResultCache cache(resolve_cache_dir(cache_flag));

    if (!triple.empty()) {
        auto ijk = parse_triple(n, triple);
        if (!term.empty()) {
            SubsetIndex L = SubsetIndex::parse(n, term);
            Expr v = sc_term(th, ijk[0], ijk[1], ijk[2], L);
            emit(v.str(), output);
            return 0;
        }
        std::string key = ResultCache::key(th, d, n, ijk[0], ijk[1], ijk[2], equivariant);
        if (!no_cache) {
            if (auto hit = cache.get(key)) {
                emit(*hit, output);
                return 0;
            }
        }
        Expr v = equivariant ? equivariant_sc(th, ijk[0], ijk[1], ijk[2])
                             : sc_nonequivariant(th, ijk[0], ijk[1], ijk[2], budget);
        std::string value = v.str();
        if (!no_cache) cache.put(key, value);
        emit(value, output);
        return 0;
    }

    SCTable table = gr_table(th, d, n, equivariant, budget);
    if (!no_cache)
        for (auto& e : table.entries)
            cache.put(ResultCache::key(th, d, n, SubsetIndex::parse(n, e.i),
                                       SubsetIndex::parse(n, e.j), SubsetIndex::parse(n, e.k),
                                       equivariant),
                      e.value.str());
    emit(table.render(format), output);
    return 0;
}

int cmd_verify(const std::string& suite, std::map<std::string, std::string> params,
               const std::string& output) {
    VerificationReport rep = run_suite(suite, std::move(params));
    std::cout << rep.to_text();
    if (!output.empty()) write_file_atomic(output, rep.to_json());
    return rep.hard_fail() ? kExitHardFail : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact h-deformed structure constants of projective spaces, toric surfaces, "
                 "and small Grassmannians"};
    app.require_subcommand(1);

    // toric
    auto* toric = app.add_subcommand("toric", "structure constants of a toric space");
    std::string builtin, fan_path, order_csv, kind = "csm", format = "json", output;
    int m = 2;
    bool experimental = false;
    toric->add_option("--builtin", builtin, "projective | hirzebruch | a2_permutohedral (a2)");
    toric->add_option("--m", m, "dimension for --builtin projective");
    toric->add_option("--fan", fan_path, "fan JSON file");
    toric->add_option("--order", order_csv, "shelling order of maximal cones (1-based, comma separated)");
    toric->add_option("--kind", kind, "csm | mc")->check(CLI::IsMember({"csm", "mc"}));
    toric->add_flag("--experimental-mc", experimental, "allow mc on non-projective fans");
    toric->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    toric->add_option("--output", output, "write to file (atomic) instead of stdout");

    // gr
    auto* gr = app.add_subcommand("gr", "structure constants of Gr(d,n)");
    int d = 1, n = 2;
    std::string theory = "H", triple, term, cache_flag;
    bool equivariant = false, allow_big = false, no_cache = false;
    gr->add_option("--d", d)->required();
    gr->add_option("--n", n)->required();
    gr->add_option("--theory", theory)->check(CLI::IsMember({"H", "K"}));
    gr->add_option("--triple", triple, "I,J,K as digit strings (\"34,34,14\"); colon form for n >= 10");
    gr->add_option("--term", term, "single fixed-point summand at this L (with --triple)");
    gr->add_flag("--equivariant", equivariant, "keep the z variables");
    gr->add_flag("--allow-big", allow_big, "open the Gr(3,6) budget");
    gr->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    gr->add_option("--output", output);
    gr->add_option("--cache-dir", cache_flag, "cache directory (HDLR_CACHE_DIR overrides)");
    gr->add_flag("--no-cache", no_cache);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, data_dir;
    int max_m = -1, max_n = -1, vd = -1, vn = -1;
    verify->add_option("--suite", suite,
                       "tables | projective_H | projective_K | orthogonality | cross_pipeline | "
                       "pieri | identities | conjectures | classical")
        ->required();
    verify->add_option("--max-m", max_m);
    verify->add_option("--max-n", max_n);
    verify->add_option("--d", vd);
    verify->add_option("--n", vn);
    verify->add_option("--data-dir", data_dir);
    verify->add_flag("--allow-big", allow_big);
    verify->add_option("--output", output, "also write the JSON report here");

    // cache
    auto* cachecmd = app.add_subcommand("cache", "inspect or clear the result cache");
    std::string action;
    cachecmd->add_option("action", action, "inspect | clear")->required();
    cachecmd->add_option("--cache-dir", cache_flag);

    CLI11_PARSE(app, argc, argv);

    try {
        if (toric->parsed())
            return cmd_toric(builtin, m, fan_path, order_csv, kind, experimental, format, output);
        if (gr->parsed())
            return cmd_gr(d, n, theory, triple, term, equivariant, allow_big, format, output,
                          cache_flag, no_cache);
        if (verify->parsed()) {
            std::map<std::string, std::string> params;
            if (max_m >= 0) params["max_m"] = std::to_string(max_m);
            if (max_n >= 0) params["max_n"] = std::to_string(max_n);
            if (vd >= 0) params["d"] = std::to_string(vd);
            if (vn >= 0) params["n"] = std::to_string(vn);
            if (!data_dir.empty()) params["data_dir"] = data_dir;
            if (allow_big) params["allow_big"] = "1";
            return cmd_verify(suite, std::move(params), output);
        }
        if (cachecmd->parsed()) {
            ResultCache cache(resolve_cache_dir(cache_flag));
            if (action == "inspect") {
                for (auto& [key, value] : cache.entries())
                    std::cout << key << " = " << value << "\n";
                return 0;
            }
            if (action == "clear") {
                cache.clear();
                return 0;
            }
            std::cerr << "unknown cache action '" << action << "'\n";
            return kExitHardFail;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitBudget;
    } catch (const NonPolynomialResult& e) {
        std::cerr << "internal polynomiality failure: " << e.what() << "\n";
        return kExitNotPolynomial;
    } catch (const NotPolynomial& e) {
        std::cerr << "internal polynomiality failure: " << e.what() << "\n";
        return kExitNotPolynomial;
    } catch (const UnknownSpace& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitHardFail;
    }
    return 0;
}
