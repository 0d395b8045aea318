#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdlr/cache.hpp"
#include "hdlr/closedform.hpp"
#include "hdlr/cohomology.hpp"
#include "hdlr/harness.hpp"

namespace py = pybind11;
using namespace hdlr;

namespace {

Theory parse_theory(const std::string& th) {
    if (th == "H") return Theory::H;
    if (th == "K") return Theory::K;
    throw InvalidInput("theory must be 'H' or 'K'");
}

std::string py_binomial(long n, long k) { return binomial(n, k).str(); }

std::string py_c_projective(int m, int i, int j, int k) { return c_projective(m, i, j, k).str(); }

std::string py_C_projective(int m, int i, int j, int k) { return C_projective(m, i, j, k).str(); }

std::string py_c_pieri(int n, int i, int j, int k) { return c_pieri_gr2(n, i, j, k).str(); }

std::string py_toric_table(const std::string& builtin, const std::string& kind, int m,
                           bool experimental, const std::string& format) {
    CohRing ring = CohRing::build(builtin_space(builtin, m));
    return ring.structure_constants(kind, experimental).render(format);
}

std::string py_gr_constant(const std::string& theory, int d, int n, const std::string& I,
                           const std::string& J, const std::string& K, bool equivariant) {
    Theory th = parse_theory(theory);
    SubsetIndex si = SubsetIndex::parse(n, I), sj = SubsetIndex::parse(n, J),
                sk = SubsetIndex::parse(n, K);
    if (si.d() != d || sj.d() != d || sk.d() != d)
        throw InvalidInput("subsets must have d elements");
    if (equivariant) return equivariant_sc(th, si, sj, sk).str();
    return sc_nonequivariant(th, si, sj, sk).str();
}

std::string py_gr_table(const std::string& theory, int d, int n, bool equivariant,
                        const std::string& format) {
    return gr_table(parse_theory(theory), d, n, equivariant).render(format);
}

std::string py_restriction(const std::string& theory, int n, const std::string& I,
                           const std::string& J) {
    return restriction(parse_theory(theory), SubsetIndex::parse(n, I), SubsetIndex::parse(n, J))
        .str();
}

std::string py_sc_term(const std::string& theory, int n, const std::string& I,
                       const std::string& J, const std::string& K, const std::string& L) {
    return sc_term(parse_theory(theory), SubsetIndex::parse(n, I), SubsetIndex::parse(n, J),
                   SubsetIndex::parse(n, K), SubsetIndex::parse(n, L))
        .str();
}

std::string py_run_suite(const std::string& name, std::map<std::string, std::string> params) {
    return run_suite(name, std::move(params)).to_json();
}

std::string py_check_conjectures(int d, int n) { return check_conjectures(d, n).to_json(); }

std::vector<int> py_subset_to_partition(int n, const std::string& I) {
    return SubsetIndex::parse(n, I).to_partition();
}

} // namespace

PYBIND11_MODULE(_hdlr, m) {
    m.doc() = "exact h-deformed structure constants: projective spaces, toric surfaces, "
              "small Grassmannians";
    m.def("binomial", &py_binomial, py::arg("n"), py::arg("k"));
    m.def("c_projective", &py_c_projective, py::arg("m"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("C_projective", &py_C_projective, py::arg("m"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("c_pieri_gr2", &py_c_pieri, py::arg("n"), py::arg("i"), py::arg("j"), py::arg("k"));
    m.def("toric_table", &py_toric_table, py::arg("builtin"), py::arg("kind") = "csm",
          py::arg("m") = 2, py::arg("experimental") = false, py::arg("format") = "json");
    m.def("gr_constant", &py_gr_constant, py::arg("theory"), py::arg("d"), py::arg("n"),
          py::arg("I"), py::arg("J"), py::arg("K"), py::arg("equivariant") = false);
    m.def("gr_table", &py_gr_table, py::arg("theory"), py::arg("d"), py::arg("n"),
          py::arg("equivariant") = false, py::arg("format") = "json");
    m.def("restriction", &py_restriction, py::arg("theory"), py::arg("n"), py::arg("I"),
          py::arg("J"));
    m.def("sc_term", &py_sc_term, py::arg("theory"), py::arg("n"), py::arg("I"), py::arg("J"),
          py::arg("K"), py::arg("L"));
    m.def("run_suite", &py_run_suite, py::arg("name"),
          py::arg("params") = std::map<std::string, std::string>{});
    m.def("check_conjectures", &py_check_conjectures, py::arg("d"), py::arg("n"));
    m.def("subset_to_partition", &py_subset_to_partition, py::arg("n"), py::arg("I"));
    m.attr("__version__") = kEngineVersion;
}
