#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbit_rank/coadjoint.hpp"
#include "orbit_rank/filtration_io.hpp"
#include "orbit_rank/inference.hpp"
#include "orbit_rank/invariants.hpp"
#include "orbit_rank/lie_file.hpp"
#include "orbit_rank/report.hpp"

namespace py = pybind11;
using namespace orbit_rank;

namespace {

GroupFlags flags_for(const LieAlgebra& L, bool assume_exponential, bool simply_connected, std::uint64_t seed,
                     std::size_t trials) {
  GroupFlags f;
  f.simply_connected = simply_connected;
  f.exponentiality = assume_exponential ? asserted_exponential() : exponentiality_check(L, seed, trials);
  return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact C*-invariants of exponential solvable Lie groups";

  auto lie_error = py::register_exception<LieError>(m, "LieError", PyExc_ValueError);
  py::register_exception<RefusalError>(m, "RefusalError", lie_error.ptr());
  py::register_exception<FiltrationError>(m, "FiltrationError", PyExc_ValueError);
  py::register_exception<Contradiction>(m, "Contradiction", PyExc_RuntimeError);

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static("from_text", &load_lie_algebra, py::arg("text"), "Parse and validate `.lie` text.")
      .def_static("from_catalog", &catalog_spec, py::arg("spec"), "Built-in algebra, e.g. `axb+axb`.")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis", &LieAlgebra::basis_names)
      .def("to_text", &render_lie_file, "Canonical `.lie` text.")
      .def("__eq__", [](const LieAlgebra& a, const LieAlgebra& b) { return a == b; })
      .def("__repr__", [](const LieAlgebra& L) {
        std::string s = "LieAlgebra(";
        for (std::size_t i = 0; i < L.dim(); ++i) s += (i ? ", " : "") + L.basis_names()[i];
        return s + ")";
      });

  m.def("catalog_entries", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : catalog_entries()) out.emplace_back(e.name, e.params, e.description);
    return out;
  });

  m.def(
      "analyze_json",
      [](const LieAlgebra& L, std::size_t samples, std::uint64_t seed, bool assume_exponential,
         bool simply_connected) {
        AnalyzeOptions o;
        o.samples = samples;
        o.seed = seed;
        o.assume_exponential = assume_exponential;
        o.simply_connected = simply_connected;
        const AnalysisReport r = analyze(L, o);
        return std::make_pair(dump_report(r), r.exit_code);
      },
      py::arg("algebra"), py::arg("samples") = 200, py::arg("seed") = 0, py::arg("assume_exponential") = false,
      py::arg("simply_connected") = true);

  m.def(
      "real_rank",
      [](const LieAlgebra& L, bool assume_exponential, bool simply_connected, std::uint64_t seed,
         std::size_t trials) {
        return real_rank(L, flags_for(L, assume_exponential, simply_connected, seed, trials));
      },
      py::arg("algebra"), py::arg("assume_exponential") = false, py::arg("simply_connected") = true,
      py::arg("seed") = 0, py::arg("trials") = 50);

  m.def(
      "stable_rank",
      [](const LieAlgebra& L, bool assume_exponential, bool simply_connected, std::uint64_t seed,
         std::size_t trials) {
        return stable_rank(L, flags_for(L, assume_exponential, simply_connected, seed, trials));
      },
      py::arg("algebra"), py::arg("assume_exponential") = false, py::arg("simply_connected") = true,
      py::arg("seed") = 0, py::arg("trials") = 50);

  m.def(
      "p_polynomial", [](const LieAlgebra& L) { return p_polynomial(L).to_string(dual_names(L)); },
      py::arg("algebra"));
  m.def(
      "pfaffian", [](const LieAlgebra& L) { return pfaffian_polynomial(L).to_string(dual_names(L)); },
      py::arg("algebra"));
  m.def("has_open_orbits", &has_open_orbits, py::arg("algebra"));

  m.def(
      "infer_json",
      [](const std::string& text, bool is_json) {
        const FiltrationDoc doc = is_json ? parse_filtration_json(text) : parse_filtration(text);
        return fact_table_to_json(infer(doc)).dump(2);
      },
      py::arg("text"), py::arg("is_json") = false);
}
