// Python module qcflag._core. Polynomials cross the boundary as strings in
// the canonical text form, matrices as lists of rows of such strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qcflag/pipeline.hpp"
#include "qcflag/properties.hpp"

namespace py = pybind11;
using namespace qcflag;

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::vector<std::string> strings(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

std::vector<Rows> form(const BlockMatForm& f) {
  std::vector<Rows> out;
  for (const auto& m : f.components) out.push_back(m.to_strings());
  return out;
}

py::dict report(const CheckReport& r) {
  py::dict d;
  d["checks"] = r.checks;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quantum cohomology of GL_n/B";

  py::register_exception<StageError>(m, "StageError", PyExc_RuntimeError);

  py::class_<Pipeline>(m, "Pipeline")
      .def(py::init<int, int>(), py::arg("n"), py::arg("max_n") = 5)
      .def(py::init([](const std::vector<std::string>& gens, int rank) {
             std::vector<orealg::OreOp> ops;
             for (const auto& g : gens) ops.push_back(orealg::OreOp::parse(g));
             return std::make_unique<Pipeline>(std::move(ops), rank);
           }),
           py::arg("generators"), py::arg("rank"))
      .def_property_readonly("n", &Pipeline::n)
      .def_property_readonly("rank", &Pipeline::rank)
      .def("relations", [](Pipeline& p) { return strings(p.relations().relations); })
      .def("generators",
           [](Pipeline& p) {
             std::vector<std::string> out;
             for (const auto& g : p.generators()) out.push_back(g.to_string());
             return out;
           })
      .def("basis",
           [](Pipeline& p) {
             std::vector<std::string> out;
             for (const auto& s : p.context().basis) out.push_back(s.symbol.to_string());
             return out;
           })
      .def("block_sizes", [](Pipeline& p) { return p.context().block_sizes; })
      .def("omega", [](Pipeline& p) { return form(p.connection().omega); })
      .def("theta",
           [](Pipeline& p, int j) {
             const auto& cd = p.connection();
             if (j < 0 || j > cd.p()) return form(BlockMatForm{std::vector<PolyMatrix>(cd.rank(), PolyMatrix(0, 0))});
             return form(cd.theta[j]);
           },
           py::arg("j"))
      .def("lplus",
           [](Pipeline& p) {
             std::vector<Rows> qs;
             for (const auto& q : p.lplus().q) qs.push_back(q.to_strings());
             return qs;
           },
           "Q0, Q1, ..., Q_(m-2)")
      .def("q0_inverse", [](Pipeline& p) { return p.lplus().q0_inverse.to_strings(); })
      .def("c_hat", [](Pipeline& p) { return strings(p.evaluation().c_hat); })
      .def("evaluate", [](Pipeline& p, const std::string& poly) { return strings(p.ring().evaluate(Poly::parse(poly))); },
           py::arg("poly"), "Coordinates of the quantum evaluation of a polynomial in b, q")
      .def("product", [](Pipeline& p, int i, int j) {
             if (i < 0 || j < 0 || i >= p.context().dim() || j >= p.context().dim())
               throw py::index_error("basis index out of range");
             return strings(p.table()(i, j));
           },
           py::arg("i"), py::arg("j"))
      .def("gw",
           [](Pipeline& p, std::optional<std::vector<int>> degree) {
             py::list out;
             for (const auto& r : gw_invariants(p.table(), p.pairing(), degree)) {
               py::dict d;
               d["i"] = r.i;
               d["j"] = r.j;
               d["k"] = r.k;
               d["d"] = r.degree;
               d["value"] = py::int_(py::str(r.value.get_num().get_str()));
               out.append(d);
             }
             return out;
           },
           py::arg("degree") = py::none())
      .def("schubert",
           [](Pipeline& p) {
             py::list out;
             for (const auto& c : p.schubert_family().classes) {
               py::dict d;
               d["w"] = c.w;
               d["x"] = c.x_poly.to_string();
               d["b"] = c.b_poly.to_string();
               out.append(d);
             }
             return out;
           })
      .def("change_of_basis", [](Pipeline& p) { return p.change_of_basis().to_strings(); })
      .def("quantum_schubert", [](Pipeline& p) { return strings(p.quantum_schubert().polynomials); })
      .def("check",
           [](Pipeline& p, const std::string& level) {
             if (level != "structural" && level != "full") throw py::value_error("level must be structural or full");
             py::dict out;
             for (const auto& r : structural_properties(p)) out[py::str(r.name)] = report(r.report);
             if (level == "full" && p.is_flag())
               for (const auto& r : ring_properties(p)) out[py::str(r.name)] = report(r.report);
             return out;
           },
           py::arg("level") = "structural")
      .def("verify_golden",
           [](Pipeline& p, std::optional<std::filesystem::path> dir) {
             return report(verify_golden(p, dir ? *dir : default_data_dir()));
           },
           py::arg("data_dir") = py::none());
}
