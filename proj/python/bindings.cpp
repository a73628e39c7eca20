#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "evoalg/acceptance.hpp"
#include "evoalg/classify.hpp"
#include "evoalg/io.hpp"
#include "evoalg/tensor.hpp"

namespace py = pybind11;
using namespace evoalg;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

EvolutionAlgebra from_rows(const std::string& header, const std::vector<std::vector<std::string>>& rows) {
  const Field f = Field::parse(header);
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ParseError("structure matrix must be square");
    for (const auto& s : row) entries.push_back(f.parse_scalar(s));
  }
  return EvolutionAlgebra(f, rows.size(), std::move(entries));
}

std::vector<std::vector<std::string>> rows_of(const EvolutionAlgebra& a) {
  std::vector<std::vector<std::string>> out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out[r].push_back(a.entry(r, c).to_string());
  return out;
}

} // namespace

PYBIND11_MODULE(_evoalg, m) {
  m.doc() = "Evolution algebra classification kernel";

  // Translators run newest first, so the base class goes in first.
  py::register_exception<Error>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<EvolutionAlgebra>(m, "Algebra")
      .def(py::init(&from_rows), py::arg("field"), py::arg("rows"))
      .def_static("parse", [](const std::string& text) { return parse_algebra(text); })
      .def_static("read", &read_algebra_file)
      .def_property_readonly("field", [](const EvolutionAlgebra& a) { return a.field().header(); })
      .def_property_readonly("dim", &EvolutionAlgebra::dim)
      .def_property_readonly("rows", &rows_of)
      .def("determinant", [](const EvolutionAlgebra& a) { return a.determinant().to_string(); })
      .def("is_perfect", [](const EvolutionAlgebra& a) { return is_perfect(a); })
      .def("is_simple", [](const EvolutionAlgebra& a) { return is_simple(a); })
      .def("invariants",
           [](const EvolutionAlgebra& a) {
             const Invariants inv = invariants(a);
             py::dict d;
             d["l"] = inv.l;
             d["e"] = inv.e;
             d["diag_dim"] = inv.diag_dim;
             return d;
           })
      .def("graph", [](const EvolutionAlgebra& a) { return to_py(to_json(graph_of(a))); })
      .def("period", [](const EvolutionAlgebra& a) { return period(graph_of(a)); })
      .def("to_text", &format_algebra)
      .def("__eq__", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return a == b; })
      .def("__repr__", [](const EvolutionAlgebra& a) {
        return "<Algebra " + a.field().header() + " dim " + std::to_string(a.dim()) + ">";
      });

  m.def("classify", [](const EvolutionAlgebra& a) {
    const Classification c = classify_detailed(a);
    return to_py(to_json(c.tag));
  });
  m.def("canonical_algebra", [](const std::string& id, const std::vector<std::string>& params, const std::string& field) {
    const Field f = Field::parse(field);
    TypeTag tag{&family(id), {}};
    for (const auto& p : params) tag.params.push_back(f.parse_scalar(p));
    return canonical_algebra(tag, f);
  });
  m.def("family_ids", [] {
    std::vector<std::string> ids;
    for (const auto& f : families()) ids.push_back(f.id);
    return ids;
  });
  m.def("are_isomorphic", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) {
    const IsoVerdict v = are_isomorphic(a, b, SearchOptions::from_environment());
    py::dict d;
    d["isomorphic"] = v.isomorphic;
    d["exhaustive"] = v.exhaustive;
    d["family_a"] = v.family_a;
    d["family_b"] = v.family_b;
    d["notes"] = v.notes;
    return d;
  });
  m.def("brute_force_isomorphic",
        [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return brute_force_isomorphic(a, b).has_value(); });
  m.def("tensor", &tensor);
  m.def("inflate", &inflate);
  m.def("decompose", [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return to_py(to_json(decompose(a, b))); });
  m.def("quotient_check",
        [](const EvolutionAlgebra& a, const EvolutionAlgebra& b) { return to_py(to_json(quotient_theorem_check(a, b))); });
  m.def(
      "census",
      [](const std::string& field, std::size_t dim, std::size_t pairs, unsigned seed) {
        CensusReport r;
        {
          py::gil_scoped_release release;
          r = census(Field::parse(field), dim, CensusOptions{pairs, seed, 0});
        }
        return to_py(to_json(r));
      },
      py::arg("field"), py::arg("dim"), py::arg("pairs") = 200, py::arg("seed") = 1);
  m.def("acceptance", [] {
    py::list out;
    for (const auto& r : acceptance::run_all()) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["passed"] = r.pass;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
