#include "gradalg/catalog.hpp"
#include "gradalg/cli.hpp"
#include "gradalg/equivalence.hpp"
#include "gradalg/group_algebra.hpp"
#include "gradalg/io.hpp"
#include "gradalg/presentation.hpp"
#include "gradalg/universal.hpp"
#include "gradalg/witnesses.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace gradalg;

namespace {

// Python-facing handle on an immutable algebra.
struct PyAlgebra {
  AlgebraPtr a;

  static PyAlgebra from_json(const std::string& text) {
    return {std::make_shared<const GradedAlgebra>(io::parse_algebra(text))};
  }
  static PyAlgebra example(const std::string& name, const std::string& field) {
    return {catalog::algebra(name, cli::parse_field_spec(field))};
  }

  std::string to_json() const { return io::render_algebra(*a); }

  std::vector<std::string> support() const {
    std::vector<std::string> out;
    for (const auto& g : a->support()) out.push_back(a->group().format(g));
    return out;
  }

  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [g, h] : a->pair_set()) out.emplace_back(a->group().format(g), a->group().format(h));
    return out;
  }

  py::dict universal_group(std::size_t max_cosets) const {
    auto u = gradalg::universal_group(*a);
    std::vector<std::string> relators;
    for (const auto& r : u.presentation.relators())
      relators.push_back(r.to_string(u.presentation.generator_labels()));
    auto id = identify(u.presentation, max_cosets);
    py::dict d;
    d["generators"] = u.presentation.generator_labels();
    d["relators"] = relators;
    d["presentation"] = u.presentation.to_string();
    d["simplified"] = id.simplified.to_string();
    d["verdict"] = id.verdict();
    return d;
  }
};

const char* status_name(WeakEquivalenceSearch::Status s) {
  switch (s) {
    case WeakEquivalenceSearch::Status::Certificate:
      return "certificate";
    case WeakEquivalenceSearch::Status::None:
      return "none";
    case WeakEquivalenceSearch::Status::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_gradalg, m) {
  m.doc() = "Exact computations with finite-dimensional group-graded algebras";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);

  py::class_<PyAlgebra>(m, "Algebra")
      .def_static("from_json", &PyAlgebra::from_json, py::arg("text"))
      .def_static("example", &PyAlgebra::example, py::arg("name"), py::arg("field") = "Q")
      .def("to_json", &PyAlgebra::to_json)
      .def_property_readonly("dim", [](const PyAlgebra& p) { return p.a->dim(); })
      .def_property_readonly("labels", [](const PyAlgebra& p) { return p.a->labels(); })
      .def_property_readonly("field", [](const PyAlgebra& p) { return p.a->field().name(); })
      .def_property_readonly("is_unital", [](const PyAlgebra& p) { return p.a->is_unital(); })
      .def("support", &PyAlgebra::support)
      .def("pairs", &PyAlgebra::pairs)
      .def("verify", [](const PyAlgebra& p) {
        auto r = verify_grading(*p.a);
        return py::make_tuple(r.ok, r.message);
      })
      .def("universal_group", &PyAlgebra::universal_group, py::arg("max_cosets") = 10000)
      .def("__eq__", [](const PyAlgebra& x, const PyAlgebra& y) { return *x.a == *y.a; })
      .def("__repr__", [](const PyAlgebra& p) {
        return "<Algebra dim=" + std::to_string(p.a->dim()) + " over " + p.a->field().name() + ">";
      });

  m.def("examples", &catalog::names);

  m.def("weak_equivalence", [](const PyAlgebra& a, const PyAlgebra& b) {
    auto r = search_weak_equivalence(a.a, b.a);
    py::dict psi;
    for (const auto& [g, h] : r.psi) psi[py::str(a.a->group().format(g))] = b.a->group().format(h);
    return py::make_tuple(status_name(r.status), psi);
  });

  m.def(
      "one_dim_char_trivial",
      [](const std::string& group, std::uint64_t q) {
        auto a = catalog::group_algebra_named(group, Field::rationals());
        return gradalg::one_dim_char_trivial(a->group().table(), q);
      },
      py::arg("group"), py::arg("q"));

  m.def("scenarios", [] {
    std::vector<std::string> out;
    for (const auto& s : witnesses::scenarios()) out.push_back(s.name);
    return out;
  });

  m.def(
      "replay",
      [](const std::string& name, const std::string& field) {
        auto r = witnesses::run(name, cli::parse_field_spec(field));
        py::list assertions;
        for (const auto& a : r.assertions) assertions.append(py::make_tuple(a.description, a.passed, a.detail));
        py::dict d;
        d["name"] = r.name;
        d["field"] = r.field.name();
        d["passed"] = r.passed();
        d["assertions"] = assertions;
        return d;
      },
      py::arg("name"), py::arg("field") = "Q");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
