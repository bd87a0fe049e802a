#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momentangle/hochster.hpp"
#include "momentangle/json_io.hpp"
#include "momentangle/parallel.hpp"
#include "momentangle/polytope.hpp"
#include "momentangle/random_complex.hpp"
#include "momentangle/verify.hpp"

namespace py = pybind11;
using namespace momentangle;

namespace {

SimplicialComplex make_complex(int m, const std::vector<std::vector<int>>& facets) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  return SimplicialComplex::from_facet_lists(m, facets);
}

std::vector<std::vector<int>> as_lists(const std::vector<IndexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (IndexSet s : sets) out.push_back(s.elements());
  return out;
}

std::string betti_json(const SimplicialComplex& sigma, const std::string& model, const std::string& arena,
                       const std::string& coeff, std::optional<int> maxdeg, std::optional<int> truncate) {
  const auto coefficients = coefficients_from_string(coeff);
  const auto built = build_model(sigma, resolve_variant(model, arena, coefficients, maxdeg, truncate, sigma));
  HomologyEngine engine(built.complex(), coefficients);
  std::map<int, CohomologyGroup> groups;
  for (int k = 0; k <= maxdeg.value_or(built.complex().max_degree()); ++k) groups[k] = engine.group(k);
  return groups_to_json(groups).dump();
}

std::string ring_json(const SimplicialComplex& sigma, const std::string& model, const std::string& arena,
                      const std::string& coeff, std::optional<int> maxdeg, std::optional<int> truncate) {
  const auto coefficients = coefficients_from_string(coeff);
  const auto built = build_model(sigma, resolve_variant(model, arena, coefficients, maxdeg, truncate, sigma));
  if (!built.has_product()) throw std::invalid_argument("model " + model + " has no product");
  return ring_to_json(cohomology_ring(built, maxdeg.value_or(built.complex().max_degree()), coefficients)).dump();
}

std::string hochster_json(const SimplicialComplex& sigma, const std::string& arena, const std::string& coeff,
                          const std::optional<std::vector<std::vector<int>>>& alphas) {
  std::optional<std::vector<IndexSet>> sets;
  if (alphas) {
    sets.emplace();
    for (const auto& a : *alphas) sets->push_back(IndexSet(a));
  }
  return betti_to_json(hochster_table_model(sigma, arena_from_string(arena), coefficients_from_string(coeff), sets))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cohomology of moment-angle complexes from finite models";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_IndexError);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init(&make_complex), py::arg("m"), py::arg("facets"))
      .def_static("from_json", &parse_complex, py::arg("text"))
      .def_static("simplex_boundary", &SimplicialComplex::simplex_boundary, py::arg("m"))
      .def_static("ghosts", &SimplicialComplex::empty, py::arg("m"))
      .def_property_readonly("m", &SimplicialComplex::ground_size)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("facets", [](const SimplicialComplex& s) { return as_lists(s.facets()); })
      .def("faces", [](const SimplicialComplex& s) { return as_lists(s.faces()); })
      .def("to_json", [](const SimplicialComplex& s) { return complex_to_json(s).dump(); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& s) { return "SimplicialComplex(" + complex_to_json(s).dump() + ")"; });

  m.def("random_complex", &random_complex, py::arg("m"), py::arg("seed"));
  m.def("set_thread_count", &set_thread_count, py::arg("count"));

  m.def("_betti_json", &betti_json, py::arg("sigma"), py::arg("model"), py::arg("arena"), py::arg("coeff"),
        py::arg("maxdeg"), py::arg("truncate"));
  m.def("_ring_json", &ring_json, py::arg("sigma"), py::arg("model"), py::arg("arena"), py::arg("coeff"),
        py::arg("maxdeg"), py::arg("truncate"));
  m.def("_hochster_json", &hochster_json, py::arg("sigma"), py::arg("arena"), py::arg("coeff"), py::arg("alphas"));
  m.def(
      "_glm_json",
      [](const SimplicialComplex& sigma, std::optional<int> maxdeg, const std::string& coeff) {
        return ring_to_json(glm_ring(sigma, maxdeg, coefficients_from_string(coeff))).dump();
      },
      py::arg("sigma"), py::arg("maxdeg"), py::arg("coeff"));
  m.def("verify", [](const SimplicialComplex& sigma) {
    py::list out;
    for (const auto& r : verify_complex(sigma)) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("sigma"));
}
