#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "dsd/augment.hpp"
#include "dsd/coredec.hpp"
#include "dsd/error.hpp"
#include "dsd/exact.hpp"
#include "dsd/graph.hpp"
#include "dsd/peel.hpp"

namespace py = pybind11;
using namespace dsd;

namespace {

using Release = py::call_guard<py::gil_scoped_release>;

py::tuple as_tuple(const DensityValue& d) { return py::make_tuple(d.edges, d.vertices); }

}  // namespace

PYBIND11_MODULE(pydsd, m) {
  m.doc() = "Densest subgraph discovery: batch peeling, core-based augmentation, exact solvers";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  py::class_<DensityValue>(m, "Density")
      .def(py::init([](std::int64_t e, std::int64_t v) { return density(e, v); }), py::arg("edges"),
           py::arg("vertices"))
      .def_readonly("edges", &DensityValue::edges)
      .def_readonly("vertices", &DensityValue::vertices)
      .def_readonly("value", &DensityValue::value)
      .def("as_tuple", &as_tuple)
      .def("__float__", [](const DensityValue& d) { return d.value; })
      .def("__eq__", [](const DensityValue& a, const DensityValue& b) { return same_density(a, b); })
      .def("__lt__", [](const DensityValue& a, const DensityValue& b) { return compare_density(a, b) < 0; })
      .def("__repr__", [](const DensityValue& d) {
        std::ostringstream s;
        s << "Density(" << d.edges << "/" << d.vertices << " = " << d.value << ")";
        return s.str();
      });

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges, bool self_loops) {
            return Graph::from_edges(edges, self_loops);
          },
          py::arg("edges"), py::arg("self_loops") = false)
      .def_static(
          "parse",
          [](const std::string& text, bool self_loops) {
            std::istringstream in(text);
            return parse_edge_list(in, self_loops);
          },
          py::arg("text"), py::arg("self_loops") = false)
      .def_static("load", &load_edge_list, py::arg("path"), py::arg("self_loops") = false, Release())
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("raw_line_count", &Graph::raw_line_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, vertex_t v) {
             const auto adj = g.neighbors(v);
             return std::vector<vertex_t>(adj.begin(), adj.end());
           },
           py::arg("v"))
      .def("label", &Graph::label, py::arg("v"))
      .def("index_of", &Graph::index_of, py::arg("label"))
      .def("labels",
           [](const Graph& g, const std::vector<vertex_t>& vs) {
             std::vector<std::uint64_t> out;
             for (auto v : vs) out.push_back(g.label(v));
             return out;
           },
           py::arg("vertices"))
      .def("induced_density",
           [](const Graph& g, const std::vector<vertex_t>& vs) { return induced_density(g, vs); },
           py::arg("vertices"))
      .def("to_edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(g, out);
        return out.str();
      });

  py::class_<PassRecord>(m, "PassRecord")
      .def_readonly("pass_index", &PassRecord::pass)
      .def_readonly("vertices", &PassRecord::vertices)
      .def_readonly("edges", &PassRecord::edges)
      .def_readonly("density", &PassRecord::density);

  py::class_<PeelResult>(m, "PeelResult")
      .def_readonly("best_density", &PeelResult::best_density)
      .def_readonly("best_pass", &PeelResult::best_pass)
      .def_readonly("removal_pass", &PeelResult::removal_pass)
      .def_readonly("passes_executed", &PeelResult::passes_executed)
      .def_readonly("pass_trace", &PeelResult::pass_trace)
      .def_readonly("epsilon", &PeelResult::epsilon)
      .def("members", &PeelResult::members);

  m.def("threshold", &threshold, py::arg("rho"), py::arg("epsilon"));
  m.def(
      "peel_densest",
      [](const Graph& g, double epsilon, std::size_t workers) {
        return peel_densest(g, {epsilon, workers});
      },
      py::arg("graph"), py::arg("epsilon") = 0.0, py::arg("workers") = 1, Release());

  py::class_<LevelRecord>(m, "LevelRecord")
      .def_readonly("k", &LevelRecord::k)
      .def_readonly("vertices", &LevelRecord::vertices)
      .def_readonly("edges", &LevelRecord::edges)
      .def_readonly("density", &LevelRecord::density);

  py::class_<CoreDecomposition>(m, "CoreDecomposition")
      .def_readonly("coreness", &CoreDecomposition::coreness)
      .def_readonly("level_trace", &CoreDecomposition::level_trace)
      .def_readonly("max_density", &CoreDecomposition::max_density)
      .def_readonly("max_density_core", &CoreDecomposition::max_density_core)
      .def_readonly("m_v", &CoreDecomposition::m_v)
      .def_readonly("m_e", &CoreDecomposition::m_e)
      .def_readonly("k_max", &CoreDecomposition::k_max)
      .def_readonly("levels", &CoreDecomposition::levels)
      .def("members", &core_members);

  m.def("decompose", &decompose, py::arg("graph"), py::arg("workers") = 1, Release());

  py::class_<AugmentResult>(m, "AugmentResult")
      .def_readonly("eligible_count", &AugmentResult::eligible_count)
      .def_readonly("legit", &AugmentResult::legit)
      .def_readonly("cross_edges", &AugmentResult::cross_edges)
      .def_readonly("core_density", &AugmentResult::core_density)
      .def_readonly("max_density_core", &AugmentResult::max_density_core)
      .def_readonly("vertices", &AugmentResult::vertices)
      .def_readonly("final_density", &AugmentResult::final_density)
      .def_readonly("labels", &AugmentResult::labels)
      .def("members", &AugmentResult::members);

  m.def("augment", &augment, py::arg("graph"), py::arg("decomposition"), py::arg("workers") = 1,
        Release());
  m.def(
      "cbds",
      [](const Graph& g, std::size_t workers) { return augment(g, decompose(g, workers), workers); },
      py::arg("graph"), py::arg("workers") = 1, Release());
  m.def(
      "density_gain",
      [](std::int64_t n, std::int64_t e, double e_tilde) { return density_gain({n, e, e_tilde}); },
      py::arg("n"), py::arg("e"), py::arg("e_tilde"));

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("density", &ExactResult::density)
      .def_readonly("members", &ExactResult::members)
      .def_property_readonly("method",
                             [](const ExactResult& r) { return std::string(to_string(r.method)); })
      .def_readonly("search_iterations", &ExactResult::search_iterations);

  m.def("flow_exact_densest", &flow_exact_densest, py::arg("graph"), Release());
  m.def("brute_force_densest", &brute_force_densest, py::arg("graph"),
        py::arg("cap") = kBruteForceCap, Release());
}
