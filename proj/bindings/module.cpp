#include "cubsched/coloring.hpp"
#include "cubsched/error.hpp"
#include "cubsched/experiment.hpp"
#include "cubsched/graph.hpp"
#include "cubsched/oracle.hpp"
#include "cubsched/rational.hpp"
#include "cubsched/scheduler.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace cubsched;

namespace {

std::optional<GraphClass> class_from_optional_text(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  if (*text == "bicubic") return GraphClass::Bicubic;
  if (*text == "tricubic") return GraphClass::Tricubic;
  throw py::value_error("graph class must be 'bicubic' or 'tricubic'");
}

py::dict schedule_to_dict(const Schedule& sched) {
  py::dict d;
  d["route"] = sched.route;
  d["makespan"] = format_rational(sched.makespan);
  d["makespan_float"] = boost::rational_cast<double>(sched.makespan);
  py::list loads;
  for (const auto& load : sched.loads) loads.append(load);
  d["loads"] = loads;
  return d;
}

int checked_vertex(const CubicGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "unit-job scheduling on three uniform machines under a cubic incompatibility graph";

  py::class_<CubicGraph>(m, "CubicGraph")
      .def_static("from_edges", &CubicGraph::from_edges, py::arg("order"), py::arg("edges"))
      .def("order", &CubicGraph::order)
      .def("edge_count", &CubicGraph::edge_count)
      .def("neighbors",
           [](const CubicGraph& g, int v) {
             auto nbrs = g.neighbors(checked_vertex(g, v));
             return std::vector<int>(nbrs.begin(), nbrs.end());
           })
      .def("adjacent",
           [](const CubicGraph& g, int u, int v) {
             return g.adjacent(checked_vertex(g, u), checked_vertex(g, v));
           })
      .def("edges", &CubicGraph::edges)
      .def("__repr__", [](const CubicGraph& g) {
        return "CubicGraph(order=" + std::to_string(g.order()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("format_graph", &format_graph);
  m.def(
      "random_cubic",
      [](int order, std::uint64_t seed, const std::optional<std::string>& graph_class) {
        return random_cubic(order, seed, class_from_optional_text(graph_class));
      },
      py::arg("order"), py::arg("seed"), py::arg("graph_class") = std::nullopt);
  m.def("classify", [](const CubicGraph& g) { return std::string(graph_class_name(classify(g).kind)); });

  m.def("k4", &graphs::k4);
  m.def("k33", &graphs::k33);
  m.def("prism", &graphs::prism);
  m.def("cube", &graphs::cube);
  m.def("petersen", &graphs::petersen);

  m.def("greedy_independent_set", &greedy_independent_set);
  m.def("independence_number",
        [](const CubicGraph& g) { return independence_number(g); });

  m.def(
      "schedule",
      [](const CubicGraph& g, const std::string& speeds) {
        return schedule_to_dict(schedule(g, MachineSpeeds::from_text(speeds)));
      },
      py::arg("graph"), py::arg("speeds"));
  m.def(
      "oracle",
      [](const CubicGraph& g, const std::string& speeds) {
        return schedule_to_dict(optimal_schedule_exact(g, MachineSpeeds::from_text(speeds)));
      },
      py::arg("graph"), py::arg("speeds"));

  m.def(
      "exists_semi_equitable",
      [](const CubicGraph& g, std::tuple<int, int, int> sizes) {
        auto result = exists_semi_equitable(
            g, make_size_triple(std::get<0>(sizes), std::get<1>(sizes), std::get<2>(sizes)));
        return result.exists;
      },
      py::arg("graph"), py::arg("sizes"));
  m.def(
      "semi_equitable_witness",
      [](const CubicGraph& g, std::tuple<int, int, int> sizes) -> py::object {
        auto result = exists_semi_equitable(
            g, make_size_triple(std::get<0>(sizes), std::get<1>(sizes), std::get<2>(sizes)));
        if (!result.exists) return py::none();
        return py::cast(result.witness->class_of);
      },
      py::arg("graph"), py::arg("sizes"));
}
