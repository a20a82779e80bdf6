#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skelex/census.hpp"
#include "skelex/classify.hpp"
#include "skelex/colored_graph.hpp"
#include "skelex/duality.hpp"
#include "skelex/expansion.hpp"
#include "skelex/generators.hpp"
#include "skelex/graph_io.hpp"
#include "skelex/nests.hpp"
#include "skelex/realize.hpp"

namespace py = pybind11;
using namespace skelex;

namespace {

using EdgeTuple = std::tuple<int, int, std::string>;

ColoredGraph make_graph(int n, int vertices, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> list;
  for (const auto& [u, v, color] : edges) list.push_back({u, v, ColorVector::parse(color)});
  return ColoredGraph(n, vertices, std::move(list));
}

std::vector<EdgeTuple> edge_tuples(const ColoredGraph& g) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.color.str());
  return out;
}

py::dict expansion_dict(const ExpansionOutcome& outcome) {
  py::dict d;
  d["nest_counts"] = outcome.nest_counts;
  d["cell_counts"] = outcome.complex.counts();
  d["euler"] = outcome.complex.euler();
  d["reached_dim"] = outcome.reached_dim;
  d["complete"] = outcome.complete();
  if (outcome.obstruction) {
    d["obstruction"] = to_string(outcome.obstruction->kind);
    d["reason"] = outcome.obstruction->reason;
  } else {
    d["obstruction"] = py::none();
  }
  return d;
}

py::dict classify_dict(const ColoredGraph& g) {
  const ExpansionOutcome outcome = full_expand(g);
  if (!outcome.complete()) throw PreconditionError(outcome.obstruction->reason);
  py::dict d;
  const HomologyReport h = homology_mod2(outcome.complex);
  d["euler"] = h.euler;
  d["betti_mod2"] = h.betti;
  if (g.n() == 2) {
    const SurfaceReport s = classify_surface(outcome.complex);
    d["name"] = s.name;
    d["orientable"] = s.orientable;
    d["genus"] = s.genus;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skeletal expansion of colored regular graphs";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("n", &ColoredGraph::n)
      .def_property_readonly("vertex_count", &ColoredGraph::vertex_count)
      .def_property_readonly("edges", &edge_tuples)
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "ColoredGraph(n=" + std::to_string(g.n()) + ", vertices=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("validate", [](const ColoredGraph& g) {
    std::vector<std::string> messages;
    for (const auto& v : validate(g).violations) messages.push_back(v.message);
    return messages;
  });
  m.def("is_pure", &is_pure);
  m.def("is_good", &is_good);
  m.def("isomorphic", &isomorphic);
  m.def("connected_sum", [](const ColoredGraph& a, int e1, const ColoredGraph& b, int e2, bool crossed) {
    return connected_sum(a, e1, b, e2, crossed ? Crossing::Crossed : Crossing::Parallel);
  }, py::arg("g1"), py::arg("e1"), py::arg("g2"), py::arg("e2"), py::arg("crossed") = false);

  m.def("nest_counts", &nest_counts);
  m.def("nests", [](const ColoredGraph& g, int k) {
    py::list out;
    for (const Nest& nest : enumerate_nests(g, k)) {
      py::dict d;
      d["label"] = nest_label(nest);
      d["vertices"] = nest.vertices;
      d["edges"] = nest.edges;
      out.append(d);
    }
    return out;
  });
  m.def("regular", [](const ColoredGraph& g) { return regularity_check(g).ok(); });

  m.def("expand", [](const ColoredGraph& g) { return expansion_dict(full_expand(g)); });
  m.def("classify", &classify_dict);

  m.def("gen_cube", &gen_cube);
  m.def("gen_orientable_surface", &gen_orientable_surface);
  m.def("gen_nonorientable_surface", &gen_nonorientable_surface);
  m.def("gen_prism", &gen_prism);

  m.def("dualize_simplices", [](const std::vector<std::vector<int>>& simplices) {
    return dual_colored_graph(poset_from_simplices(simplices));
  });
  m.def("dualize_poset", [](const std::string& text) { return dual_colored_graph(parse_poset(text)); });
  m.def("sphere_dual", [](int n) { return dual_colored_graph(sphere_two_cell_poset(n)); });

  m.def("realize", [](const ColoredGraph& g) {
    const RealizabilitySummary s = realizability_summary(g);
    py::dict d;
    d["fixed_points"] = s.fixed_points;
    d["expansion_complete"] = s.expansion_complete;
    d["euler"] = s.euler;
    d["bounding"] = to_string(s.bounding);
    d["moment_graph_matches"] = s.moment_graph_matches;
    return d;
  });

  m.def("census", [](int vertices, const std::vector<std::pair<int, int>>& edges, int n, int threads) {
    CensusOptions options;
    options.threads = threads;
    py::list out;
    for (const CensusEntry& e : census(Multigraph{vertices, edges}, n, options)) {
      py::dict d;
      d["key"] = e.key;
      d["complete"] = e.complete;
      d["euler"] = e.euler;
      if (e.surface) d["name"] = e.surface->name;
      out.append(d);
    }
    return out;
  }, py::arg("vertices"), py::arg("edges"), py::arg("n"), py::arg("threads") = 1);
}
