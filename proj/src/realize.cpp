#include "skelex/realize.hpp"

#include <stdexcept>

#include "skelex/error.hpp"
#include "skelex/expansion.hpp"

namespace skelex {

std::string subgroup_label(const Subspace& s) {
  std::string out = "<";
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    if (r > 0) out += ", ";
    const ColorVector& row = s.basis()[r];
    bool first = true;
    for (int i = 0; i < row.size(); ++i) {
      if (!row[i]) continue;
      out += (first ? "t" : "+t") + std::to_string(i);
      first = false;
    }
  }
  return out + ">";
}

std::vector<IsotropyRecord> isotropy_report(const ColoredGraph& g) {
  return isotropy_report(NestComplex(g));
}

std::vector<IsotropyRecord> isotropy_report(const NestComplex& nests) {
  const ColoredGraph& g = nests.graph();
  if (!is_good(g)) throw PreconditionError("isotropy data needs a good coloring");
  std::vector<IsotropyRecord> out;
  for (int k = 0; k <= nests.top_dim(); ++k) {
    for (std::size_t i = 0; i < nests.nests(k).size(); ++i) {
      const Nest& nest = nests.nest(k, static_cast<int>(i));
      IsotropyRecord record;
      record.nest_dim = k;
      record.nest = static_cast<int>(i);
      record.subgroup = nest.color.annihilator();
      record.corank = g.rank() - record.subgroup.dim();
      record.copies = 1L << nest.color.dim();
      if (record.corank != k) {
        throw std::logic_error("isotropy subgroup of " + std::to_string(k) + "-nest " +
                               std::to_string(i) + " has corank " + std::to_string(record.corank));
      }
      out.push_back(std::move(record));
    }
  }
  return out;
}

CircleReport fixed_circle_check(const ColoredGraph& g, int edge) {
  const Edge& e = g.edge(edge);
  CircleReport report;
  report.edge = edge;
  report.p = e.u;
  report.q = e.v;
  report.subgroup = Subspace::span(g.rank(), {e.color}).annihilator();
  // G / ker alpha(e) has two elements, one arc copy each.
  report.arc_copies = 1 << (g.rank() - report.subgroup.dim());
  report.fixed_points = e.u == e.v ? 1 : 2;
  // Both arcs run from p to q, so each fixed point meets both arcs.
  report.closes = report.arc_copies == 2 && report.fixed_points == 2;
  return report;
}

std::string to_string(Bounding b) {
  switch (b) {
    case Bounding::Directly:
      return "bounds directly";
    case Bounding::DoublingRequired:
      return "doubling required";
    case Bounding::Unknown:
      return "unknown";
  }
  return "unknown";
}

ColoredGraph moment_graph(const ColoredGraph& g) {
  std::vector<Edge> edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    const CircleReport circle = fixed_circle_check(g, id);
    const Subspace label = circle.subgroup.annihilator();
    if (label.dim() != 1) throw std::logic_error("fixed circle label is not a line");
    edges.push_back({circle.p, circle.q, label.basis().front()});
  }
  return ColoredGraph(g.n(), g.vertex_count(), std::move(edges));
}

RealizabilitySummary realizability_summary(const ColoredGraph& g) {
  const NestComplex nests(g);
  const ExpansionOutcome outcome = full_expand(nests);
  RealizabilitySummary s;
  s.n = g.n();
  s.expansion_complete = outcome.complete();
  s.euler = outcome.complex.euler();
  s.fixed_points = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<ColorVector> colors;
    for (int id : g.incident(v)) colors.push_back(g.edge(id).color);
    s.tangent_colors.push_back(std::move(colors));
  }
  s.moment_graph_matches = moment_graph(g) == g;
  if (!s.expansion_complete) {
    s.bounding = Bounding::Unknown;
    s.reason = "no " + std::to_string(g.n()) + "-skeletal expansion: " + outcome.obstruction->reason;
  } else if (g.n() == 3) {
    s.bounding = Bounding::Directly;
    s.reason = "every closed 3-manifold bounds";
  } else if (s.euler % 2 == 0) {
    s.bounding = Bounding::Directly;
    s.reason = "Euler characteristic " + std::to_string(s.euler) + " is even";
  } else {
    s.bounding = Bounding::DoublingRequired;
    s.reason = "Euler characteristic " + std::to_string(s.euler) +
               " is odd; realize the connected sum of two copies";
  }
  return s;
}

}  // namespace skelex
