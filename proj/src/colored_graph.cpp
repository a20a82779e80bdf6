#include "skelex/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "skelex/error.hpp"

namespace skelex {

ColoredGraph::ColoredGraph(int n, int vertex_count, std::vector<Edge> edges)
    : n_(n), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("n must be at least 1, got " + std::to_string(n));
  if (n + 1 > kMaxAmbient) throw DimensionMismatch("n + 1 exceeds " + std::to_string(kMaxAmbient));
  if (vertex_count < 1) throw std::invalid_argument("a graph needs at least one vertex");
  incidence_.resize(static_cast<std::size_t>(vertex_count));
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw std::out_of_range("edge " + std::to_string(id) + " has an endpoint outside 0.." +
                              std::to_string(vertex_count - 1));
    }
    if (e.color.size() != n + 1) {
      throw DimensionMismatch("edge " + std::to_string(id) + " color has length " +
                              std::to_string(e.color.size()) + ", expected " +
                              std::to_string(n + 1));
    }
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(id));
    if (e.v != e.u) incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(id));
  }
}

std::span<const int> ColoredGraph::incident(int v) const {
  return incidence_.at(static_cast<std::size_t>(v));
}

int ColoredGraph::other_end(int edge, int v) const {
  const Edge& e = this->edge(edge);
  if (e.u == v) return e.v;
  if (e.v == v) return e.u;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not an end of edge " +
                              std::to_string(edge));
}

// ---------------------------------------------------------------------------

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (const auto& v : violations) out << v.message << '\n';
  return out.str();
}

ValidationReport validate(const ColoredGraph& g) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, int vertex, int edge, std::string message) {
    report.violations.push_back({kind, vertex, edge, std::move(message)});
  };

  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == e.v) {
      add(ViolationKind::Loop, e.u, id,
          "edge " + std::to_string(id) + " is a loop at vertex " + std::to_string(e.u));
    }
    if (e.color.is_zero()) {
      add(ViolationKind::ZeroColor, -1, id, "edge " + std::to_string(id) + " has the zero color");
    }
  }

  for (int v = 0; v < g.vertex_count(); ++v) {
    // A loop contributes two ends.
    int ends = 0;
    std::vector<ColorVector> colors;
    for (int id : g.incident(v)) {
      const Edge& e = g.edge(id);
      ends += e.u == e.v ? 2 : 1;
      colors.push_back(e.color);
      if (e.u == e.v) colors.push_back(e.color);
    }
    if (ends != g.rank()) {
      add(ViolationKind::Valence, v, -1,
          "vertex " + std::to_string(v) + " has " + std::to_string(ends) + " edge ends, expected " +
              std::to_string(g.rank()));
    }
    if (Subspace::span(g.rank(), colors).dim() != static_cast<int>(colors.size())) {
      add(ViolationKind::Dependent, v, -1,
          "colors at vertex " + std::to_string(v) + " are linearly dependent");
    }
  }

  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int id : g.incident(v)) {
      const int w = g.other_end(id, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.vertex_count()) {
    const int missing = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    add(ViolationKind::Disconnected, missing, -1,
        "graph is disconnected: vertex " + std::to_string(missing) + " unreachable from vertex 0");
  }
  return report;
}

void require_valid(const ColoredGraph& g) {
  const ValidationReport report = validate(g);
  if (!report.ok()) throw InvalidGraph("invalid colored graph: " + report.violations.front().message);
}

bool is_pure(const ColoredGraph& g) {
  require_valid(g);
  std::set<ColorVector> colors;
  for (const auto& e : g.edges()) colors.insert(e.color);
  return static_cast<int>(colors.size()) == g.rank();
}

// ---------------------------------------------------------------------------

int Connection::apply(int edge, int from_vertex, int incident_edge) const {
  const auto& map = maps_.at(static_cast<std::size_t>(edge));
  const bool forward = tail_.at(static_cast<std::size_t>(edge)) == from_vertex;
  for (const auto& [a, b] : map) {
    if (forward && a == incident_edge) return b;
    if (!forward && b == incident_edge) return a;
  }
  throw std::invalid_argument("edge " + std::to_string(incident_edge) + " is not at vertex " +
                              std::to_string(from_vertex));
}

struct GoodnessBuilder {
  static GoodnessReport run(const ColoredGraph& g) {
    require_valid(g);
    GoodnessReport report;
    Connection connection;
    connection.tail_.resize(static_cast<std::size_t>(g.edge_count()));
    connection.maps_.resize(static_cast<std::size_t>(g.edge_count()));

    // Partner of e0 (at v) across e1 = (v, w): the edge at w other than e1
    // whose color lies in Span(color(e0), color(e1)). At most one exists
    // because the colors at w are independent.
    auto partner = [&](int e1, int v, int e0) {
      const int w = g.other_end(e1, v);
      if (e0 == e1) return e1;
      const Subspace plane = Subspace::span(g.rank(), {g.edge(e0).color, g.edge(e1).color});
      for (int e2 : g.incident(w)) {
        if (e2 != e1 && plane.contains(g.edge(e2).color)) return e2;
      }
      return -1;
    };

    for (int e1 = 0; e1 < g.edge_count(); ++e1) {
      const Edge& e = g.edge(e1);
      connection.tail_[static_cast<std::size_t>(e1)] = e.u;
      for (int v : {e.u, e.v}) {
        for (int e0 : g.incident(v)) {
          const int e2 = partner(e1, v, e0);
          if (e2 < 0) {
            report.witness = GoodnessWitness{e1, e0, v};
            return report;
          }
          if (v == e.u) connection.maps_[static_cast<std::size_t>(e1)].emplace_back(e0, e2);
        }
      }
    }
    report.good = true;
    report.connection = std::move(connection);
    return report;
  }
};

GoodnessReport check_good(const ColoredGraph& g) { return GoodnessBuilder::run(g); }

// ---------------------------------------------------------------------------

ColoredGraph connected_sum(const ColoredGraph& g1, int e1, const ColoredGraph& g2, int e2,
                           Crossing crossing) {
  if (&g1 == &g2) {
    throw PreconditionError("connected sum needs two distinct graph instances");
  }
  if (g1.n() != g2.n()) {
    throw PreconditionError("connected sum of graphs with n = " + std::to_string(g1.n()) +
                            " and n = " + std::to_string(g2.n()));
  }
  require_valid(g1);
  require_valid(g2);
  const Edge& a = g1.edge(e1);
  const Edge& b = g2.edge(e2);
  if (a.color != b.color) {
    throw PreconditionError("connected sum along edges of colors " + a.color.str() + " and " +
                            b.color.str());
  }
  const int shift = g1.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g1.edge_count() + g2.edge_count()));
  for (int id = 0; id < g1.edge_count(); ++id) {
    if (id != e1) edges.push_back(g1.edge(id));
  }
  for (int id = 0; id < g2.edge_count(); ++id) {
    if (id == e2) continue;
    Edge e = g2.edge(id);
    e.u += shift;
    e.v += shift;
    edges.push_back(e);
  }
  const int u2 = b.u + shift;
  const int v2 = b.v + shift;
  if (crossing == Crossing::Parallel) {
    edges.push_back({a.u, u2, a.color});
    edges.push_back({a.v, v2, a.color});
  } else {
    edges.push_back({a.u, v2, a.color});
    edges.push_back({a.v, u2, a.color});
  }
  ColoredGraph sum(g1.n(), g1.vertex_count() + g2.vertex_count(), std::move(edges));
  const ValidationReport report = validate(sum);
  if (!report.ok()) {
    throw std::logic_error("connected sum produced an invalid graph: " +
                           report.violations.front().message);
  }
  return sum;
}

ColoredGraph canonicalize(const ColoredGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.color < b.color;
  });
  return ColoredGraph(g.n(), g.vertex_count(), std::move(edges));
}

namespace {

int edge_with_color(const ColoredGraph& g, int v, const ColorVector& c) {
  for (int id : g.incident(v)) {
    if (g.edge(id).color == c) return id;
  }
  return -1;
}

bool extend_from(const ColoredGraph& a, const ColoredGraph& b, int root_image) {
  std::vector<int> vmap(static_cast<std::size_t>(a.vertex_count()), -1);
  std::vector<int> used(static_cast<std::size_t>(b.vertex_count()), 0);
  std::queue<int> queue;
  vmap[0] = root_image;
  used[static_cast<std::size_t>(root_image)] = 1;
  queue.push(0);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    const int y = vmap[static_cast<std::size_t>(x)];
    if (a.incident(x).size() != b.incident(y).size()) return false;
    for (int e : a.incident(x)) {
      const int f = edge_with_color(b, y, a.edge(e).color);
      if (f < 0) return false;
      const int x2 = a.other_end(e, x);
      const int y2 = b.other_end(f, y);
      int& image = vmap[static_cast<std::size_t>(x2)];
      if (image < 0) {
        if (used[static_cast<std::size_t>(y2)]) return false;
        image = y2;
        used[static_cast<std::size_t>(y2)] = 1;
        queue.push(x2);
      } else if (image != y2) {
        return false;
      }
    }
  }
  return std::all_of(vmap.begin(), vmap.end(), [](int v) { return v >= 0; });
}

}  // namespace

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  require_valid(a);
  require_valid(b);
  if (a.n() != b.n() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return false;
  }
  // Colors at a vertex are distinct, so the image of one vertex forces the rest.
  for (int y = 0; y < b.vertex_count(); ++y) {
    if (extend_from(a, b, y)) return true;
  }
  return false;
}

}  // namespace skelex
