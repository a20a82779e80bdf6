#include "skelex/generators.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "skelex/error.hpp"

namespace skelex {

namespace {

ColorVector x(int i) { return ColorVector::unit(3, i); }
Subspace plane(int i, int j) { return Subspace::span(3, {x(i), x(j)}); }

}  // namespace

ColoredGraph gen_cube(int n) {
  if (n < 1) throw PreconditionError("cube graph needs n >= 1");
  if (n > 20) throw PreconditionError("cube graph limited to n <= 20");
  const int count = 1 << (n + 1);
  std::vector<Edge> edges;
  for (int v = 0; v < count; ++v) {
    for (int i = 0; i <= n; ++i) {
      const int w = v ^ (1 << i);
      if (v < w) edges.push_back({v, w, ColorVector::unit(n + 1, i)});
    }
  }
  return ColoredGraph(n, count, std::move(edges));
}

CycleTable orientable_surface_table(int g) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  auto a = [](int i, int j) { return 8 * (i - 1) + (j - 1); };
  CycleTable table;
  CycleEntry beta{plane(0, 1), {}};
  CycleEntry xi{plane(0, 2), {}};
  for (int i = 1; i <= g; ++i) {
    for (int j : {1, 2, 5, 6}) beta.cycle.push_back(a(i, j));
    for (int j : {1, 8, 3, 2, 5, 4, 7, 6}) xi.cycle.push_back(a(i, j));
  }
  table.push_back(std::move(beta));
  for (int i = 1; i <= g; ++i) table.push_back({plane(0, 1), {a(i, 3), a(i, 4), a(i, 7), a(i, 8)}});
  table.push_back(std::move(xi));
  for (int i = 1; i <= g; ++i) {
    CycleEntry eta{plane(1, 2), {}};
    for (int j = 1; j <= 8; ++j) eta.cycle.push_back(a(i, j));
    table.push_back(std::move(eta));
  }
  return table;
}

CycleTable nonorientable_surface_table(int k) {
  if (k < 1) throw PreconditionError("number of projective planes must be at least 1");
  auto a = [](int i, int j) { return 4 * (i - 1) + (j - 1); };
  CycleTable table;
  CycleEntry beta{plane(0, 1), {}};
  CycleEntry xi{plane(0, 2), {}};
  for (int i = 1; i <= k; ++i) {
    for (int j : {1, 4, 2, 3}) beta.cycle.push_back(a(i, j));
    for (int j : {1, 2, 4, 3}) xi.cycle.push_back(a(i, j));
  }
  table.push_back(std::move(beta));
  table.push_back(std::move(xi));
  for (int i = 1; i <= k; ++i) table.push_back({plane(1, 2), {a(i, 1), a(i, 2), a(i, 3), a(i, 4)}});
  return table;
}

ColoredGraph reconstruct_from_cycles(int n, int vertex_count, const CycleTable& table) {
  // unordered pair -> indices of the cycles it occurs in
  std::map<std::pair<int, int>, std::vector<std::size_t>> seen;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const auto& cycle = table[c].cycle;
    if (table[c].color.dim() != 2) throw std::logic_error("cycle colors must be planes");
    if (cycle.size() < 2) throw std::logic_error("cycle with fewer than two vertices");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int u = cycle[i];
      const int v = cycle[(i + 1) % cycle.size()];
      seen[{std::min(u, v), std::max(u, v)}].push_back(c);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [pair, cycles] : seen) {
    const std::string where =
        "pair (" + std::to_string(pair.first) + ", " + std::to_string(pair.second) + ")";
    if (cycles.size() != 2) {
      throw std::logic_error(where + " occurs " + std::to_string(cycles.size()) +
                             " times in the cycle table");
    }
    const Subspace line = intersect(table[cycles[0]].color, table[cycles[1]].color);
    if (line.dim() != 1) throw std::logic_error(where + ": cycle colors do not meet in a line");
    edges.push_back({pair.first, pair.second, line.basis().front()});
  }
  ColoredGraph g(n, vertex_count, std::move(edges));
  const ValidationReport report = validate(g);
  if (!report.ok()) {
    throw std::logic_error("cycle table gives an invalid graph: " + report.violations.front().message);
  }
  return g;
}

ColoredGraph gen_orientable_surface(int g) {
  return reconstruct_from_cycles(2, 8 * g, orientable_surface_table(g));
}

ColoredGraph gen_nonorientable_surface(int k) {
  return reconstruct_from_cycles(2, 4 * k, nonorientable_surface_table(k));
}

ColoredGraph gen_prism(const ColoredGraph& base) {
  require_valid(base);
  const int n = base.n() + 1;
  const int count = base.vertex_count();
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    for (const Edge& e : base.edges()) {
      edges.push_back({e.u + copy * count, e.v + copy * count, ColorVector(n + 1, e.color.bits() << 1)});
    }
  }
  for (int v = 0; v < count; ++v) edges.push_back({v, v + count, ColorVector::unit(n + 1, 0)});
  return ColoredGraph(n, 2 * count, std::move(edges));
}

}  // namespace skelex
