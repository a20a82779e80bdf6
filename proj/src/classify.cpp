#include "skelex/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "skelex/error.hpp"

namespace skelex {

namespace {

struct Step {
  int edge;
  bool reversed;  // traversed from faces[1] to faces[0]
};

// Walks the boundary of 2-cell `face` as a cycle. Empty on failure.
std::vector<Step> boundary_walk(const CellComplex& c, int face) {
  const auto& edges = c.cells[2][static_cast<std::size_t>(face)].faces;
  if (edges.size() < 2) return {};
  std::map<int, std::vector<int>> at;
  for (int e : edges) {
    for (int v : c.cells[1][static_cast<std::size_t>(e)].faces) at[v].push_back(e);
  }
  for (const auto& [v, list] : at) {
    if (list.size() != 2) return {};
  }
  std::vector<Step> walk;
  int current = edges.front();
  int from = c.cells[1][static_cast<std::size_t>(current)].faces[0];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& ends = c.cells[1][static_cast<std::size_t>(current)].faces;
    const bool reversed = ends[0] != from;
    walk.push_back({current, reversed});
    const int to = reversed ? ends[0] : ends[1];
    const auto& pair = at[to];
    current = pair[0] == current ? pair[1] : pair[0];
    from = to;
  }
  if (current != edges.front()) return {};
  std::vector<int> seen;
  for (const auto& s : walk) seen.push_back(s.edge);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return {};
  return walk;
}

class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    int root = x;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      p ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    // Path compression keeps parities relative to the new parent.
    int acc = p;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      const int next = parent_[static_cast<std::size_t>(x)];
      const int step = parity_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = root;
      parity_[static_cast<std::size_t>(x)] = acc;
      acc ^= step;
      x = next;
    }
    return {root, p};
  }

  /// Imposes parity(a) ^ parity(b) == p; false on contradiction.
  bool unite(int a, int b, int p) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == p;
    parent_[static_cast<std::size_t>(ra)] = rb;
    parity_[static_cast<std::size_t>(ra)] = pa ^ pb ^ p;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::optional<std::string> closed_surface_defect(const CellComplex& c) {
  if (c.dim() != 2) return "complex has dimension " + std::to_string(c.dim()) + ", not 2";
  try {
    c.check_structure();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what());
  }
  const auto edge_cofaces = c.cofaces(1);
  for (std::size_t e = 0; e < edge_cofaces.size(); ++e) {
    if (edge_cofaces[e].size() != 2) {
      return "1-cell " + std::to_string(e) + " lies in " + std::to_string(edge_cofaces[e].size()) +
             " 2-cells";
    }
  }
  for (std::size_t f = 0; f < c.size(2); ++f) {
    if (boundary_walk(c, static_cast<int>(f)).empty()) {
      return "boundary of 2-cell " + std::to_string(f) + " is not a cycle";
    }
  }
  // Link of v: nodes are the 1-cells at v, each 2-cell at v joins its two
  // 1-cells at v.
  std::vector<std::vector<int>> edges_at(c.size(0));
  for (std::size_t e = 0; e < c.size(1); ++e) {
    for (int v : c.cells[1][e].faces) edges_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<std::pair<int, int>>> arcs(c.size(0));
  for (std::size_t f = 0; f < c.size(2); ++f) {
    std::map<int, std::vector<int>> at;
    for (int e : c.cells[2][f].faces) {
      for (int v : c.cells[1][static_cast<std::size_t>(e)].faces) at[v].push_back(e);
    }
    for (const auto& [v, list] : at) arcs[static_cast<std::size_t>(v)].emplace_back(list[0], list[1]);
  }
  for (std::size_t v = 0; v < c.size(0); ++v) {
    const auto& nodes = edges_at[v];
    if (nodes.empty()) return "0-cell " + std::to_string(v) + " is isolated";
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : arcs[v]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<int> seen{nodes.front()};
    std::vector<int> stack{nodes.front()};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (seen.insert(y).second) stack.push_back(y);
      }
    }
    bool circle = seen.size() == nodes.size();
    for (int node : nodes) circle = circle && adj[node].size() == 2;
    if (!circle) return "link of 0-cell " + std::to_string(v) + " is not a circle";
  }
  if (!is_connected(c)) return "complex is not connected";
  return std::nullopt;
}

bool is_orientable_surface(const CellComplex& c) {
  if (auto defect = closed_surface_defect(c)) {
    throw PreconditionError("orientation pass needs a closed surface: " + *defect);
  }
  // Direction bit of each (face, edge) incidence under the walk orientation.
  std::vector<std::map<int, int>> direction(c.size(2));
  for (std::size_t f = 0; f < c.size(2); ++f) {
    for (const Step& s : boundary_walk(c, static_cast<int>(f))) direction[f][s.edge] = s.reversed;
  }
  ParityUnionFind uf(c.size(2));
  const auto edge_cofaces = c.cofaces(1);
  for (std::size_t e = 0; e < edge_cofaces.size(); ++e) {
    const int f = edge_cofaces[e][0];
    const int g = edge_cofaces[e][1];
    const int df = direction[static_cast<std::size_t>(f)].at(static_cast<int>(e));
    const int dg = direction[static_cast<std::size_t>(g)].at(static_cast<int>(e));
    // Flips o_f, o_g must make the traversals opposite: df^of != dg^og.
    if (!uf.unite(f, g, df ^ dg ^ 1)) return false;
  }
  return true;
}

SurfaceReport classify_surface(const CellComplex& c) {
  if (auto defect = closed_surface_defect(c)) {
    throw PreconditionError("not a closed connected surface: " + *defect);
  }
  SurfaceReport report;
  report.orientable = is_orientable_surface(c);
  report.euler = c.euler();
  if (report.orientable) {
    if (report.euler > 2 || report.euler % 2 != 0) {
      throw std::logic_error("orientable closed surface with Euler characteristic " +
                             std::to_string(report.euler));
    }
    report.genus = static_cast<int>((2 - report.euler) / 2);
    report.name = report.genus == 0 ? "S2" : "gT2(" + std::to_string(report.genus) + ")";
  } else {
    if (report.euler > 1) {
      throw std::logic_error("non-orientable closed surface with Euler characteristic " +
                             std::to_string(report.euler));
    }
    report.genus = static_cast<int>(2 - report.euler);
    report.name = "kP2(" + std::to_string(report.genus) + ")";
  }
  return report;
}

HomologyReport homology_mod2(const CellComplex& c) {
  if (!c.boundary_squares_to_zero()) {
    throw std::logic_error("boundary maps do not compose to zero");
  }
  const int top = c.dim();
  std::vector<long> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int k = 1; k <= top; ++k) ranks[static_cast<std::size_t>(k)] = static_cast<long>(c.boundary(k).rank());
  HomologyReport report;
  for (int k = 0; k <= top; ++k) {
    report.betti.push_back(static_cast<long>(c.size(k)) - ranks[static_cast<std::size_t>(k)] -
                           ranks[static_cast<std::size_t>(k + 1)]);
  }
  report.euler = c.euler();
  long alternating = 0;
  for (int k = 0; k <= top; ++k) alternating += (k % 2 == 0 ? 1 : -1) * report.betti[static_cast<std::size_t>(k)];
  if (alternating != report.euler) throw std::logic_error("Betti numbers disagree with cell counts");
  return report;
}

LocalCheckReport manifold_local_check(const CellComplex& c) {
  LocalCheckReport report;
  const int n = c.dim();
  if (n < 1) {
    report.issues.push_back({n, -1, "complex has no cells of positive dimension"});
    return report;
  }
  const auto top_cofaces = c.cofaces(n - 1);
  for (std::size_t i = 0; i < top_cofaces.size(); ++i) {
    if (top_cofaces[i].size() != 2) {
      report.issues.push_back({n - 1, static_cast<int>(i),
                               std::to_string(n - 1) + "-cell " + std::to_string(i) + " lies in " +
                                   std::to_string(top_cofaces[i].size()) + " " + std::to_string(n) +
                                   "-cells"});
    }
  }

  const auto vertices = c.closure_vertices();
  const auto edges = c.closure_edges();
  std::vector<std::vector<int>> edges_at(c.size(0));
  for (std::size_t e = 0; e < c.size(1); ++e) {
    for (int v : c.cells[1][e].faces) edges_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
  // cells_at[k][v] = k-cells whose closure contains v.
  std::vector<std::vector<std::vector<int>>> cells_at(static_cast<std::size_t>(n + 1),
                                                      std::vector<std::vector<int>>(c.size(0)));
  for (int k = 2; k <= n; ++k) {
    for (std::size_t i = 0; i < c.size(k); ++i) {
      for (int v : vertices[static_cast<std::size_t>(k)][i]) {
        cells_at[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
      }
    }
  }

  for (std::size_t v = 0; v < c.size(0); ++v) {
    const auto& star = edges_at[v];
    const int degree = static_cast<int>(star.size());
    if (degree != n + 1) {
      report.issues.push_back({0, static_cast<int>(v),
                               "vertex " + std::to_string(v) + " has " + std::to_string(degree) +
                                   " edges, expected " + std::to_string(n + 1)});
      continue;
    }
    for (int k = 2; k <= n; ++k) {
      const auto& around = cells_at[static_cast<std::size_t>(k)][v];
      std::set<std::vector<int>> subsets;
      for (int cell : around) {
        const auto& closure = edges[static_cast<std::size_t>(k)][static_cast<std::size_t>(cell)];
        std::vector<int> subset;
        std::set_intersection(closure.begin(), closure.end(), star.begin(), star.end(),
                              std::back_inserter(subset));
        if (static_cast<int>(subset.size()) != k) {
          report.issues.push_back({k, cell,
                                   std::to_string(k) + "-cell " + std::to_string(cell) + " meets vertex " +
                                       std::to_string(v) + " in " + std::to_string(subset.size()) +
                                       " edges, expected " + std::to_string(k)});
        }
        subsets.insert(std::move(subset));
      }
      const long expected = binomial(n + 1, k);
      if (static_cast<long>(around.size()) != expected ||
          static_cast<long>(subsets.size()) != expected) {
        report.issues.push_back({0, static_cast<int>(v),
                                 "vertex " + std::to_string(v) + " lies in " +
                                     std::to_string(around.size()) + " " + std::to_string(k) +
                                     "-cells spanning " + std::to_string(subsets.size()) +
                                     " edge subsets, expected " + std::to_string(expected)});
      }
    }
  }
  return report;
}

}  // namespace skelex
