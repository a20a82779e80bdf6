#include "skelex/nests.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

#include "skelex/error.hpp"

namespace skelex {

namespace {

// Seed subsets are tabulated per vertex, 2^(n+1) entries each.
constexpr int kMaxSeedRank = 16;

Nest grow(const ColoredGraph& g, int vertex, const Subspace& span) {
  std::vector<char> in_vertices(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> in_edges(static_cast<std::size_t>(g.edge_count()), 0);
  std::queue<int> queue;
  in_vertices[static_cast<std::size_t>(vertex)] = 1;
  queue.push(vertex);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int id : g.incident(x)) {
      if (in_edges[static_cast<std::size_t>(id)] || !span.contains(g.edge(id).color)) continue;
      in_edges[static_cast<std::size_t>(id)] = 1;
      const int y = g.other_end(id, x);
      if (!in_vertices[static_cast<std::size_t>(y)]) {
        in_vertices[static_cast<std::size_t>(y)] = 1;
        queue.push(y);
      }
    }
  }
  Nest nest;
  nest.color = Subspace(g.rank());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_vertices[static_cast<std::size_t>(v)]) nest.vertices.push_back(v);
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    if (in_edges[static_cast<std::size_t>(id)]) {
      nest.edges.push_back(id);
      nest.color.insert(g.edge(id).color);
    }
  }
  nest.dim = nest.color.dim();
  return nest;
}

bool canonical_less(const Nest& a, const Nest& b) {
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.vertices < b.vertices;
}

}  // namespace

Nest grow_nest(const ColoredGraph& g, int vertex, std::span<const int> seeds) {
  if (vertex < 0 || vertex >= g.vertex_count()) {
    throw PreconditionError("vertex " + std::to_string(vertex) + " out of range");
  }
  const auto at_vertex = g.incident(vertex);
  Subspace span(g.rank());
  for (int id : seeds) {
    if (std::find(at_vertex.begin(), at_vertex.end(), id) == at_vertex.end()) {
      throw PreconditionError("seed edge " + std::to_string(id) + " is not incident to vertex " +
                              std::to_string(vertex));
    }
    if (!span.insert(g.edge(id).color)) {
      throw PreconditionError("seed edge colors are linearly dependent");
    }
  }
  return grow(g, vertex, span);
}

Nest grow_nest(const ColoredGraph& g, std::span<const int> seeds) {
  if (seeds.empty()) throw PreconditionError("grow_nest without a vertex needs at least one seed");
  const Edge& first = g.edge(seeds.front());
  for (int candidate : {first.u, first.v}) {
    const bool shared = std::all_of(seeds.begin(), seeds.end(), [&](int id) {
      const Edge& e = g.edge(id);
      return e.u == candidate || e.v == candidate;
    });
    if (shared) return grow_nest(g, candidate, seeds);
  }
  throw PreconditionError("seed edges do not share a common vertex");
}

std::string subspace_label(const Subspace& s) {
  if (s.dim() == 0) return "1";
  std::string out;
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    const ColorVector& row = s.basis()[r];
    if (r > 0) out += "·";
    std::string term;
    for (int i = 0; i < row.size(); ++i) {
      if (!row[i]) continue;
      if (!term.empty()) term += "+";
      term += "x" + std::to_string(i);
    }
    out += row.weight() > 1 ? "(" + term + ")" : term;
  }
  return out;
}

bool nest_contains(const Nest& outer, const Nest& inner) {
  return std::includes(outer.vertices.begin(), outer.vertices.end(), inner.vertices.begin(),
                       inner.vertices.end()) &&
         std::includes(outer.edges.begin(), outer.edges.end(), inner.edges.begin(),
                       inner.edges.end());
}

// ---------------------------------------------------------------------------

NestComplex::NestComplex(const ColoredGraph& g) : graph_(g) {
  require_valid(graph_);
  const int rank = graph_.rank();
  if (rank > kMaxSeedRank) {
    throw PreconditionError("nest enumeration supports n + 1 <= " + std::to_string(kMaxSeedRank));
  }
  const int vertex_count = graph_.vertex_count();
  const unsigned subsets = 1U << rank;
  seed_map_.assign(static_cast<std::size_t>(vertex_count), std::vector<int>(subsets, -1));

  // Mask of the positions in incident(w) occupied by `edges`.
  auto mask_at = [&](int w, const std::vector<int>& edges) {
    unsigned mask = 0;
    const auto at = graph_.incident(w);
    for (std::size_t p = 0; p < at.size(); ++p) {
      if (std::binary_search(edges.begin(), edges.end(), at[p])) mask |= 1U << p;
    }
    return mask;
  };

  by_dim_.resize(static_cast<std::size_t>(graph_.n() + 1));
  for (int k = 0; k <= graph_.n(); ++k) {
    std::vector<Nest> found;
    for (int v = 0; v < vertex_count; ++v) {
      for (unsigned mask = 0; mask < subsets; ++mask) {
        if (std::popcount(mask) != k || seed_map_[static_cast<std::size_t>(v)][mask] >= 0) continue;
        std::vector<int> seeds;
        const auto at = graph_.incident(v);
        for (int p = 0; p < rank; ++p) {
          if (mask & (1U << p)) seeds.push_back(at[static_cast<std::size_t>(p)]);
        }
        Nest nest = grow_nest(graph_, v, seeds);
        const int id = static_cast<int>(found.size());
        // The seeds at every other vertex of the nest grow the same nest.
        for (int w : nest.vertices) {
          const unsigned m = mask_at(w, nest.edges);
          if (std::popcount(m) == k) seed_map_[static_cast<std::size_t>(w)][m] = id;
        }
        found.push_back(std::move(nest));
      }
    }
    std::vector<int> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return canonical_less(found[static_cast<std::size_t>(a)], found[static_cast<std::size_t>(b)]);
    });
    std::vector<int> rename(found.size());
    std::vector<Nest> sorted;
    sorted.reserve(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rename[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
      sorted.push_back(std::move(found[static_cast<std::size_t>(order[i])]));
    }
    for (auto& row : seed_map_) {
      for (unsigned mask = 0; mask < subsets; ++mask) {
        if (std::popcount(mask) == k && row[mask] >= 0) {
          row[mask] = rename[static_cast<std::size_t>(row[mask])];
        }
      }
    }
    by_dim_[static_cast<std::size_t>(k)] = std::move(sorted);
  }

  faces_.resize(static_cast<std::size_t>(graph_.n() + 1));
  for (int k = 1; k <= graph_.n(); ++k) {
    auto& faces = faces_[static_cast<std::size_t>(k)];
    for (const Nest& nest : nests(k)) {
      std::vector<int> list;
      for (int w : nest.vertices) {
        const unsigned m = mask_at(w, nest.edges);
        for (unsigned sub = m;; sub = (sub - 1) & m) {
          if (std::popcount(sub) == k - 1) list.push_back(lookup(w, sub));
          if (sub == 0) break;
        }
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      faces.push_back(std::move(list));
    }
  }
}

int NestComplex::lookup(int vertex, unsigned mask) const {
  const int id = seed_map_.at(static_cast<std::size_t>(vertex)).at(mask);
  if (id < 0) throw std::logic_error("seed subset without a nest");
  return id;
}

std::vector<long> NestComplex::counts() const {
  std::vector<long> out;
  for (const auto& list : by_dim_) out.push_back(static_cast<long>(list.size()));
  return out;
}

int NestComplex::nest_through(int vertex, std::span<const int> seeds) const {
  const auto at = graph_.incident(vertex);
  unsigned mask = 0;
  for (int id : seeds) {
    const auto it = std::find(at.begin(), at.end(), id);
    if (it == at.end()) {
      throw PreconditionError("edge " + std::to_string(id) + " is not incident to vertex " +
                              std::to_string(vertex));
    }
    mask |= 1U << (it - at.begin());
  }
  if (std::popcount(mask) > top_dim()) {
    throw PreconditionError("n + 1 seeds span the whole graph, which is not a nest");
  }
  return lookup(vertex, mask);
}

std::vector<Nest> enumerate_nests(const ColoredGraph& g, int k) {
  if (k < 0 || k > g.n()) {
    throw PreconditionError("nest dimension " + std::to_string(k) + " outside 0.." +
                            std::to_string(g.n()));
  }
  return NestComplex(g).nests(k);
}

std::vector<long> nest_counts(const ColoredGraph& g) { return NestComplex(g).counts(); }

RegularityReport regularity_check(const NestComplex& complex) {
  const ColoredGraph& g = complex.graph();
  RegularityReport report;
  for (int k = 1; k <= complex.top_dim(); ++k) {
    const auto& list = complex.nests(k);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Nest& nest = list[i];
      for (int w : nest.vertices) {
        int valence = 0;
        for (int id : g.incident(w)) {
          if (std::binary_search(nest.edges.begin(), nest.edges.end(), id)) ++valence;
        }
        if (valence != k) report.failures.push_back({k, static_cast<int>(i), w, valence});
      }
    }
  }
  return report;
}

RegularityReport regularity_check(const ColoredGraph& g) { return regularity_check(NestComplex(g)); }

}  // namespace skelex
