#include "skelex/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "skelex/expansion.hpp"

namespace skelex {

namespace {

void require_regular(const Multigraph& graph, int n) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (graph.vertex_count < 1) throw PreconditionError("graph has no vertices");
  std::vector<int> degree(static_cast<std::size_t>(graph.vertex_count), 0);
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(graph.vertex_count));
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto [u, v] = graph.edges[i];
    if (u < 0 || v < 0 || u >= graph.vertex_count || v >= graph.vertex_count) {
      throw PreconditionError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (u == v) throw PreconditionError("edge " + std::to_string(i) + " is a loop");
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
    adjacent[static_cast<std::size_t>(u)].push_back(v);
    adjacent[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (degree[static_cast<std::size_t>(v)] != n + 1) {
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(degree[static_cast<std::size_t>(v)]) + ", expected " +
                              std::to_string(n + 1));
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(graph.vertex_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacent[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != graph.vertex_count) throw PreconditionError("graph is not connected");
}

char digit(int c) { return static_cast<char>(c < 10 ? '0' + c : 'a' + (c - 10)); }

CensusEntry classify_entry(const Multigraph& graph, int n, const std::vector<int>& colors) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    edges.push_back({graph.edges[i].first, graph.edges[i].second, ColorVector::unit(n + 1, colors[i])});
  }
  CensusEntry entry;
  entry.key = canonical_key(colors);
  entry.coloring = ColoredGraph(n, graph.vertex_count, std::move(edges));
  const ExpansionOutcome outcome = full_expand(entry.coloring);
  entry.complete = outcome.complete();
  entry.euler = outcome.complex.euler();
  if (entry.complete) {
    entry.homology = homology_mod2(outcome.complex);
    if (n == 2) entry.surface = classify_surface(outcome.complex);
  } else {
    entry.obstruction = outcome.obstruction->reason;
  }
  return entry;
}

}  // namespace

Multigraph underlying(const ColoredGraph& g) {
  Multigraph m{g.vertex_count(), {}};
  for (const Edge& e : g.edges()) m.edges.emplace_back(e.u, e.v);
  return m;
}

Multigraph multigraph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("graph: expected a JSON object");
  for (const char* key : {"vertices", "edges"}) {
    if (!doc.contains(key)) throw ParseError(std::string("graph: missing field '") + key + "'");
  }
  if (!doc["vertices"].is_number_integer()) throw ParseError("vertices: expected an integer");
  Multigraph m;
  const auto count = doc["vertices"].get<long long>();
  if (count < 1 || count > (1 << 24)) throw ParseError("vertices: out of range");
  m.vertex_count = static_cast<int>(count);
  const auto& list = doc["edges"];
  if (!list.is_array()) throw ParseError("edges: expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& item = list[i];
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      throw ParseError(where + ": expected [u, v] or [u, v, color]");
    }
    int ends[2];
    for (int j = 0; j < 2; ++j) {
      const auto& value = item[static_cast<std::size_t>(j)];
      if (!value.is_number_integer()) throw ParseError(where + "[" + std::to_string(j) + "]: expected an integer");
      const auto end = value.get<long long>();
      if (end < 0 || end >= count) {
        throw ParseError(where + ": endpoint " + std::to_string(end) + " outside 0.." +
                         std::to_string(count - 1));
      }
      ends[j] = static_cast<int>(end);
    }
    m.edges.emplace_back(ends[0], ends[1]);
  }
  return m;
}

std::string canonical_key(const std::vector<int>& edge_colors) {
  std::vector<int> rename;
  std::string key;
  for (int c : edge_colors) {
    if (c < 0) throw PreconditionError("negative color index");
    if (static_cast<std::size_t>(c) >= rename.size()) rename.resize(static_cast<std::size_t>(c) + 1, -1);
    int& r = rename[static_cast<std::size_t>(c)];
    if (r < 0) r = static_cast<int>(std::count_if(rename.begin(), rename.end(), [](int x) { return x >= 0; }));
    key += digit(r);
  }
  return key;
}

std::vector<CensusEntry> census(const Multigraph& graph, int n, const CensusOptions& options) {
  if (graph.vertex_count > options.max_vertices) {
    throw ScaleGuardError("census is limited to " + std::to_string(options.max_vertices) +
                          " vertices, got " + std::to_string(graph.vertex_count));
  }
  require_regular(graph, n);
  if (n + 1 > 16) throw ScaleGuardError("census is limited to n + 1 <= 16 colors");

  // Colors in first-occurrence order: each edge uses at most one new color,
  // which enumerates one coloring per class directly.
  std::vector<std::vector<int>> found;
  std::vector<unsigned> used(static_cast<std::size_t>(graph.vertex_count), 0);
  std::vector<int> colors(graph.edges.size(), -1);
  auto search = [&](auto&& self, std::size_t i, int max_used) -> void {
    if (i == graph.edges.size()) {
      found.push_back(colors);
      return;
    }
    const auto [u, v] = graph.edges[i];
    const int limit = std::min(n, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      const unsigned bit = 1U << c;
      if ((used[static_cast<std::size_t>(u)] | used[static_cast<std::size_t>(v)]) & bit) continue;
      used[static_cast<std::size_t>(u)] |= bit;
      used[static_cast<std::size_t>(v)] |= bit;
      colors[i] = c;
      self(self, i + 1, std::max(max_used, c));
      used[static_cast<std::size_t>(u)] &= ~bit;
      used[static_cast<std::size_t>(v)] &= ~bit;
    }
    colors[i] = -1;
  };
  search(search, 0, -1);

  std::vector<CensusEntry> entries(found.size());
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(found.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < found.size(); i = next++) {
      entries[i] = classify_entry(graph, n, found[i]);
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  std::sort(entries.begin(), entries.end(),
            [](const CensusEntry& a, const CensusEntry& b) { return a.key < b.key; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const CensusEntry& a, const CensusEntry& b) { return a.key == b.key; }),
                entries.end());
  return entries;
}

ColoredGraph random_coloring(const Multigraph& graph, int n, std::mt19937_64& rng) {
  require_regular(graph, n);
  const std::uint64_t nonzero = (std::uint64_t{1} << (n + 1)) - 1;
  std::vector<Subspace> at(static_cast<std::size_t>(graph.vertex_count), Subspace(n + 1));
  std::vector<ColorVector> colors(graph.edges.size());
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == graph.edges.size()) return true;
    const auto [u, v] = graph.edges[i];
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t b = 1; b <= nonzero; ++b) candidates.push_back(b);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::uint64_t b : candidates) {
      const ColorVector c(n + 1, b);
      auto& su = at[static_cast<std::size_t>(u)];
      auto& sv = at[static_cast<std::size_t>(v)];
      if (su.contains(c) || sv.contains(c)) continue;
      const Subspace keep_u = su;
      const Subspace keep_v = sv;
      su.insert(c);
      sv.insert(c);
      colors[i] = c;
      if (self(self, i + 1)) return true;
      su = keep_u;
      sv = keep_v;
    }
    return false;
  };
  if (!search(search, 0)) throw PreconditionError("graph admits no G-coloring");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    edges.push_back({graph.edges[i].first, graph.edges[i].second, colors[i]});
  }
  return ColoredGraph(n, graph.vertex_count, std::move(edges));
}

}  // namespace skelex
