#pragma once

// Pure colorings of a small regular multigraph, up to permuting the colors,
// with the manifold each one expands to.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skelex/classify.hpp"
#include "skelex/colored_graph.hpp"
#include "skelex/error.hpp"

#include <json.hpp>

namespace skelex {

/// Census input larger than the desk-scale bound.
class ScaleGuardError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// The uncolored graph underneath a colored one.
Multigraph underlying(const ColoredGraph& g);
/// {"vertices": V, "edges": [[u, v], ...]}; a third color entry per edge and
/// an "n" field are accepted and ignored.
Multigraph multigraph_from_json(const nlohmann::json& doc);

struct CensusEntry {
  /// Color index of each edge after relabeling colors by first occurrence.
  std::string key;
  ColoredGraph coloring;
  bool complete = false;
  long euler = 0;
  std::optional<SurfaceReport> surface;
  std::optional<HomologyReport> homology;
  std::string obstruction;
};

struct CensusOptions {
  int threads = 1;
  int max_vertices = 16;
};

/// The least color-index sequence over all permutations of the colors.
std::string canonical_key(const std::vector<int>& edge_colors);

/// Pure colorings of `graph` with n+1 colors up to color permutation, sorted
/// by key. Throws PreconditionError unless the graph is connected, loopless
/// and (n+1)-regular; ScaleGuardError above options.max_vertices.
std::vector<CensusEntry> census(const Multigraph& graph, int n, const CensusOptions& options = {});

/// A uniformly seeded random G-coloring (not necessarily pure or good) of
/// `graph`, by randomized backtracking. Throws PreconditionError when the
/// graph admits none.
ColoredGraph random_coloring(const Multigraph& graph, int n, std::mt19937_64& rng);

}  // namespace skelex
