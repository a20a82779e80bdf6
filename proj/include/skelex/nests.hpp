#pragma once

// Colored nests: maximal connected subgraphs whose edge colors span a
// k-dimensional subspace. A k-nest is the connected component, through its
// seed vertex, of the edges whose colors lie in a k-dimensional subspace L.

#include <span>
#include <string>
#include <vector>

#include "skelex/colored_graph.hpp"
#include "skelex/gf2.hpp"

namespace skelex {

struct Nest {
  int dim = 0;
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted edge ids
  Subspace color;

  friend bool operator==(const Nest&, const Nest&) = default;
};

/// Grows the nest spanned by `seeds`, all incident to `vertex`: breadth-first
/// closure over edges with colors in Span(seed colors). With no seeds this is
/// the vertex itself; with n+1 seeds it is the whole graph.
/// Throws PreconditionError for seeds not at `vertex` or with dependent colors.
Nest grow_nest(const ColoredGraph& g, int vertex, std::span<const int> seeds);
/// As above; the seeds must share a common vertex. At least one seed.
Nest grow_nest(const ColoredGraph& g, std::span<const int> seeds);

/// Square-free monomial of the canonical basis of a color subspace, e.g.
/// "x0·x1" or "(x0+x2)·x3". The zero subspace renders as "1".
std::string subspace_label(const Subspace& s);
inline std::string nest_label(const Nest& nest) { return subspace_label(nest.color); }

/// True iff `inner` is a subgraph of `outer`.
bool nest_contains(const Nest& outer, const Nest& inner);

/// All k-nests for k = 0..n, enumerated from seed subsets at every vertex and
/// deduplicated by edge set. Nests of each dimension are sorted by edge ids
/// (vertex id for k = 0), so 0-nest i is vertex i and 1-nest i is edge i.
class NestComplex {
 public:
  explicit NestComplex(const ColoredGraph& g);

  const ColoredGraph& graph() const noexcept { return graph_; }
  int top_dim() const noexcept { return graph_.n(); }
  const std::vector<Nest>& nests(int k) const { return by_dim_.at(static_cast<std::size_t>(k)); }
  const Nest& nest(int k, int index) const { return nests(k).at(static_cast<std::size_t>(index)); }
  /// (nu_0, ..., nu_n).
  std::vector<long> counts() const;

  /// Index of the nest grown from `seeds`, a subset of the edges at `vertex`.
  int nest_through(int vertex, std::span<const int> seeds) const;
  /// Indices of the (k-1)-nests contained in nest (k, index); k >= 1.
  const std::vector<int>& faces(int k, int index) const {
    return faces_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(index));
  }

 private:
  int lookup(int vertex, unsigned mask) const;

  ColoredGraph graph_;
  std::vector<std::vector<Nest>> by_dim_;
  // seed_map_[v][mask] = index of the nest grown from that subset of
  // incident(v), among the nests of dimension popcount(mask).
  std::vector<std::vector<int>> seed_map_;
  std::vector<std::vector<std::vector<int>>> faces_;
};

/// Throws PreconditionError when k lies outside 0..n.
std::vector<Nest> enumerate_nests(const ColoredGraph& g, int k);
std::vector<long> nest_counts(const ColoredGraph& g);

struct RegularityFailure {
  int dim = 0;
  int nest = -1;
  int vertex = -1;
  int valence = 0;
};

struct RegularityReport {
  std::vector<RegularityFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Every k-nest must be k-valent at each of its vertices.
RegularityReport regularity_check(const NestComplex& nests);
RegularityReport regularity_check(const ColoredGraph& g);

}  // namespace skelex
