#pragma once

// Finite regular (n+1)-valent multigraphs with edges colored in
// Hom(G, Z2) = GF(2)^(n+1), G = (Z2)^(n+1).

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skelex/gf2.hpp"

namespace skelex {

struct Edge {
  int u = 0;
  int v = 0;
  ColorVector color;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge ids are positions in the edge list. Incidence is by edge end, so
/// parallel edges stay distinguishable. The constructor checks only
/// structure (endpoint range, color length); `validate` checks the coloring.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int n, int vertex_count, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  /// Length of every color vector, n + 1.
  int rank() const noexcept { return n_ + 1; }
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  /// Edge ids at `v` in edge-list order.
  std::span<const int> incident(int v) const;
  int other_end(int edge, int v) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

enum class ViolationKind { Loop, ZeroColor, Valence, Dependent, Disconnected };

struct Violation {
  ViolationKind kind;
  int vertex = -1;
  int edge = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const ColoredGraph& g);
/// Throws InvalidGraph carrying the first violations when `g` is invalid.
void require_valid(const ColoredGraph& g);

/// True iff exactly n+1 distinct colors occur. Requires a valid graph.
bool is_pure(const ColoredGraph& g);

/// The family of bijections theta_e between the edges at the two ends of e.
class Connection {
 public:
  Connection() = default;

  /// theta_edge applied to `incident_edge`, an edge at `from_vertex`.
  int apply(int edge, int from_vertex, int incident_edge) const;
  /// Pairs (edge at e.u, edge at e.v) for edge `e`, ordered like incident(e.u).
  const std::vector<std::pair<int, int>>& pairs(int edge) const {
    return maps_.at(static_cast<std::size_t>(edge));
  }

 private:
  friend struct GoodnessBuilder;
  std::vector<int> tail_;
  std::vector<std::vector<std::pair<int, int>>> maps_;
};

/// Failure witness: no edge at the far end of `edge` (seen from `vertex`)
/// spans the same plane as `neighbor` and `edge`.
struct GoodnessWitness {
  int edge = -1;
  int neighbor = -1;
  int vertex = -1;
};

struct GoodnessReport {
  bool good = false;
  std::optional<Connection> connection;
  std::optional<GoodnessWitness> witness;
};

GoodnessReport check_good(const ColoredGraph& g);
inline bool is_good(const ColoredGraph& g) { return check_good(g).good; }

/// How the four freed ends are rejoined: Parallel joins u1-u2 and v1-v2,
/// Crossed joins u1-v2 and v1-u2.
enum class Crossing { Parallel, Crossed };

/// Cuts e1 in g1 and e2 in g2 (same color) and reconnects the ends. The
/// vertices of g2 are shifted by g1.vertex_count(). g1 and g2 must be
/// distinct objects.
ColoredGraph connected_sum(const ColoredGraph& g1, int e1, const ColoredGraph& g2, int e2,
                           Crossing crossing = Crossing::Parallel);

/// Endpoints ordered u < v, edges sorted by (u, v, color) with ties kept stable.
ColoredGraph canonicalize(const ColoredGraph& g);

/// Color-preserving isomorphism up to vertex relabeling. Both graphs valid.
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace skelex
