#pragma once

// Discrete data of the (Z2)^(n+1)-manifold realizing a colored graph as a
// moment graph: isotropy subgroups of nests, copy counts, fixed circles.
// Subgroups of G are written in the basis t_0..t_n dual to x_0..x_n.

#include <string>
#include <vector>

#include "skelex/colored_graph.hpp"
#include "skelex/gf2.hpp"
#include "skelex/nests.hpp"

namespace skelex {

struct IsotropyRecord {
  int nest_dim = 0;
  int nest = -1;
  Subspace subgroup;  // joint kernel of the nest's edge colors
  int corank = 0;
  long copies = 0;  // 2^dim
};

/// "<t1, t0+t2>"; the trivial subgroup is "<>".
std::string subgroup_label(const Subspace& s);

/// One record per nest, dimensions 0..n in nest order. Requires a good graph.
std::vector<IsotropyRecord> isotropy_report(const ColoredGraph& g);
std::vector<IsotropyRecord> isotropy_report(const NestComplex& nests);

struct CircleReport {
  int edge = -1;
  int p = -1;
  int q = -1;
  int arc_copies = 0;
  int fixed_points = 0;
  bool closes = false;
  Subspace subgroup;
};

/// Edge e = pq gives two arcs (cosets of ker alpha(e)) joined at the fixed
/// points p and q.
CircleReport fixed_circle_check(const ColoredGraph& g, int edge);

enum class Bounding { Directly, DoublingRequired, Unknown };
std::string to_string(Bounding b);

struct RealizabilitySummary {
  int n = 0;
  bool expansion_complete = false;
  long euler = 0;
  Bounding bounding = Bounding::Unknown;
  std::string reason;
  long fixed_points = 0;
  /// Colors of the edges at each fixed point, in incidence order.
  std::vector<std::vector<ColorVector>> tangent_colors;
  bool moment_graph_matches = false;
};

/// The labeled graph read back from the realization data: one vertex per
/// fixed point, one edge per fixed circle, labeled by the annihilator of its
/// isotropy subgroup.
ColoredGraph moment_graph(const ColoredGraph& g);

RealizabilitySummary realizability_summary(const ColoredGraph& g);

}  // namespace skelex
