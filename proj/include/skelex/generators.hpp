#pragma once

// Concrete colored graphs: cube 1-skeletons and the surface families built
// from their tables of bi-colored circles.

#include <vector>

#include "skelex/colored_graph.hpp"
#include "skelex/gf2.hpp"

namespace skelex {

/// 1-skeleton of the (n+1)-cube: vertex bits, edge v -- v ^ (1 << i) colored x_i.
ColoredGraph gen_cube(int n);

struct CycleEntry {
  Subspace color;           // dimension 2
  std::vector<int> cycle;   // closed vertex sequence, first vertex not repeated
};
using CycleTable = std::vector<CycleEntry>;

/// Circles beta, gamma_i, xi, eta_i on vertices A_ij = 8(i-1) + (j-1).
CycleTable orientable_surface_table(int g);
/// Circles beta, xi, eta_i on vertices A_ij = 4(i-1) + (j-1).
CycleTable nonorientable_surface_table(int k);

/// Edges are the consecutive vertex pairs of the cycles; each unordered pair
/// must occur exactly twice, and its color is the line shared by the two
/// cycle colors. Edges are ordered by (u, v). Throws std::logic_error when
/// the table is inconsistent.
ColoredGraph reconstruct_from_cycles(int n, int vertex_count, const CycleTable& table);

ColoredGraph gen_orientable_surface(int g);
ColoredGraph gen_nonorientable_surface(int k);

/// Base x K2 with n one higher: the new rungs get color x_0 and old colors
/// move from x_i to x_(i+1). Copy 0 keeps vertex ids, copy 1 is shifted.
ColoredGraph gen_prism(const ColoredGraph& base);

}  // namespace skelex
