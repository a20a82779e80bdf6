#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skelex/cell_complex.hpp"

namespace skelex {

struct SurfaceReport {
  bool orientable = true;
  long euler = 0;
  /// g for an orientable surface, k for a connected sum of k projective planes.
  int genus = 0;
  /// "S2", "gT2(g)" or "kP2(k)".
  std::string name;
};

/// Why a 2-complex is not a closed surface, or nullopt if it is one: every
/// 1-cell in exactly two 2-cells, every 2-cell bounded by a cycle, every
/// vertex link a circle, connected.
std::optional<std::string> closed_surface_defect(const CellComplex& c);

/// Orientation pass: finds an orientation of every 2-cell such that the two
/// 2-cells on each 1-cell traverse it in opposite directions. Solved as a
/// parity system with union-find. Requires a closed surface complex.
bool is_orientable_surface(const CellComplex& c);

/// Throws PreconditionError unless `c` is a connected closed surface complex.
SurfaceReport classify_surface(const CellComplex& c);

struct HomologyReport {
  std::vector<long> betti;  // b_0..b_dim, mod 2
  long euler = 0;
};

/// Mod-2 cellular homology. Throws std::logic_error if the boundary maps do
/// not compose to zero.
HomologyReport homology_mod2(const CellComplex& c);

struct LocalIssue {
  int dim = 0;
  int cell = -1;
  std::string message;
};

struct LocalCheckReport {
  std::vector<LocalIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

/// Combinatorial neighborhood conditions of a closed n-manifold built from a
/// colored graph: every (n-1)-cell lies in exactly two n-cells, and around
/// each vertex the n+1 edges, C(n+1, k) k-cells, and every k-subset of the
/// edges lies in exactly one k-cell.
LocalCheckReport manifold_local_check(const CellComplex& c);

}  // namespace skelex
