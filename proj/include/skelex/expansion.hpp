#pragma once

// Skeletal expansion: a k-cell for every k-nest, attached along the
// subcomplex of cells whose nests lie inside it, provided that subcomplex is
// a (k-1)-sphere.

#include <optional>
#include <string>
#include <vector>

#include "skelex/cell_complex.hpp"
#include "skelex/colored_graph.hpp"
#include "skelex/error.hpp"
#include "skelex/nests.hpp"

namespace skelex {

/// Thrown when expansion is asked of a coloring that is not good.
class NotGoodError : public PreconditionError {
 public:
  NotGoodError(const std::string& message, GoodnessWitness witness)
      : PreconditionError(message), witness_(witness) {}
  const GoodnessWitness& witness() const noexcept { return witness_; }

 private:
  GoodnessWitness witness_;
};

struct SphereCheck {
  bool sphere = false;
  std::string diagnosis;
};

/// k = 1: a connected 2-valent graph. k = 2: a connected closed surface with
/// Euler characteristic 2. Other k throw UnsupportedDimension.
SphereCheck sphere_check(const CellComplex& f, int k);

/// Cells for the nests of dimensions 0..top, faces by nest inclusion.
CellComplex nest_skeleton(const NestComplex& nests, int top);

/// F^(k-1): the cells of `skeleton` whose nests lie inside nest (k, index),
/// as a standalone complex. `skeleton` must be the (k-1)-skeleton.
CellComplex boundary_sphere_complex(const NestComplex& nests, const CellComplex& skeleton,
                                    int nest_dim, int nest_index);

/// The 2-skeleton. Requires a valid good graph with n >= 2.
CellComplex expand2(const ColoredGraph& g);
CellComplex expand2(const NestComplex& nests);

struct Criterion3d {
  bool holds = false;
  long vertices = 0;
  long two_nests = 0;
  long three_nests = 0;
};

/// nu_3 = nu_2 - nu_0. Requires n = 3.
Criterion3d criterion_3d(const ColoredGraph& g);
Criterion3d criterion_3d(const NestComplex& nests);

struct Obstruction {
  enum class Kind { CountCriterion, NonSphere, UnsupportedDimension };
  Kind kind = Kind::NonSphere;
  int nest_dim = -1;
  int nest = -1;
  std::string reason;
};

std::string to_string(Obstruction::Kind kind);

struct ExpansionOutcome {
  int n = 0;
  std::vector<long> nest_counts;
  CellComplex complex;
  int reached_dim = 0;
  std::optional<Obstruction> obstruction;
  std::optional<Criterion3d> criterion;

  bool complete() const noexcept { return !obstruction && reached_dim == n; }
};

/// Expands as far as the sphere checks allow. n = 1, 2 always complete; n = 3
/// tests the count criterion, then that every F^2 is a 2-sphere; n >= 4
/// stops at the 2-skeleton. Throws InvalidGraph or NotGoodError.
ExpansionOutcome full_expand(const ColoredGraph& g);
ExpansionOutcome full_expand(const NestComplex& nests);

}  // namespace skelex
