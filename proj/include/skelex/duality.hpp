#pragma once

// From a regular cell decomposition of a closed combinatorial n-manifold to
// a pure-colored (n+1)-valent graph: vertices are the full flags of the face
// poset, and a flag missing exactly dimension k is an edge colored x_k
// between the two full flags that complete it.

#include <string>
#include <string_view>
#include <vector>

#include "skelex/colored_graph.hpp"
#include "skelex/error.hpp"

#include <json.hpp>

namespace skelex {

/// Structurally malformed face poset (unknown ids, dims out of order, ...).
class InvalidPoset : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A well-formed poset that fails a manifold condition checked here.
class NotAManifold : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

struct PosetCell {
  int id = 0;
  int dim = 0;
  std::vector<int> faces;  // ids of proper faces
};

/// Face lists may be given as codimension-1 faces only; the constructor
/// closes them under taking faces. Every k-cell, k >= 1, needs a face of
/// dimension k-1.
class FacePoset {
 public:
  FacePoset(int top_dim, std::vector<PosetCell> cells);

  int top_dim() const noexcept { return top_dim_; }
  std::size_t size() const noexcept { return cells_.size(); }
  /// Cells in input order; `faces` holds the full closure, sorted by id.
  const std::vector<PosetCell>& cells() const noexcept { return cells_; }
  const PosetCell& by_id(int id) const;
  /// True iff `a` is a proper face of `b` (ids).
  bool below(int a, int b) const;
  /// Ids of the cells having `id` as a proper face, sorted.
  const std::vector<int>& above(int id) const;
  /// Every cell lies under some top_dim-cell.
  bool is_pure() const;

 private:
  int top_dim_;
  std::vector<PosetCell> cells_;
  std::vector<std::vector<int>> above_;
  std::vector<int> sorted_ids_;
  std::vector<int> index_;  // index_[i] = position of the cell with id sorted_ids_[i]
  std::size_t position(int id) const;
};

/// All nonempty faces of the given maximal simplices. Cell ids are positions
/// in the order (dim, sorted vertex tuple).
FacePoset poset_from_simplices(const std::vector<std::vector<int>>& simplices);

/// S^n with two cells in each dimension 0..n; cell i of each pair has id
/// 2*dim + i and every cell of lower dimension as a face.
FacePoset sphere_two_cell_poset(int n);

/// Chains sigma_0 < ... < sigma_(len-1) of cell ids, sorted lexicographically.
using Flag = std::vector<int>;
std::vector<Flag> chains(const FacePoset& p, int length);

struct FlagSet {
  std::vector<Flag> full;       // length n+1
  std::vector<Flag> one_short;  // length n
};
FlagSet flags(const FacePoset& p);

struct DualGraph {
  ColoredGraph graph;
  std::vector<Flag> vertex_flags;  // vertex i
  std::vector<Flag> edge_flags;    // edge i
};

/// Throws NotAManifold when a one-short flag does not complete to exactly
/// two full flags, when a vertex link of a surface is not a circle, or when
/// the poset is not pure or not connected.
DualGraph dualize(const FacePoset& p);
inline ColoredGraph dual_colored_graph(const FacePoset& p) { return dualize(p).graph; }

/// Number of chains of length n-m+1 for m = 0..n: the expected nest counts
/// of the dual graph.
std::vector<long> predicted_complex(const FacePoset& p);

struct KappaReport {
  bool ok = false;
  std::vector<long> predicted;
  std::vector<long> actual;
  std::string mismatch;
};

/// Matches every chain of length n-m+1 with the m-nest it predicts (edges of
/// the one-short flags through the chain) and checks that nest faces are
/// exactly the one-longer chains.
KappaReport check_kappa(const FacePoset& p);

/// Either {"top_dim": n, "cells": [[id, dim, [faces]], ...]} or
/// {"simplices": [[v, ...], ...]}. Throws ParseError or InvalidPoset.
FacePoset poset_from_json(const nlohmann::json& doc);
FacePoset parse_poset(std::string_view text);

}  // namespace skelex
