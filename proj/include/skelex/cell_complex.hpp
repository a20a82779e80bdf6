#pragma once

// Finite regular cell complexes with mod-2 boundary maps. In a regular
// complex the mod-2 incidence of a k-cell and a (k-1)-cell is 1 exactly when
// the latter is a face of the former, so faces alone determine every
// boundary matrix.

#include <vector>

#include "skelex/gf2.hpp"

namespace skelex {

struct Cell {
  /// Index of the defining nest within its dimension, -1 if none.
  int nest = -1;
  /// Sorted indices of the (k-1)-cells on the boundary.
  std::vector<int> faces;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellComplex {
  std::vector<std::vector<Cell>> cells;  // cells[k] = the k-cells

  /// Top dimension, -1 when empty.
  int dim() const noexcept { return static_cast<int>(cells.size()) - 1; }
  std::size_t size(int k) const {
    return k < 0 || k > dim() ? 0 : cells[static_cast<std::size_t>(k)].size();
  }
  std::vector<long> counts() const;
  long euler() const;

  /// Rows are (k-1)-cells, columns are k-cells. Empty outside 1..dim().
  BitMatrix boundary(int k) const;
  bool boundary_squares_to_zero() const;

  /// cofaces(k)[i] = indices of the (k+1)-cells having k-cell i as a face.
  std::vector<std::vector<int>> cofaces(int k) const;

  /// closure_vertices()[k][i] = sorted 0-cells in the closure of cell (k, i).
  std::vector<std::vector<std::vector<int>>> closure_vertices() const;
  /// Same for 1-cells; entries for k = 0 are empty.
  std::vector<std::vector<std::vector<int>>> closure_edges() const;

  /// Face indices in range and sorted, 1-cells with two distinct ends.
  void check_structure() const;

  friend bool operator==(const CellComplex&, const CellComplex&) = default;
};

/// The cells flagged in `keep`, reindexed. Throws std::invalid_argument
/// when the selection is not closed under faces.
CellComplex subcomplex(const CellComplex& c, const std::vector<std::vector<char>>& keep);

/// True iff the 1-skeleton is connected (and there is at least one 0-cell).
bool is_connected(const CellComplex& c);

}  // namespace skelex
