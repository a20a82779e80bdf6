#include "skelex/cell_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skelex {

std::vector<long> CellComplex::counts() const {
  std::vector<long> out;
  for (const auto& level : cells) out.push_back(static_cast<long>(level.size()));
  return out;
}

long CellComplex::euler() const {
  long chi = 0;
  for (int k = 0; k <= dim(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(size(k));
  return chi;
}

BitMatrix CellComplex::boundary(int k) const {
  if (k < 1 || k > dim()) return BitMatrix(size(k - 1), size(k));
  BitMatrix m(size(k - 1), size(k));
  const auto& level = cells[static_cast<std::size_t>(k)];
  for (std::size_t j = 0; j < level.size(); ++j) {
    for (int f : level[j].faces) m.set(static_cast<std::size_t>(f), j);
  }
  return m;
}

bool CellComplex::boundary_squares_to_zero() const {
  for (int k = 2; k <= dim(); ++k) {
    if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<int>> CellComplex::cofaces(int k) const {
  std::vector<std::vector<int>> out(size(k));
  if (k + 1 > dim()) return out;
  const auto& upper = cells[static_cast<std::size_t>(k + 1)];
  for (std::size_t j = 0; j < upper.size(); ++j) {
    for (int f : upper[j].faces) out[static_cast<std::size_t>(f)].push_back(static_cast<int>(j));
  }
  return out;
}

namespace {

std::vector<std::vector<std::vector<int>>> closure_of(const CellComplex& c, int base) {
  std::vector<std::vector<std::vector<int>>> out(c.cells.size());
  for (int k = 0; k <= c.dim(); ++k) {
    const auto& level = c.cells[static_cast<std::size_t>(k)];
    auto& sets = out[static_cast<std::size_t>(k)];
    sets.resize(level.size());
    if (k < base) continue;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (k == base) {
        sets[i] = {static_cast<int>(i)};
        continue;
      }
      std::vector<int> acc;
      for (int f : level[i].faces) {
        const auto& below = out[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(f)];
        acc.insert(acc.end(), below.begin(), below.end());
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      sets[i] = std::move(acc);
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> CellComplex::closure_vertices() const {
  return closure_of(*this, 0);
}

std::vector<std::vector<std::vector<int>>> CellComplex::closure_edges() const {
  return closure_of(*this, 1);
}

void CellComplex::check_structure() const {
  for (int k = 0; k <= dim(); ++k) {
    const auto& level = cells[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& faces = level[i].faces;
      const std::string where = "cell (" + std::to_string(k) + ", " + std::to_string(i) + ")";
      if (k == 0 && !faces.empty()) throw std::invalid_argument(where + " is a 0-cell with faces");
      if (!std::is_sorted(faces.begin(), faces.end()) ||
          std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
        throw std::invalid_argument(where + " has unsorted or repeated faces");
      }
      for (int f : faces) {
        if (f < 0 || static_cast<std::size_t>(f) >= size(k - 1)) {
          throw std::invalid_argument(where + " references missing face " + std::to_string(f));
        }
      }
      if (k == 1 && faces.size() != 2) {
        throw std::invalid_argument(where + " is a 1-cell without two distinct ends");
      }
      if (k >= 2 && faces.empty()) throw std::invalid_argument(where + " has an empty boundary");
    }
  }
}

CellComplex subcomplex(const CellComplex& c, const std::vector<std::vector<char>>& keep) {
  if (keep.size() != c.cells.size()) throw std::invalid_argument("subcomplex: selection shape");
  CellComplex out;
  std::vector<int> rename_below;
  for (int k = 0; k <= c.dim(); ++k) {
    const auto& level = c.cells[static_cast<std::size_t>(k)];
    const auto& flags = keep[static_cast<std::size_t>(k)];
    if (flags.size() != level.size()) throw std::invalid_argument("subcomplex: selection shape");
    std::vector<int> rename(level.size(), -1);
    std::vector<Cell> kept;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!flags[i]) continue;
      Cell cell{level[i].nest, {}};
      for (int f : level[i].faces) {
        const int g = rename_below[static_cast<std::size_t>(f)];
        if (g < 0) {
          throw std::invalid_argument("subcomplex: selection not closed under faces at cell (" +
                                      std::to_string(k) + ", " + std::to_string(i) + ")");
        }
        cell.faces.push_back(g);
      }
      std::sort(cell.faces.begin(), cell.faces.end());
      rename[i] = static_cast<int>(kept.size());
      kept.push_back(std::move(cell));
    }
    out.cells.push_back(std::move(kept));
    rename_below = std::move(rename);
  }
  while (!out.cells.empty() && out.cells.back().empty()) out.cells.pop_back();
  return out;
}

bool is_connected(const CellComplex& c) {
  if (c.size(0) == 0) return false;
  std::vector<std::vector<int>> adjacent(c.size(0));
  if (c.dim() >= 1) {
    for (const auto& e : c.cells[1]) {
      adjacent[static_cast<std::size_t>(e.faces[0])].push_back(e.faces[1]);
      adjacent[static_cast<std::size_t>(e.faces[1])].push_back(e.faces[0]);
    }
  }
  std::vector<char> seen(c.size(0), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
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
  return reached == c.size(0);
}

}  // namespace skelex
