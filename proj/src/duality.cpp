#include "skelex/duality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "skelex/graph_io.hpp"
#include "skelex/nests.hpp"

namespace skelex {

namespace {

std::string render(const Flag& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::to_string(f[i]);
  return out + "]";
}

bool contains_all(const Flag& outer, const Flag& inner) {
  return std::all_of(inner.begin(), inner.end(), [&](int id) {
    return std::find(outer.begin(), outer.end(), id) != outer.end();
  });
}

Flag sorted_ids(Flag f) {
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

FacePoset::FacePoset(int top_dim, std::vector<PosetCell> cells)
    : top_dim_(top_dim), cells_(std::move(cells)) {
  if (top_dim_ < 0) throw InvalidPoset("top_dim must be non-negative");
  if (cells_.empty()) throw InvalidPoset("poset has no cells");
  for (const auto& c : cells_) sorted_ids_.push_back(c.id);
  std::sort(sorted_ids_.begin(), sorted_ids_.end());
  if (auto dup = std::adjacent_find(sorted_ids_.begin(), sorted_ids_.end()); dup != sorted_ids_.end()) {
    throw InvalidPoset("cell id " + std::to_string(*dup) + " appears twice");
  }
  index_.resize(cells_.size());
  for (std::size_t pos = 0; pos < cells_.size(); ++pos) {
    const auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), cells_[pos].id);
    index_[static_cast<std::size_t>(it - sorted_ids_.begin())] = static_cast<int>(pos);
  }

  for (const auto& c : cells_) {
    const std::string where = "cell " + std::to_string(c.id);
    if (c.dim < 0 || c.dim > top_dim_) {
      throw InvalidPoset(where + " has dimension " + std::to_string(c.dim) + " outside 0.." +
                         std::to_string(top_dim_));
    }
    if (c.dim == 0 && !c.faces.empty()) throw InvalidPoset(where + " has dimension 0 but lists faces");
    bool codim_one = c.dim == 0;
    for (int f : c.faces) {
      const auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), f);
      if (it == sorted_ids_.end() || *it != f) {
        throw InvalidPoset(where + " lists unknown face " + std::to_string(f));
      }
      const int fd = by_id(f).dim;
      if (fd >= c.dim) {
        throw InvalidPoset(where + " of dimension " + std::to_string(c.dim) + " lists face " +
                           std::to_string(f) + " of dimension " + std::to_string(fd));
      }
      codim_one = codim_one || fd == c.dim - 1;
    }
    if (!codim_one) {
      throw InvalidPoset(where + " of dimension " + std::to_string(c.dim) +
                         " has no face of dimension " + std::to_string(c.dim - 1));
    }
  }

  // Close face lists under taking faces, lowest dimension first.
  std::vector<std::size_t> order(cells_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cells_[a].dim < cells_[b].dim; });
  for (std::size_t pos : order) {
    std::vector<int> closed = cells_[pos].faces;
    for (int f : cells_[pos].faces) {
      const auto& below = cells_[position(f)].faces;
      closed.insert(closed.end(), below.begin(), below.end());
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    cells_[pos].faces = std::move(closed);
  }

  above_.resize(cells_.size());
  for (const auto& c : cells_) {
    for (int f : c.faces) above_[position(f)].push_back(c.id);
  }
  for (auto& list : above_) std::sort(list.begin(), list.end());
}

std::size_t FacePoset::position(int id) const {
  const auto it = std::lower_bound(sorted_ids_.begin(), sorted_ids_.end(), id);
  if (it == sorted_ids_.end() || *it != id) {
    throw std::out_of_range("no cell with id " + std::to_string(id));
  }
  return static_cast<std::size_t>(index_[static_cast<std::size_t>(it - sorted_ids_.begin())]);
}

const PosetCell& FacePoset::by_id(int id) const { return cells_[position(id)]; }

bool FacePoset::below(int a, int b) const {
  const auto& faces = by_id(b).faces;
  return std::binary_search(faces.begin(), faces.end(), a);
}

const std::vector<int>& FacePoset::above(int id) const { return above_[position(id)]; }

bool FacePoset::is_pure() const {
  for (const auto& c : cells_) {
    if (c.dim == top_dim_) continue;
    const auto& up = above(c.id);
    const bool covered =
        std::any_of(up.begin(), up.end(), [&](int b) { return by_id(b).dim == top_dim_; });
    if (!covered) return false;
  }
  return true;
}

FacePoset poset_from_simplices(const std::vector<std::vector<int>>& simplices) {
  if (simplices.empty()) throw InvalidPoset("simplices: empty list");
  std::set<std::vector<int>> all;
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    std::vector<int> verts = simplices[s];
    std::sort(verts.begin(), verts.end());
    const std::string where = "simplices[" + std::to_string(s) + "]";
    if (verts.empty()) throw InvalidPoset(where + " is empty");
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
      throw InvalidPoset(where + " repeats a vertex");
    }
    if (verts.size() > 16) throw InvalidPoset(where + " has more than 16 vertices");
    const unsigned count = 1U << verts.size();
    for (unsigned mask = 1; mask < count; ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask & (1U << i)) face.push_back(verts[i]);
      }
      all.insert(std::move(face));
    }
  }
  std::vector<std::vector<int>> ordered(all.begin(), all.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::map<std::vector<int>, int> id_of;
  for (std::size_t i = 0; i < ordered.size(); ++i) id_of[ordered[i]] = static_cast<int>(i);

  std::vector<PosetCell> cells;
  int top = 0;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& verts = ordered[i];
    PosetCell cell{static_cast<int>(i), static_cast<int>(verts.size()) - 1, {}};
    top = std::max(top, cell.dim);
    const unsigned count = 1U << verts.size();
    for (unsigned mask = 1; mask + 1 < count; ++mask) {
      std::vector<int> face;
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (mask & (1U << j)) face.push_back(verts[j]);
      }
      cell.faces.push_back(id_of.at(face));
    }
    std::sort(cell.faces.begin(), cell.faces.end());
    cells.push_back(std::move(cell));
  }
  return FacePoset(top, std::move(cells));
}

FacePoset sphere_two_cell_poset(int n) {
  if (n < 0) throw PreconditionError("sphere dimension must be non-negative");
  std::vector<PosetCell> cells;
  for (int d = 0; d <= n; ++d) {
    for (int i = 0; i < 2; ++i) {
      PosetCell cell{2 * d + i, d, {}};
      for (int f = 0; f < 2 * d; ++f) cell.faces.push_back(f);
      cells.push_back(std::move(cell));
    }
  }
  return FacePoset(n, std::move(cells));
}

std::vector<Flag> chains(const FacePoset& p, int length) {
  std::vector<Flag> out;
  if (length < 1) return out;
  Flag current;
  auto extend = [&](auto&& self, int id) -> void {
    current.push_back(id);
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
    } else {
      for (int up : p.above(id)) self(self, up);
    }
    current.pop_back();
  };
  for (const auto& c : p.cells()) extend(extend, c.id);
  std::sort(out.begin(), out.end());
  return out;
}

FlagSet flags(const FacePoset& p) {
  return {chains(p, p.top_dim() + 1), chains(p, p.top_dim())};
}

DualGraph dualize(const FacePoset& p) {
  const int n = p.top_dim();
  if (n < 1) throw NotAManifold("duality needs top_dim >= 1");
  for (const auto& c : p.cells()) {
    if (c.dim == n) continue;
    const auto& up = p.above(c.id);
    if (std::none_of(up.begin(), up.end(), [&](int b) { return p.by_id(b).dim == n; })) {
      throw NotAManifold("cell " + std::to_string(c.id) + " does not lie in any " +
                         std::to_string(n) + "-cell");
    }
  }
  FlagSet fs = flags(p);
  if (fs.full.empty()) throw NotAManifold("poset has no full flags");
  std::map<Flag, int> vertex_of;
  for (std::size_t i = 0; i < fs.full.size(); ++i) vertex_of[fs.full[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const Flag& f : fs.one_short) {
    int missing = n;
    for (int k = 0; k < n; ++k) {
      if (p.by_id(f[static_cast<std::size_t>(k)]).dim != k) {
        missing = k;
        break;
      }
    }
    std::vector<int> completions;
    const auto fits = [&](int id) {
      if (p.by_id(id).dim != missing) return false;
      if (missing > 0 && !p.below(f[static_cast<std::size_t>(missing - 1)], id)) return false;
      return missing == n || p.below(id, f[static_cast<std::size_t>(missing)]);
    };
    if (missing < n) {
      for (int id : p.by_id(f[static_cast<std::size_t>(missing)]).faces) {
        if (fits(id)) completions.push_back(id);
      }
    } else {
      for (int id : p.above(f.back())) {
        if (fits(id)) completions.push_back(id);
      }
    }
    if (completions.size() != 2) {
      throw NotAManifold("flag " + render(f) + " completes to " + std::to_string(completions.size()) +
                         " full flags, expected 2");
    }
    int ends[2];
    for (int j = 0; j < 2; ++j) {
      Flag full = f;
      full.insert(full.begin() + missing, completions[static_cast<std::size_t>(j)]);
      ends[j] = vertex_of.at(full);
    }
    edges.push_back({std::min(ends[0], ends[1]), std::max(ends[0], ends[1]),
                     ColorVector::unit(n + 1, missing)});
  }

  if (n == 2) {
    // The link of a 0-cell: its 1- and 2-cells, joined by incidence.
    for (const auto& c : p.cells()) {
      if (c.dim != 0) continue;
      const auto& up = p.above(c.id);
      if (up.empty()) continue;
      std::set<int> seen{up.front()};
      std::vector<int> stack{up.front()};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : up) {
          if ((p.below(x, y) || p.below(y, x)) && seen.insert(y).second) stack.push_back(y);
        }
      }
      if (seen.size() != up.size()) {
        throw NotAManifold("link of 0-cell " + std::to_string(c.id) + " is not a circle");
      }
    }
  }

  DualGraph out{ColoredGraph(n, static_cast<int>(fs.full.size()), std::move(edges)),
                std::move(fs.full), std::move(fs.one_short)};
  const ValidationReport report = validate(out.graph);
  if (!report.ok()) {
    const bool disconnected = std::any_of(report.violations.begin(), report.violations.end(),
                                          [](const Violation& v) {
                                            return v.kind == ViolationKind::Disconnected;
                                          });
    if (disconnected) throw NotAManifold("poset is not connected");
    throw std::logic_error("dual graph is invalid: " + report.violations.front().message);
  }
  return out;
}

std::vector<long> predicted_complex(const FacePoset& p) {
  std::vector<long> out;
  for (int m = 0; m <= p.top_dim(); ++m) {
    out.push_back(static_cast<long>(chains(p, p.top_dim() - m + 1).size()));
  }
  return out;
}

KappaReport check_kappa(const FacePoset& p) {
  const int n = p.top_dim();
  const DualGraph dual = dualize(p);
  const NestComplex nests(dual.graph);
  KappaReport report;
  report.predicted = predicted_complex(p);
  report.actual = nests.counts();
  if (report.predicted != report.actual) {
    report.mismatch = "nest counts differ from chain counts";
    return report;
  }

  // chain (as a sorted id set) -> index of the nest it predicts
  std::map<Flag, int> nest_of;
  for (int m = 0; m <= n; ++m) {
    std::map<std::vector<int>, int> by_key;
    for (std::size_t i = 0; i < nests.nests(m).size(); ++i) {
      const Nest& nest = nests.nest(m, static_cast<int>(i));
      by_key[m == 0 ? nest.vertices : nest.edges] = static_cast<int>(i);
    }
    for (const Flag& c : chains(p, n - m + 1)) {
      std::vector<int> key;
      if (m == 0) {
        key.push_back(static_cast<int>(std::lower_bound(dual.vertex_flags.begin(),
                                                        dual.vertex_flags.end(), c) -
                                       dual.vertex_flags.begin()));
      } else {
        for (std::size_t e = 0; e < dual.edge_flags.size(); ++e) {
          if (contains_all(dual.edge_flags[e], c)) key.push_back(static_cast<int>(e));
        }
      }
      const auto it = by_key.find(key);
      if (it == by_key.end()) {
        report.mismatch = "chain " + render(c) + " has no matching " + std::to_string(m) + "-nest";
        return report;
      }
      Subspace expected(n + 1);
      std::vector<char> present(static_cast<std::size_t>(n + 1), 0);
      for (int id : c) present[static_cast<std::size_t>(p.by_id(id).dim)] = 1;
      for (int k = 0; k <= n; ++k) {
        if (!present[static_cast<std::size_t>(k)]) expected.insert(ColorVector::unit(n + 1, k));
      }
      if (nests.nest(m, it->second).color != expected) {
        report.mismatch = "nest of chain " + render(c) + " has the wrong color";
        return report;
      }
      nest_of[sorted_ids(c)] = it->second;
    }
  }

  for (int m = 1; m <= n; ++m) {
    const auto count = nests.nests(m).size();
    std::vector<std::vector<int>> expected(count);
    for (const Flag& d : chains(p, n - m + 2)) {
      const int lower = nest_of.at(sorted_ids(d));
      for (std::size_t drop = 0; drop < d.size(); ++drop) {
        Flag c = d;
        c.erase(c.begin() + static_cast<long>(drop));
        expected[static_cast<std::size_t>(nest_of.at(sorted_ids(c)))].push_back(lower);
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      auto& list = expected[i];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (list != nests.faces(m, static_cast<int>(i))) {
        report.mismatch = "faces of " + std::to_string(m) + "-nest " + std::to_string(i) +
                          " differ from the longer chains";
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

namespace {

int read_int(const nlohmann::json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ParseError(field + ": expected an integer");
  const auto v = value.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) throw ParseError(field + ": integer out of range");
  return static_cast<int>(v);
}

}  // namespace

FacePoset poset_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("poset: expected a JSON object");
  if (doc.contains("simplices")) {
    const auto& list = doc["simplices"];
    if (!list.is_array()) throw ParseError("simplices: expected an array");
    std::vector<std::vector<int>> simplices;
    for (std::size_t s = 0; s < list.size(); ++s) {
      const std::string where = "simplices[" + std::to_string(s) + "]";
      if (!list[s].is_array()) throw ParseError(where + ": expected an array of vertex ids");
      std::vector<int> verts;
      for (std::size_t i = 0; i < list[s].size(); ++i) {
        verts.push_back(read_int(list[s][i], where + "[" + std::to_string(i) + "]"));
      }
      simplices.push_back(std::move(verts));
    }
    return poset_from_simplices(simplices);
  }
  for (const char* key : {"top_dim", "cells"}) {
    if (!doc.contains(key)) throw ParseError(std::string("poset: missing field '") + key + "'");
  }
  const int top = read_int(doc["top_dim"], "top_dim");
  const auto& list = doc["cells"];
  if (!list.is_array()) throw ParseError("cells: expected an array");
  std::vector<PosetCell> cells;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "cells[" + std::to_string(i) + "]";
    const auto& item = list[i];
    if (!item.is_array() || item.size() != 3 || !item[2].is_array()) {
      throw ParseError(where + ": expected [id, dim, [faces]]");
    }
    PosetCell cell{read_int(item[0], where + "[0]"), read_int(item[1], where + "[1]"), {}};
    for (std::size_t j = 0; j < item[2].size(); ++j) {
      cell.faces.push_back(read_int(item[2][j], where + "[2][" + std::to_string(j) + "]"));
    }
    cells.push_back(std::move(cell));
  }
  return FacePoset(top, std::move(cells));
}

FacePoset parse_poset(std::string_view text) { return poset_from_json(parse_json(text)); }

}  // namespace skelex
