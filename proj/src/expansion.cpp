#include "skelex/expansion.hpp"

#include <stdexcept>

#include "skelex/classify.hpp"

namespace skelex {

namespace {

void require_good(const ColoredGraph& g) {
  require_valid(g);
  const GoodnessReport report = check_good(g);
  if (report.good) return;
  const GoodnessWitness w = *report.witness;
  throw NotGoodError("coloring is not good: across edge " + std::to_string(w.edge) + " from vertex " +
                         std::to_string(w.vertex) + ", no edge spans the plane of edges " +
                         std::to_string(w.neighbor) + " and " + std::to_string(w.edge),
                     w);
}

SphereCheck circle_check(const CellComplex& f) {
  if (f.dim() != 1) return {false, "complex has dimension " + std::to_string(f.dim()) + ", not 1"};
  try {
    f.check_structure();
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  std::vector<int> degree(f.size(0), 0);
  for (const Cell& e : f.cells[1]) {
    ++degree[static_cast<std::size_t>(e.faces[0])];
    ++degree[static_cast<std::size_t>(e.faces[1])];
  }
  for (std::size_t v = 0; v < degree.size(); ++v) {
    if (degree[v] != 2) {
      return {false, "0-cell " + std::to_string(v) + " has valence " + std::to_string(degree[v])};
    }
  }
  if (!is_connected(f)) return {false, "not connected"};
  return {true, "circle with " + std::to_string(f.size(0)) + " vertices"};
}

SphereCheck two_sphere_check(const CellComplex& f) {
  if (auto defect = closed_surface_defect(f)) return {false, *defect};
  const long chi = f.euler();
  if (chi != 2) return {false, "closed surface with Euler characteristic " + std::to_string(chi)};
  if (!is_orientable_surface(f)) {
    throw std::logic_error("closed surface with Euler characteristic 2 fails the orientation pass");
  }
  return {true, "2-sphere"};
}

}  // namespace

SphereCheck sphere_check(const CellComplex& f, int k) {
  if (k == 1) return circle_check(f);
  if (k == 2) return two_sphere_check(f);
  throw UnsupportedDimension("sphere recognition is implemented for k = 1, 2 only, got k = " +
                             std::to_string(k));
}

CellComplex nest_skeleton(const NestComplex& nests, int top) {
  if (top < 0 || top > nests.top_dim()) {
    throw PreconditionError("skeleton dimension " + std::to_string(top) + " outside 0.." +
                            std::to_string(nests.top_dim()));
  }
  CellComplex c;
  for (int k = 0; k <= top; ++k) {
    std::vector<Cell> level;
    const auto count = nests.nests(k).size();
    for (std::size_t i = 0; i < count; ++i) {
      Cell cell{static_cast<int>(i), {}};
      if (k > 0) cell.faces = nests.faces(k, static_cast<int>(i));
      level.push_back(std::move(cell));
    }
    c.cells.push_back(std::move(level));
  }
  return c;
}

CellComplex boundary_sphere_complex(const NestComplex& nests, const CellComplex& skeleton,
                                    int nest_dim, int nest_index) {
  if (nest_dim < 1 || nest_dim > nests.top_dim()) {
    throw PreconditionError("nest dimension " + std::to_string(nest_dim) + " outside 1.." +
                            std::to_string(nests.top_dim()));
  }
  if (skeleton.dim() != nest_dim - 1) {
    throw PreconditionError("boundary of a " + std::to_string(nest_dim) + "-nest needs the " +
                            std::to_string(nest_dim - 1) + "-skeleton, got dimension " +
                            std::to_string(skeleton.dim()));
  }
  const Nest& outer = nests.nest(nest_dim, nest_index);
  std::vector<std::vector<char>> keep;
  for (int k = 0; k <= skeleton.dim(); ++k) {
    std::vector<char> flags;
    for (const Cell& cell : skeleton.cells[static_cast<std::size_t>(k)]) {
      flags.push_back(nest_contains(outer, nests.nest(k, cell.nest)) ? 1 : 0);
    }
    keep.push_back(std::move(flags));
  }
  return subcomplex(skeleton, keep);
}

CellComplex expand2(const ColoredGraph& g) { return expand2(NestComplex(g)); }

CellComplex expand2(const NestComplex& nests) {
  const ColoredGraph& g = nests.graph();
  if (g.n() < 2) throw PreconditionError("2-skeletal expansion needs n >= 2");
  require_good(g);
  const CellComplex one = nest_skeleton(nests, 1);
  for (std::size_t i = 0; i < nests.nests(2).size(); ++i) {
    const SphereCheck check =
        sphere_check(boundary_sphere_complex(nests, one, 2, static_cast<int>(i)), 1);
    if (!check.sphere) {
      throw std::logic_error("2-nest " + std::to_string(i) + " of a good coloring is not a circle: " +
                             check.diagnosis);
    }
  }
  return nest_skeleton(nests, 2);
}

Criterion3d criterion_3d(const ColoredGraph& g) { return criterion_3d(NestComplex(g)); }

Criterion3d criterion_3d(const NestComplex& nests) {
  if (nests.top_dim() != 3) {
    throw PreconditionError("the count criterion applies to n = 3, got n = " +
                            std::to_string(nests.top_dim()));
  }
  Criterion3d c;
  c.vertices = static_cast<long>(nests.nests(0).size());
  c.two_nests = static_cast<long>(nests.nests(2).size());
  c.three_nests = static_cast<long>(nests.nests(3).size());
  c.holds = c.three_nests == c.two_nests - c.vertices;
  return c;
}

std::string to_string(Obstruction::Kind kind) {
  switch (kind) {
    case Obstruction::Kind::CountCriterion:
      return "count-criterion";
    case Obstruction::Kind::NonSphere:
      return "non-sphere";
    case Obstruction::Kind::UnsupportedDimension:
      return "unsupported-dimension";
  }
  return "unknown";
}

ExpansionOutcome full_expand(const ColoredGraph& g) { return full_expand(NestComplex(g)); }

ExpansionOutcome full_expand(const NestComplex& nests) {
  const ColoredGraph& g = nests.graph();
  require_good(g);
  ExpansionOutcome out;
  out.n = g.n();
  out.nest_counts = nests.counts();
  if (g.n() == 1) {
    out.complex = nest_skeleton(nests, 1);
    out.reached_dim = 1;
    return out;
  }
  out.complex = expand2(nests);
  out.reached_dim = 2;
  if (g.n() == 2) return out;
  if (g.n() >= 4) {
    out.obstruction = Obstruction{Obstruction::Kind::UnsupportedDimension, 3, -1,
                                  "n = " + std::to_string(g.n()) +
                                      " needs sphere recognition above dimension 2; stopped at "
                                      "the 2-skeleton"};
    return out;
  }

  const Criterion3d criterion = criterion_3d(nests);
  out.criterion = criterion;
  if (!criterion.holds) {
    out.obstruction = Obstruction{
        Obstruction::Kind::CountCriterion, 3, -1,
        "nu3 = " + std::to_string(criterion.three_nests) + " but nu2 - nu0 = " +
            std::to_string(criterion.two_nests - criterion.vertices) + "; (nu0, nu2, nu3) = (" +
            std::to_string(criterion.vertices) + ", " + std::to_string(criterion.two_nests) + ", " +
            std::to_string(criterion.three_nests) + ")"};
    return out;
  }
  for (std::size_t i = 0; i < nests.nests(3).size(); ++i) {
    const CellComplex f = boundary_sphere_complex(nests, out.complex, 3, static_cast<int>(i));
    const SphereCheck check = sphere_check(f, 2);
    if (!check.sphere) {
      out.obstruction =
          Obstruction{Obstruction::Kind::NonSphere, 3, static_cast<int>(i),
                      "F^2 of 3-nest " + std::to_string(i) + " (" +
                          nest_label(nests.nest(3, static_cast<int>(i))) + ") is not a 2-sphere: " +
                          check.diagnosis};
      return out;
    }
  }
  out.complex = nest_skeleton(nests, 3);
  out.reached_dim = 3;
  return out;
}

}  // namespace skelex
