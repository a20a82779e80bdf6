#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skelex/expansion.hpp"
#include "skelex/generators.hpp"
#include "skelex/nests.hpp"
#include "skelex/realize.hpp"

using namespace skelex;

namespace {

ColorVector cv(const char* s) { return ColorVector::parse(s); }

}  // namespace

TEST_CASE("isotropy subgroups are joint kernels of nest colors") {
  for (const auto& item : corpus::generated()) {
    const ColoredGraph& g = item.graph;
    const NestComplex nests(g);
    const auto records = isotropy_report(nests);
    long total = 0;
    for (int k = 0; k <= g.n(); ++k) total += static_cast<long>(nests.nests(k).size());
    CHECK(static_cast<long>(records.size()) == total);
    for (const IsotropyRecord& r : records) {
      CHECK(r.subgroup.dim() + r.nest_dim == g.rank());
      CHECK(r.corank == r.nest_dim);
      CHECK(r.copies == (1L << r.nest_dim));
      // Each basis vector of the subgroup kills every edge color of the nest.
      const Nest& nest = nests.nest(r.nest_dim, r.nest);
      for (const auto& t : r.subgroup.basis()) {
        for (int id : nest.edges) CHECK_FALSE(t.pair(g.edge(id).color));
      }
    }
  }
}

TEST_CASE("subgroup labels") {
  const ColoredGraph g = gen_cube(2);
  for (const IsotropyRecord& r : isotropy_report(g)) {
    if (r.nest_dim == 1 && g.edge(r.nest).color == cv("100")) CHECK(subgroup_label(r.subgroup) == "<t1, t2>");
    if (r.nest_dim == 2) CHECK(r.subgroup.dim() == 1);
  }
  CHECK(subgroup_label(Subspace(3)) == "<>");
}

TEST_CASE("fixed circles close up through two fixed points") {
  const ColoredGraph g = gen_orientable_surface(2);
  for (int e = 0; e < g.edge_count(); ++e) {
    const CircleReport c = fixed_circle_check(g, e);
    CHECK(c.closes);
    CHECK(c.fixed_points == 2);
    CHECK(c.arc_copies == 2);
    CHECK(c.p == g.edge(e).u);
    CHECK(c.q == g.edge(e).v);
    CHECK(c.subgroup.dim() == g.n());
    CHECK(c.subgroup.annihilator() == Subspace::span(g.rank(), {g.edge(e).color}));
  }
}

TEST_CASE("bounding report follows the parity of chi") {
  for (const auto& item : corpus::generated()) {
    const RealizabilitySummary s = realizability_summary(item.graph);
    CHECK(s.fixed_points == item.graph.vertex_count());
    CHECK(s.moment_graph_matches);
    if (!s.expansion_complete) {
      CHECK(s.bounding == Bounding::Unknown);
      continue;
    }
    const bool doubling = item.graph.n() == 2 && s.euler % 2 != 0;
    CHECK_MESSAGE((s.bounding == Bounding::DoublingRequired) == doubling, item.name);
    if (!doubling) CHECK(s.bounding == Bounding::Directly);
  }
  CHECK(to_string(Bounding::DoublingRequired) == "doubling required");
  CHECK(realizability_summary(gen_nonorientable_surface(1)).bounding == Bounding::DoublingRequired);
  CHECK(realizability_summary(gen_nonorientable_surface(2)).bounding == Bounding::Directly);
}

TEST_CASE("moment graph reproduces the input") {
  for (const auto& item : corpus::generated()) CHECK(moment_graph(item.graph) == item.graph);
  const RealizabilitySummary s = realizability_summary(gen_cube(2));
  REQUIRE(s.tangent_colors.size() == 8);
  for (const auto& colors : s.tangent_colors) {
    std::vector<std::uint64_t> bits;
    for (const auto& c : colors) bits.push_back(c.bits());
    CHECK(oracle::span_dim(bits) == 3);
  }
}

TEST_CASE("vertices are fixed points and top nests have rank 1 isotropy") {
  const ColoredGraph g = gen_cube(2);
  int circles = 0;
  for (const IsotropyRecord& r : isotropy_report(g)) {
    if (r.nest_dim == 0) {
      CHECK(r.subgroup.dim() == 3);
      CHECK(r.copies == 1);
    }
    if (r.nest_dim == 1) ++circles;
    if (r.nest_dim == 2) CHECK(r.copies == 4);
  }
  CHECK(circles == 12);
  CHECK(realizability_summary(gen_orientable_surface(1)).bounding == Bounding::Directly);
  CHECK(realizability_summary(gen_cube(3)).bounding == Bounding::Directly);
}
