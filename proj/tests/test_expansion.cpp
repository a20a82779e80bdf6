#include <doctest.h>

#include "corpus.hpp"
#include "skelex/census.hpp"
#include "skelex/classify.hpp"
#include "skelex/error.hpp"
#include "skelex/expansion.hpp"
#include "skelex/generators.hpp"
#include "skelex/graph_io.hpp"

using namespace skelex;

namespace {

// Two disjoint triangles.
CellComplex two_circles() {
  CellComplex c;
  c.cells.resize(2);
  for (int i = 0; i < 6; ++i) c.cells[0].push_back({i, {}});
  for (int t = 0; t < 2; ++t) {
    const int b = 3 * t;
    c.cells[1].push_back({-1, {b, b + 1}});
    c.cells[1].push_back({-1, {b + 1, b + 2}});
    c.cells[1].push_back({-1, {b, b + 2}});
  }
  return c;
}

}  // namespace

TEST_CASE("2-skeletal expansion of surface graphs") {
  CHECK(expand2(gen_cube(2)).counts() == std::vector<long>{8, 12, 6});
  CHECK(expand2(gen_nonorientable_surface(1)).counts() == std::vector<long>{4, 6, 3});
  for (int g = 1; g <= 6; ++g) {
    const CellComplex c = expand2(gen_orientable_surface(g));
    CHECK(c.counts() == std::vector<long>{8L * g, 12L * g, 2L * g + 2});
    CHECK(c.euler() == 2 - 2 * g);
  }
  CHECK_THROWS_AS(expand2(gen_cube(1)), PreconditionError);
}

TEST_CASE("boundary of each 3-nest of the hypercube is a cube surface") {
  const NestComplex nests(gen_cube(3));
  const CellComplex two = nest_skeleton(nests, 2);
  for (std::size_t i = 0; i < nests.nests(3).size(); ++i) {
    const CellComplex f = boundary_sphere_complex(nests, two, 3, static_cast<int>(i));
    CHECK(f.counts() == std::vector<long>{8, 12, 6});
    CHECK(sphere_check(f, 2).sphere);
  }
  CHECK_THROWS_AS(boundary_sphere_complex(nests, two, 2, 0), PreconditionError);
}

TEST_CASE("3-nests of the prism over K4 split into spheres and projective planes") {
  const NestComplex nests(gen_prism(gen_nonorientable_surface(1)));
  const CellComplex two = nest_skeleton(nests, 2);
  int spheres = 0;
  int planes = 0;
  for (std::size_t i = 0; i < nests.nests(3).size(); ++i) {
    const CellComplex f = boundary_sphere_complex(nests, two, 3, static_cast<int>(i));
    const SurfaceReport s = classify_surface(f);
    if (nest_label(nests.nest(3, static_cast<int>(i))) == "x1·x2·x3") {
      CHECK(s.euler == 1);
      CHECK(s.name == "kP2(1)");
      CHECK_FALSE(sphere_check(f, 2).sphere);
      ++planes;
    } else {
      CHECK(s.euler == 2);
      CHECK(sphere_check(f, 2).sphere);
      ++spheres;
    }
  }
  CHECK(planes == 2);
  CHECK(spheres == 3);
}

TEST_CASE("sphere recognition") {
  const CellComplex one = nest_skeleton(NestComplex(gen_cube(1)), 1);
  CHECK(sphere_check(one, 1).sphere);
  const SphereCheck split = sphere_check(two_circles(), 1);
  CHECK_FALSE(split.sphere);
  CHECK(split.diagnosis == "not connected");
  CHECK_FALSE(sphere_check(expand2(gen_cube(2)), 1).sphere);
  CHECK_FALSE(sphere_check(expand2(gen_orientable_surface(1)), 2).sphere);
  CHECK_THROWS_AS(sphere_check(one, 3), UnsupportedDimension);
}

TEST_CASE("count criterion for n = 3") {
  const Criterion3d cube = criterion_3d(gen_cube(3));
  CHECK(cube.holds);
  CHECK(cube.vertices == 16);
  CHECK(cube.two_nests == 24);
  CHECK(cube.three_nests == 8);
  const Criterion3d prism = criterion_3d(gen_prism(gen_nonorientable_surface(1)));
  CHECK_FALSE(prism.holds);
  CHECK(prism.vertices == 8);
  CHECK(prism.two_nests == 12);
  CHECK(prism.three_nests == 5);
  CHECK_THROWS_AS(criterion_3d(gen_cube(2)), PreconditionError);
}

TEST_CASE("full expansion outcomes") {
  SUBCASE("circle") {
    const ExpansionOutcome o = full_expand(gen_cube(1));
    CHECK(o.complete());
    CHECK(o.complex.counts() == std::vector<long>{4, 4});
  }
  SUBCASE("hypercube") {
    const ExpansionOutcome o = full_expand(gen_cube(3));
    CHECK(o.complete());
    CHECK(o.reached_dim == 3);
    CHECK(o.complex.counts() == std::vector<long>{16, 32, 24, 8});
    CHECK(o.complex.euler() == 0);
  }
  SUBCASE("prism over the 2-sphere cube") {
    const ExpansionOutcome o = full_expand(gen_prism(gen_cube(2)));
    CHECK(o.complete());
    CHECK(o.complex.euler() == 0);
  }
  SUBCASE("criterion refusal comes first") {
    const ExpansionOutcome o = full_expand(gen_prism(gen_nonorientable_surface(1)));
    CHECK_FALSE(o.complete());
    REQUIRE(o.obstruction.has_value());
    CHECK(o.obstruction->kind == Obstruction::Kind::CountCriterion);
    CHECK(o.reached_dim == 2);
    CHECK(o.obstruction->reason.find("(8, 12, 5)") != std::string::npos);
  }
  SUBCASE("dimension 4 stops at the 2-skeleton") {
    const ExpansionOutcome o = full_expand(gen_cube(4));
    CHECK_FALSE(o.complete());
    CHECK(o.obstruction->kind == Obstruction::Kind::UnsupportedDimension);
    CHECK(o.reached_dim == 2);
    CHECK(o.nest_counts == std::vector<long>{32, 80, 80, 40, 10});
  }
  SUBCASE("non-good input is refused with a witness") {
    const ColoredGraph g = parse_graph(corpus::read_file(corpus::data_path("cube_not_good.json")));
    try {
      full_expand(g);
      FAIL("expected NotGoodError");
    } catch (const NotGoodError& e) {
      CHECK(e.witness().edge >= 0);
    }
  }
}

TEST_CASE("every completed expansion of a hypercube coloring passes the criterion") {
  int completed = 0;
  for (const CensusEntry& e : census(corpus::hypercube_graph(), 3)) {
    const ExpansionOutcome o = full_expand(e.coloring);
    CHECK(o.complete() == e.complete);
    if (!o.complete()) continue;
    ++completed;
    CHECK(o.criterion->holds);
    CHECK(o.complex.euler() == 0);
  }
  CHECK(completed > 0);
}
