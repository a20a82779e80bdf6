#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skelex/error.hpp"
#include "skelex/generators.hpp"
#include "skelex/graph_io.hpp"
#include "skelex/nests.hpp"

using namespace skelex;

namespace {

ColorVector cv(const char* s) { return ColorVector::parse(s); }

bool has_kind(const ValidationReport& r, ViolationKind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("cube graph with axis colors is a valid pure coloring") {
  const ColoredGraph g = gen_cube(2);
  CHECK(validate(g).ok());
  CHECK(is_pure(g));
  for (const Edge& e : g.edges()) {
    const int axis = __builtin_ctz(static_cast<unsigned>(e.u ^ e.v));
    CHECK(e.color == ColorVector::unit(3, axis));
  }
}

TEST_CASE("incident colors form a basis at every vertex") {
  for (const auto& item : corpus::generated()) {
    const ColoredGraph& g = item.graph;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<std::uint64_t> colors;
      for (int id : g.incident(v)) colors.push_back(g.edge(id).color.bits());
      CHECK(oracle::span_dim(colors) == g.rank());
    }
  }
}

TEST_CASE("validation reports each kind of violation") {
  SUBCASE("dependent colors") {
    const ColoredGraph g(2, 2, {{0, 1, cv("100")}, {0, 1, cv("100")}, {0, 1, cv("010")}});
    const auto r = validate(g);
    CHECK_FALSE(r.ok());
    CHECK(has_kind(r, ViolationKind::Dependent));
  }
  SUBCASE("loop") {
    const ColoredGraph g(1, 1, {{0, 0, cv("10")}});
    CHECK(has_kind(validate(g), ViolationKind::Loop));
  }
  SUBCASE("zero color") {
    const ColoredGraph g(1, 2, {{0, 1, cv("00")}, {0, 1, cv("01")}});
    CHECK(has_kind(validate(g), ViolationKind::ZeroColor));
  }
  SUBCASE("valence") {
    const ColoredGraph g(2, 2, {{0, 1, cv("100")}, {0, 1, cv("010")}});
    CHECK(has_kind(validate(g), ViolationKind::Valence));
  }
  SUBCASE("disconnected") {
    const ColoredGraph g(1, 4, {{0, 1, cv("10")}, {0, 1, cv("01")}, {2, 3, cv("10")}, {2, 3, cv("01")}});
    CHECK(has_kind(validate(g), ViolationKind::Disconnected));
    CHECK_THROWS_AS(require_valid(g), InvalidGraph);
  }
  CHECK_THROWS_AS(ColoredGraph(2, 2, {{0, 5, cv("100")}}), std::out_of_range);
  CHECK_THROWS_AS(ColoredGraph(2, 2, {{0, 1, cv("1000")}}), DimensionMismatch);
}

TEST_CASE("purity") {
  CHECK(is_pure(gen_nonorientable_surface(1)));
  // K4 with x0+x1 in place of x1: still three colors, so pure.
  const ColoredGraph mixed(2, 4,
                           {{0, 1, cv("001")},
                            {0, 2, cv("100")},
                            {0, 3, cv("110")},
                            {1, 2, cv("110")},
                            {1, 3, cv("100")},
                            {2, 3, cv("001")}});
  REQUIRE(validate(mixed).ok());
  CHECK(is_pure(mixed));
  const ColoredGraph four = parse_graph(corpus::read_file(corpus::data_path("cube_not_good.json")));
  REQUIRE(validate(four).ok());
  CHECK_FALSE(is_pure(four));
}

TEST_CASE("pure colorings are good and the connection respects congruence") {
  for (const auto& item : corpus::generated()) {
    const ColoredGraph& g = item.graph;
    const GoodnessReport r = check_good(g);
    CHECK_MESSAGE(r.good, item.name);
    CHECK(oracle::goodness_failures(g) == 0);
    REQUIRE(r.connection.has_value());
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& pairs = r.connection->pairs(e);
      CHECK(pairs.size() == static_cast<std::size_t>(g.rank()));
      std::vector<int> images;
      for (const auto& [from, to] : pairs) {
        CHECK(congruent_mod(g.edge(from).color, g.edge(to).color, g.edge(e).color));
        if (from == e) CHECK(to == e);
        images.push_back(to);
      }
      std::sort(images.begin(), images.end());
      CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
  }
}

TEST_CASE("the projective plane coloring of K4 is good with an explicit connection") {
  const ColoredGraph g = gen_nonorientable_surface(1);
  const GoodnessReport r = check_good(g);
  REQUIRE(r.good);
  // Edge 0 = (0, 1) colored x2; at vertex 0 edges 1 (x0) and 2 (x1) map to
  // the edges at vertex 1 congruent mod x2: 4 (x0) and 3 (x1).
  CHECK(r.connection->apply(0, 0, 1) == 4);
  CHECK(r.connection->apply(0, 0, 2) == 3);
  CHECK(r.connection->apply(0, 0, 0) == 0);
  CHECK(r.connection->apply(0, 1, 4) == 1);
}

TEST_CASE("a valid coloring of the cube graph that is not good") {
  const ColoredGraph g = parse_graph(corpus::read_file(corpus::data_path("cube_not_good.json")));
  CHECK(validate(g).ok());
  CHECK_FALSE(is_pure(g));
  CHECK(oracle::goodness_failures(g) > 0);
  const GoodnessReport r = check_good(g);
  CHECK_FALSE(r.good);
  REQUIRE(r.witness.has_value());
  // The witness is a failing triple of the definition.
  const auto& w = *r.witness;
  const int far = g.other_end(w.edge, w.vertex);
  const auto plane = oracle::span_elements({g.edge(w.neighbor).color.bits(), g.edge(w.edge).color.bits()});
  int matches = 0;
  for (int e2 : g.incident(far)) {
    if (e2 != w.edge &&
        oracle::span_elements({g.edge(w.edge).color.bits(), g.edge(e2).color.bits()}) == plane) {
      ++matches;
    }
  }
  CHECK(matches != 1);
}

TEST_CASE("connected sums") {
  const ColoredGraph t1 = gen_orientable_surface(1);
  const ColoredGraph t2 = gen_orientable_surface(1);
  auto first_x0 = [](const ColoredGraph& g) {
    for (int id = 0; id < g.edge_count(); ++id) {
      if (g.edge(id).color == ColorVector::unit(3, 0)) return id;
    }
    return -1;
  };
  const int e1 = first_x0(t1);
  REQUIRE(e1 >= 0);
  const ColoredGraph sum = connected_sum(t1, e1, t2, first_x0(t2));
  CHECK(sum.vertex_count() == 16);
  CHECK(sum.edge_count() == 24);
  CHECK(validate(sum).ok());
  CHECK(is_pure(sum));
  CHECK(is_good(sum));

  const ColoredGraph p1 = gen_nonorientable_surface(1);
  const ColoredGraph p2 = gen_nonorientable_surface(1);
  const ColoredGraph psum = connected_sum(p1, 0, p2, 0, Crossing::Crossed);
  CHECK(psum.vertex_count() == 8);
  CHECK(psum.edge_count() == 12);
  CHECK(nest_counts(psum)[2] == 4);

  CHECK_THROWS_AS(connected_sum(t1, 0, t1, 1), PreconditionError);
  int other = 0;
  while (t2.edge(other).color == t1.edge(e1).color) ++other;
  CHECK_THROWS_AS(connected_sum(t1, e1, t2, other), PreconditionError);
  CHECK_THROWS_AS(connected_sum(t1, 0, gen_cube(3), 0), PreconditionError);
}

TEST_CASE("graph files round-trip through canonical order") {
  const ColoredGraph g = gen_orientable_surface(2);
  CHECK(parse_graph(serialize_graph(g)) == canonicalize(g));
  const ColoredGraph k4 = parse_graph(corpus::read_file(corpus::data_path("k4_projective_plane.json")));
  CHECK(k4 == gen_nonorientable_surface(1));
  // Shuffled edge order and reversed endpoints canonicalize to the same graph.
  std::vector<Edge> edges = k4.edges();
  std::reverse(edges.begin(), edges.end());
  for (auto& e : edges) std::swap(e.u, e.v);
  const ColoredGraph shuffled(2, 4, edges);
  CHECK(canonicalize(shuffled) == canonicalize(k4));
  CHECK(parse_graph(serialize_graph(shuffled)) == shuffled);
  CHECK(isomorphic(shuffled, k4));
}

TEST_CASE("graph parse errors carry positions and field paths") {
  try {
    parse_graph("{\"n\": 2, \"vertices\": 2,\n \"edges\": [[0, 1, \"0110\"]]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("edges[0][2]") != std::string::npos);
    CHECK(std::string(e.what()).find("length 4") != std::string::npos);
  }
  try {
    parse_graph("{\"n\": 2,\n  \"vertices\" 2}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"vertices\": 2, \"edges\": []}"), InvalidGraph);
  CHECK_NOTHROW(parse_graph("{\"n\": 2, \"vertices\": 2, \"edges\": []}", false));
}

TEST_CASE("isomorphism up to relabeling") {
  const ColoredGraph a = gen_cube(2);
  std::vector<Edge> edges;
  for (const Edge& e : a.edges()) edges.push_back({7 - e.u, 7 - e.v, e.color});
  CHECK(isomorphic(a, ColoredGraph(2, 8, edges)));
  CHECK_FALSE(isomorphic(gen_orientable_surface(1), gen_nonorientable_surface(2)));
}
