#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corpus.hpp"
#include "skelex/census.hpp"
#include "skelex/error.hpp"
#include "skelex/generators.hpp"

using namespace skelex;

namespace {

std::string min_over_permutations(const std::vector<int>& colors, int count) {
  std::vector<int> perm(static_cast<std::size_t>(count));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int c : colors) s += static_cast<char>('0' + perm[static_cast<std::size_t>(c)]);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Proper edge colorings with `colors` colors by exhaustive assignment,
// reduced to their least relabeling.
std::set<std::string> brute_force_keys(const Multigraph& m, int colors) {
  std::set<std::string> keys;
  const std::size_t e = m.edges.size();
  std::vector<int> assign(e, 0);
  while (true) {
    bool proper = true;
    for (std::size_t a = 0; a < e && proper; ++a) {
      for (std::size_t b = a + 1; b < e && proper; ++b) {
        const auto& x = m.edges[a];
        const auto& y = m.edges[b];
        const bool touch = x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second;
        if (touch && assign[a] == assign[b]) proper = false;
      }
    }
    if (proper) keys.insert(min_over_permutations(assign, colors));
    std::size_t i = 0;
    while (i < e && ++assign[i] == colors) assign[i++] = 0;
    if (i == e) break;
  }
  return keys;
}

Multigraph petersen() {
  Multigraph m{10, {}};
  for (int i = 0; i < 5; ++i) {
    m.edges.emplace_back(i, (i + 1) % 5);
    m.edges.emplace_back(i, i + 5);
    m.edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return m;
}

}  // namespace

TEST_CASE("K4 has the projective plane coloring") {
  const auto entries = census(corpus::k4_graph(), 2);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].complete);
  REQUIRE(entries[0].surface.has_value());
  CHECK(entries[0].surface->name == "kP2(1)");
  CHECK(entries[0].euler == 1);
}

TEST_CASE("cube graph census") {
  const Multigraph cube = corpus::cube_graph();
  const auto entries = census(cube, 2);
  std::set<std::string> keys;
  for (const auto& e : entries) {
    keys.insert(e.key);
    CHECK(e.complete);
    CHECK(e.surface.has_value());
  }
  CHECK(keys == brute_force_keys(cube, 3));
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const CensusEntry& a, const CensusEntry& b) { return a.key < b.key; }));
  CHECK(std::any_of(entries.begin(), entries.end(), [](const CensusEntry& e) { return e.surface->name == "S2"; }));
  CHECK(census(corpus::k4_graph(), 2).size() == brute_force_keys(corpus::k4_graph(), 3).size());
}

TEST_CASE("a cubic graph without a 3-edge-coloring has an empty census") {
  CHECK(census(petersen(), 2).empty());
}

TEST_CASE("thread count does not change the result") {
  const Multigraph q = corpus::hypercube_graph();
  CensusOptions one;
  CensusOptions four;
  four.threads = 4;
  const auto a = census(q, 3, one);
  const auto b = census(q, 3, four);
  REQUIRE(a.size() == b.size());
  CHECK_FALSE(a.empty());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].key == b[i].key);
    CHECK(a[i].complete == b[i].complete);
    CHECK(a[i].euler == b[i].euler);
  }
}

TEST_CASE("canonical key is the least relabeling") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int count = 1 + static_cast<int>(rng() % 5);
    std::vector<int> colors(1 + rng() % 9);
    for (int& c : colors) c = static_cast<int>(rng() % static_cast<unsigned>(count));
    CHECK(canonical_key(colors) == min_over_permutations(colors, count));
  }
}

TEST_CASE("census input checks") {
  CHECK_THROWS_AS(census(underlying(gen_cube(4)), 4), ScaleGuardError);
  CHECK_THROWS_AS(census(corpus::k4_graph(), 3), PreconditionError);
  CHECK_THROWS_AS(census(Multigraph{4, {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}}}, 2), PreconditionError);
}

TEST_CASE("random colorings are G-colorings") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(validate(random_coloring(corpus::cube_graph(), 2, rng)).ok());
  CHECK_THROWS_AS(random_coloring(corpus::k4_graph(), 1, rng), PreconditionError);
}
