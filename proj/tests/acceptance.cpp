// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "skelex/classify.hpp"
#include "skelex/duality.hpp"
#include "skelex/expansion.hpp"
#include "skelex/generators.hpp"
#include "skelex/graph_io.hpp"
#include "skelex/nests.hpp"
#include "skelex/realize.hpp"

using namespace skelex;

namespace {

// Collects the first failed expectation of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << ")";
  return s.str();
}

std::vector<corpus::Item> full_corpus() {
  std::vector<corpus::Item> items = corpus::generated();
  int i = 0;
  for (ColoredGraph& g : corpus::random_surface_colorings(200)) {
    items.push_back({"random " + std::to_string(i++), std::move(g)});
  }
  return items;
}

std::string criterion1(Check& c) {
  for (int g = 1; g <= 6; ++g) {
    const ColoredGraph graph = gen_orientable_surface(g);
    const std::string tag = "gT2(" + std::to_string(g) + ")";
    c.expect(validate(graph).ok() && is_pure(graph) && is_good(graph), tag + " invariants");
    const std::vector<long> nu = nest_counts(graph);
    c.expect(nu[0] == 8 * g && nu[1] == 12 * g && nu[2] == 2 * g + 2, tag + " counts " + show(nu));
    const SurfaceReport s = classify_surface(expand2(graph));
    c.expect(s.orientable && s.euler == 2 - 2 * g, tag + " classified as " + s.name);
  }
  for (int k = 1; k <= 6; ++k) {
    const ColoredGraph graph = gen_nonorientable_surface(k);
    const std::string tag = "kP2(" + std::to_string(k) + ")";
    c.expect(validate(graph).ok() && is_pure(graph) && is_good(graph), tag + " invariants");
    const std::vector<long> nu = nest_counts(graph);
    c.expect(nu[0] == 4 * k && nu[1] == 6 * k && nu[2] == k + 2, tag + " counts " + show(nu));
    const SurfaceReport s = classify_surface(expand2(graph));
    c.expect(!s.orientable && s.euler == 2 - k, tag + " classified as " + s.name);
  }
  return "g, k = 1..6 counts (8g, 12g, 2g+2), (4k, 6k, k+2); chi 2-2g, 2-k";
}

std::string criterion2(Check& c) {
  const SurfaceReport cube = classify_surface(expand2(gen_cube(2)));
  c.expect(cube.name == "S2", "cube graph is " + cube.name);
  const ColoredGraph k1 = gen_nonorientable_surface(1);
  const ColoredGraph k4 = parse_graph(corpus::read_file(corpus::data_path("k4_projective_plane.json")));
  c.expect(k1.vertex_count() == 4 && k1.edge_count() == 6 && isomorphic(k1, k4), "k = 1 graph is not K4");
  const SurfaceReport p2 = classify_surface(expand2(k1));
  c.expect(p2.name == "kP2(1)", "K4 is " + p2.name);
  return "cube -> " + cube.name + ", K4 -> " + p2.name;
}

std::string criterion3(Check& c) {
  const ColoredGraph hyper = gen_cube(3);
  const Criterion3d crit = criterion_3d(hyper);
  c.expect(crit.holds && crit.three_nests == 8 && crit.two_nests == 24 && crit.vertices == 16,
           "hypercube criterion counts");
  const ExpansionOutcome o = full_expand(hyper);
  c.expect(o.complete(), "hypercube expansion incomplete");
  std::vector<long> betti;
  if (o.complete()) betti = homology_mod2(o.complex).betti;
  c.expect(betti == std::vector<long>{1, 0, 0, 1}, "hypercube betti " + show(betti));

  const ColoredGraph prism = parse_graph(corpus::read_file(corpus::data_path("prism_k4_counterexample.json")));
  c.expect(validate(prism).ok() && is_good(prism), "counterexample is not a good 4-valent graph");
  const ExpansionOutcome refused = full_expand(prism);
  const bool criterion_refusal =
      !refused.complete() && refused.obstruction->kind == Obstruction::Kind::CountCriterion;
  c.expect(criterion_refusal, "counterexample not refused by the count criterion");
  std::vector<long> counts;
  if (refused.criterion) counts = {refused.criterion->vertices, refused.criterion->two_nests, refused.criterion->three_nests};
  c.expect(counts == std::vector<long>{8, 12, 5}, "counterexample counts " + show(counts));
  return "hypercube 8 = 24 - 16, betti " + show(betti) + "; refused with (nu0, nu2, nu3) = " + show(counts);
}

std::string criterion4(Check& c) {
  for (int n = 1; n <= 3; ++n) {
    c.expect(isomorphic(dual_colored_graph(sphere_two_cell_poset(n)), gen_cube(n)),
             "dual of S" + std::to_string(n) + " is not the cube graph");
  }
  const FacePoset tet = parse_poset(corpus::read_file(corpus::data_path("tetrahedron_boundary_poset.json")));
  const SurfaceReport s2 = classify_surface(expand2(dual_colored_graph(tet)));
  c.expect(s2.name == "S2", "tetrahedron dual is " + s2.name);
  const FacePoset torus = parse_poset(corpus::read_file(corpus::data_path("torus7_simplices.json")));
  const SurfaceReport t2 = classify_surface(expand2(dual_colored_graph(torus)));
  c.expect(t2.orientable && t2.genus == 1, "torus dual is " + t2.name);

  std::vector<FacePoset> inputs{tet, torus};
  for (int n = 1; n <= 3; ++n) inputs.push_back(sphere_two_cell_poset(n));
  for (const FacePoset& p : inputs) {
    const KappaReport k = check_kappa(p);
    c.expect(k.ok && k.predicted == k.actual, "kappa mismatch: " + k.mismatch);
  }
  return "S1..S3 -> cube graphs, tetrahedron -> " + s2.name + ", torus -> " + t2.name + ", kappa on " +
         std::to_string(inputs.size()) + " inputs";
}

std::string criterion5(Check& c) {
  int checked = 0;
  int skipped = 0;
  for (const auto& item : full_corpus()) {
    if (!is_good(item.graph)) {
      ++skipped;
      continue;
    }
    const ExpansionOutcome o = full_expand(item.graph);
    c.expect(o.complex.boundary_squares_to_zero(), item.name + ": boundary squared is nonzero");
    if (!o.complete()) continue;
    ++checked;
    long alternating = 0;
    for (std::size_t k = 0; k < o.nest_counts.size(); ++k) {
      alternating += (k % 2 == 0 ? 1 : -1) * o.nest_counts[k];
    }
    c.expect(alternating == o.complex.euler(), item.name + ": alternating nest sum");
    const HomologyReport h = homology_mod2(o.complex);
    c.expect(h.betti.front() == 1, item.name + ": b0 = " + std::to_string(h.betti.front()));
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
      c.expect(h.betti[i] == h.betti[h.betti.size() - 1 - i], item.name + ": Poincare duality " + show(h.betti));
    }
    for (const auto& up : o.complex.cofaces(item.graph.n() - 1)) {
      c.expect(up.size() == 2, item.name + ": (n-1)-cell in " + std::to_string(up.size()) + " n-cells");
    }
  }
  return std::to_string(checked) + " completed expansions checked, " + std::to_string(skipped) +
         " non-good colorings have no expansion";
}

std::string criterion6(Check& c) {
  int good = 0;
  int discrepancies = 0;
  const auto random = corpus::random_surface_colorings(200);
  for (const ColoredGraph& g : random) {
    const bool is = is_good(g);
    good += is ? 1 : 0;
    if (is != regularity_check(g).ok()) ++discrepancies;
  }
  c.expect(discrepancies == 0, std::to_string(discrepancies) + " discrepancies");
  return std::to_string(random.size()) + " colorings (" + std::to_string(good) + " good), " +
         std::to_string(discrepancies) + " discrepancies";
}

std::string criterion7(Check& c) {
  const ColoredGraph t1 = gen_orientable_surface(1);
  const ColoredGraph t1b = gen_orientable_surface(1);
  const SurfaceReport g2 = classify_surface(expand2(connected_sum(t1, 0, t1b, 0)));
  c.expect(g2.orientable && g2.genus == 2, "T2 # T2 is " + g2.name);
  const ColoredGraph p1 = gen_nonorientable_surface(1);
  const ColoredGraph p1b = gen_nonorientable_surface(1);
  const SurfaceReport kb = classify_surface(expand2(connected_sum(p1, 0, p1b, 0)));
  c.expect(!kb.orientable && kb.euler == 0, "P2 # P2 is " + kb.name);
  return "T2 # T2 -> " + g2.name + ", P2 # P2 -> " + kb.name + " (chi " + std::to_string(kb.euler) + ")";
}

std::string criterion8(Check& c) {
  long nests = 0;
  int graphs = 0;
  for (const auto& item : full_corpus()) {
    if (!is_good(item.graph)) continue;
    ++graphs;
    for (const IsotropyRecord& r : isotropy_report(item.graph)) {
      ++nests;
      c.expect(r.subgroup.dim() + r.nest_dim == item.graph.rank(), item.name + ": isotropy dimension");
    }
    const RealizabilitySummary s = realizability_summary(item.graph);
    if (!s.expansion_complete) continue;
    const bool doubling = item.graph.n() == 2 && s.euler % 2 != 0;
    c.expect((s.bounding == Bounding::DoublingRequired) == doubling,
             item.name + ": bounding says " + to_string(s.bounding));
  }
  return std::to_string(nests) + " nests over " + std::to_string(graphs) + " graphs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string(Check&)>>> criteria{
      {"surface families", criterion1},   {"cube and K4", criterion2},
      {"3-manifold criterion", criterion3}, {"duality roundtrips", criterion4},
      {"corpus properties", criterion5},  {"goodness and regularity", criterion6},
      {"connected sums", criterion7},     {"realization data", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    std::string detail;
    try {
      detail = criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failure.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << ": "
              << (ok ? detail : check.failure) << "\n";
  }
  return failed == 0 ? 0 : 1;
}
