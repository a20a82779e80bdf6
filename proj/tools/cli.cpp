#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skelex/census.hpp"
#include "skelex/classify.hpp"
#include "skelex/duality.hpp"
#include "skelex/error.hpp"
#include "skelex/expansion.hpp"
#include "skelex/generators.hpp"
#include "skelex/graph_io.hpp"
#include "skelex/nests.hpp"
#include "skelex/realize.hpp"

namespace skelex::cli {

namespace {

using nlohmann::ordered_json;

// Unreadable files and similar: exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request the pipeline declines: exit code 1.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string format;
  std::string out_path;

  bool json(bool by_default) const { return format.empty() ? by_default : format == "json"; }
};

std::string read_input(const Context& ctx, const std::string& path) {
  std::ostringstream text;
  if (path.empty() || path == "-") {
    text << ctx.in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot read '" + path + "'");
    text << file.rdbuf();
  }
  return text.str();
}

void emit(const Context& ctx, const std::string& text) {
  if (ctx.out_path.empty()) {
    ctx.out << text;
    return;
  }
  std::ofstream file(ctx.out_path);
  if (!file) throw InputError("cannot write '" + ctx.out_path + "'");
  file << text;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

std::string join(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

std::string kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Loop:
      return "loop";
    case ViolationKind::ZeroColor:
      return "zero-color";
    case ViolationKind::Valence:
      return "valence";
    case ViolationKind::Dependent:
      return "dependent";
    case ViolationKind::Disconnected:
      return "disconnected";
  }
  return "unknown";
}

/// A graph file, or the output of `expand`, which embeds the graph.
ColoredGraph read_graph(const Context& ctx, const std::string& path) {
  const nlohmann::json doc = parse_json(read_input(ctx, path));
  if (doc.is_object() && doc.contains("graph")) return graph_from_json(doc["graph"]);
  return graph_from_json(doc);
}

// ---------------------------------------------------------------------------

int cmd_validate(const Context& ctx, const std::string& path) {
  const ColoredGraph g = parse_graph(read_input(ctx, path), false);
  const ValidationReport report = validate(g);
  std::optional<GoodnessReport> good;
  if (report.ok()) good = check_good(g);

  if (ctx.json(false)) {
    ordered_json doc;
    doc["valid"] = report.ok();
    doc["violations"] = ordered_json::array();
    for (const auto& v : report.violations) {
      doc["violations"].push_back(
          {{"kind", kind_name(v.kind)}, {"vertex", v.vertex}, {"edge", v.edge}, {"message", v.message}});
    }
    if (good) {
      doc["pure"] = is_pure(g);
      doc["good"] = good->good;
      if (good->witness) {
        doc["witness"] = {{"edge", good->witness->edge},
                          {"neighbor", good->witness->neighbor},
                          {"vertex", good->witness->vertex}};
      }
    }
    emit(ctx, dump(doc));
  } else {
    std::string text;
    if (report.ok()) {
      text += "valid\n";
      text += std::string("pure: ") + (is_pure(g) ? "yes" : "no") + "\n";
      if (good->good) {
        text += "good: yes\n";
      } else {
        const auto& w = *good->witness;
        text += "good: no (across edge " + std::to_string(w.edge) + " from vertex " +
                std::to_string(w.vertex) + ", no partner for edge " + std::to_string(w.neighbor) + ")\n";
      }
    } else {
      text += "invalid\n";
      for (const auto& v : report.violations) text += v.message + "\n";
    }
    emit(ctx, text);
  }
  return report.ok() ? 0 : 1;
}

int cmd_nests(const Context& ctx, const std::string& path, int dim) {
  const ColoredGraph g = read_graph(ctx, path);
  const NestComplex nests(g);
  if (dim > nests.top_dim()) {
    throw PreconditionError("--dim " + std::to_string(dim) + " exceeds n = " + std::to_string(g.n()));
  }
  const bool regular = regularity_check(nests).ok();
  const int lo = dim < 0 ? 0 : dim;
  const int hi = dim < 0 ? nests.top_dim() : dim;

  if (ctx.json(false)) {
    ordered_json doc;
    doc["n"] = g.n();
    doc["nests"] = ordered_json::array();
    for (int k = lo; k <= hi; ++k) {
      for (std::size_t i = 0; i < nests.nests(k).size(); ++i) {
        const Nest& nest = nests.nest(k, static_cast<int>(i));
        doc["nests"].push_back({{"dim", k},
                                {"index", i},
                                {"label", nest_label(nest)},
                                {"vertices", nest.vertices},
                                {"edges", nest.edges}});
      }
    }
    doc["counts"] = nests.counts();
    doc["regular"] = regular;
    emit(ctx, dump(doc));
  } else {
    std::string text;
    for (int k = lo; k <= hi; ++k) {
      for (const Nest& nest : nests.nests(k)) {
        text += std::to_string(k) + "  " + nest_label(nest) + "  vertices: " + join(nest.vertices) +
                "  edges: " + join(nest.edges) + "\n";
      }
    }
    text += "nu: " + join(nests.counts()) + "\n";
    text += std::string("regular: ") + (regular ? "yes" : "no") + "\n";
    emit(ctx, text);
  }
  return 0;
}

ordered_json complex_json(const CellComplex& c) {
  ordered_json dims = ordered_json::array();
  for (const auto& level : c.cells) {
    ordered_json cells = ordered_json::array();
    for (const Cell& cell : level) cells.push_back({{"nest", cell.nest}, {"faces", cell.faces}});
    dims.push_back(std::move(cells));
  }
  return dims;
}

int cmd_expand(const Context& ctx, const std::string& path, bool dump_complex) {
  const ColoredGraph g = read_graph(ctx, path);
  const ExpansionOutcome outcome = full_expand(g);

  if (ctx.json(true)) {
    ordered_json doc;
    doc["n"] = g.n();
    doc["nest_counts"] = outcome.nest_counts;
    doc["cell_counts"] = outcome.complex.counts();
    doc["euler"] = outcome.complex.euler();
    doc["reached_dim"] = outcome.reached_dim;
    doc["complete"] = outcome.complete();
    if (outcome.criterion) {
      const auto& c = *outcome.criterion;
      doc["criterion"] = {{"holds", c.holds}, {"nu0", c.vertices}, {"nu2", c.two_nests}, {"nu3", c.three_nests}};
    } else {
      doc["criterion"] = nullptr;
    }
    if (outcome.obstruction) {
      const auto& o = *outcome.obstruction;
      doc["obstruction"] = {{"kind", to_string(o.kind)}, {"nest_dim", o.nest_dim}, {"nest", o.nest}, {"reason", o.reason}};
    } else {
      doc["obstruction"] = nullptr;
    }
    doc["graph"] = graph_to_json(g);
    if (dump_complex) doc["complex"] = complex_json(outcome.complex);
    emit(ctx, dump(doc));
  } else {
    std::string text;
    text += "cells: " + join(outcome.complex.counts()) + "\n";
    text += "euler: " + std::to_string(outcome.complex.euler()) + "\n";
    text += "reached dimension: " + std::to_string(outcome.reached_dim) + "\n";
    if (outcome.complete()) {
      text += "status: complete\n";
    } else {
      text += "status: refused (" + to_string(outcome.obstruction->kind) + "): " + outcome.obstruction->reason + "\n";
    }
    if (dump_complex) {
      for (int k = 0; k <= outcome.complex.dim(); ++k) {
        const auto& level = outcome.complex.cells[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < level.size(); ++i) {
          text += "cell " + std::to_string(k) + "." + std::to_string(i) + " nest " +
                  std::to_string(level[i].nest) + " faces: " + join(level[i].faces) + "\n";
        }
      }
    }
    emit(ctx, text);
  }
  if (!outcome.complete()) {
    ctx.err << "skelex: refused: " << outcome.obstruction->reason << "\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const Context& ctx, const std::string& path) {
  const ColoredGraph g = read_graph(ctx, path);
  const ExpansionOutcome outcome = full_expand(g);
  if (!outcome.complete()) throw Refusal("no " + std::to_string(g.n()) + "-skeletal expansion: " + outcome.obstruction->reason);
  const HomologyReport homology = homology_mod2(outcome.complex);

  ordered_json doc;
  std::string text;
  doc["n"] = g.n();
  if (g.n() == 1) {
    doc["kind"] = "circle";
    doc["name"] = "S1";
    text += "S1\n";
  } else if (g.n() == 2) {
    const SurfaceReport s = classify_surface(outcome.complex);
    doc["kind"] = "surface";
    doc["name"] = s.name;
    doc["orientable"] = s.orientable;
    doc["genus"] = s.genus;
    text += s.name + "\n";
    text += std::string("orientable: ") + (s.orientable ? "yes" : "no") + "\n";
    text += "genus: " + std::to_string(s.genus) + "\n";
  } else {
    doc["kind"] = "3-manifold";
    text += "closed 3-manifold\n";
  }
  doc["euler"] = homology.euler;
  doc["betti_mod2"] = homology.betti;
  text += "euler: " + std::to_string(homology.euler) + "\n";
  text += "betti mod 2: " + join(homology.betti) + "\n";
  const LocalCheckReport local = manifold_local_check(outcome.complex);
  doc["local_check"] = local.ok();
  text += std::string("local manifold check: ") + (local.ok() ? "pass" : "fail") + "\n";
  if (g.n() == 3) {
    const std::string note = "mod-2 homology only; no homeomorphism classification";
    doc["note"] = note;
    text += "note: " + note + "\n";
  }
  emit(ctx, ctx.json(false) ? dump(doc) : text);
  return 0;
}

int cmd_dualize(const Context& ctx, const std::string& path, bool kappa) {
  const FacePoset poset = poset_from_json(parse_json(read_input(ctx, path)));
  const ColoredGraph g = dual_colored_graph(poset);
  emit(ctx, serialize_graph(g));
  if (kappa) {
    const KappaReport report = check_kappa(poset);
    ctx.err << "predicted: " << join(report.predicted) << "\nnests: " << join(report.actual) << "\n";
    if (!report.ok) throw Refusal("nest and flag census disagree: " + report.mismatch);
    ctx.err << "kappa: bijective\n";
  }
  return 0;
}

int cmd_census(const Context& ctx, const std::string& path, int n, int threads) {
  const Multigraph graph = multigraph_from_json(parse_json(read_input(ctx, path)));
  if (n < 0) {
    int ends = 0;
    for (const auto& [u, v] : graph.edges) ends += (u == 0) + (v == 0);
    n = ends - 1;
  }
  CensusOptions options;
  options.threads = threads;
  const std::vector<CensusEntry> entries = census(graph, n, options);

  ordered_json doc;
  doc["n"] = n;
  doc["entries"] = ordered_json::array();
  std::string text;
  for (const CensusEntry& e : entries) {
    ordered_json item;
    item["key"] = e.key;
    item["complete"] = e.complete;
    std::string name;
    if (e.surface) {
      name = e.surface->name;
      item["name"] = e.surface->name;
      item["orientable"] = e.surface->orientable;
      item["genus"] = e.surface->genus;
    } else if (e.complete) {
      name = n == 1 ? "S1" : "closed " + std::to_string(n) + "-manifold";
      item["name"] = name;
    } else {
      name = "refused: " + e.obstruction;
      item["obstruction"] = e.obstruction;
    }
    item["euler"] = e.euler;
    if (e.homology) item["betti_mod2"] = e.homology->betti;
    doc["entries"].push_back(std::move(item));
    text += e.key + "  " + name + "  euler " + std::to_string(e.euler);
    if (e.homology) text += "  betti " + join(e.homology->betti);
    text += "\n";
  }
  text += "entries: " + std::to_string(entries.size()) + "\n";
  emit(ctx, ctx.json(false) ? dump(doc) : text);
  return 0;
}

int cmd_realize(const Context& ctx, const std::string& path, bool table) {
  const ColoredGraph g = read_graph(ctx, path);
  const RealizabilitySummary s = realizability_summary(g);

  ordered_json doc;
  doc["n"] = s.n;
  doc["fixed_points"] = s.fixed_points;
  doc["expansion_complete"] = s.expansion_complete;
  doc["euler"] = s.euler;
  doc["bounding"] = to_string(s.bounding);
  doc["reason"] = s.reason;
  doc["moment_graph_matches"] = s.moment_graph_matches;
  ordered_json tangents = ordered_json::array();
  for (const auto& colors : s.tangent_colors) {
    ordered_json list = ordered_json::array();
    for (const auto& c : colors) list.push_back(c.str());
    tangents.push_back(std::move(list));
  }
  doc["tangent_colors"] = std::move(tangents);

  std::string text;
  text += "fixed points: " + std::to_string(s.fixed_points) + "\n";
  text += std::string("expansion: ") + (s.expansion_complete ? "complete" : "incomplete") + "\n";
  if (s.expansion_complete) text += "euler: " + std::to_string(s.euler) + "\n";
  text += "bounding: " + to_string(s.bounding) + " (" + s.reason + ")\n";
  text += std::string("moment graph: ") + (s.moment_graph_matches ? "matches input" : "differs from input") + "\n";

  if (table) {
    const auto records = isotropy_report(g);
    ordered_json iso = ordered_json::array();
    text += "isotropy:\n";
    for (const auto& r : records) {
      iso.push_back({{"dim", r.nest_dim},
                     {"nest", r.nest},
                     {"subgroup", subgroup_label(r.subgroup)},
                     {"corank", r.corank},
                     {"copies", r.copies}});
      text += "  " + std::to_string(r.nest_dim) + "." + std::to_string(r.nest) + "  " +
              subgroup_label(r.subgroup) + "  corank " + std::to_string(r.corank) + "  copies " +
              std::to_string(r.copies) + "\n";
    }
    doc["isotropy"] = std::move(iso);
    ordered_json circles = ordered_json::array();
    text += "fixed circles:\n";
    for (int e = 0; e < g.edge_count(); ++e) {
      const CircleReport c = fixed_circle_check(g, e);
      circles.push_back({{"edge", c.edge},
                         {"p", c.p},
                         {"q", c.q},
                         {"subgroup", subgroup_label(c.subgroup)},
                         {"arc_copies", c.arc_copies},
                         {"closes", c.closes}});
      text += "  edge " + std::to_string(c.edge) + "  " + std::to_string(c.p) + "-" + std::to_string(c.q) +
              "  " + subgroup_label(c.subgroup) + "  " + (c.closes ? "circle" : "open") + "\n";
    }
    doc["circles"] = std::move(circles);
  }
  emit(ctx, ctx.json(false) ? dump(doc) : text);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skeletal expansion of (Z2)^(n+1)-colored regular graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{in, out, err, "", ""};
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", ctx.out_path, "Write output to this file");

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input file, - for stdin")->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the G-coloring invariants");
  add_input(validate_cmd);

  int nest_dim = -1;
  auto* nests_cmd = app.add_subcommand("nests", "List the colored nests");
  add_input(nests_cmd);
  nests_cmd->add_option("--dim", nest_dim, "Only nests of this dimension")->check(CLI::NonNegativeNumber);

  bool dump_complex = false;
  auto* expand_cmd = app.add_subcommand("expand", "Build the skeletal expansion");
  add_input(expand_cmd);
  expand_cmd->add_flag("--dump", dump_complex, "Include the cells and their faces");

  auto* classify_cmd = app.add_subcommand("classify", "Identify the expanded manifold");
  add_input(classify_cmd);

  bool kappa = false;
  auto* dualize_cmd = app.add_subcommand("dualize", "Colored graph of a face poset or simplicial complex");
  add_input(dualize_cmd);
  dualize_cmd->add_flag("--kappa", kappa, "Compare nest and flag census on stderr");

  auto* generate_cmd = app.add_subcommand("generate", "Emit a graph family");
  generate_cmd->require_subcommand(1);
  generate_cmd->fallthrough();
  int cube_n = 0;
  auto* cube_cmd = generate_cmd->add_subcommand("cube", "1-skeleton of the (n+1)-cube");
  cube_cmd->add_option("--n", cube_n, "n")->required()->check(CLI::Range(1, 20));
  int genus = 0;
  bool non_orientable = false;
  auto* surface_cmd = generate_cmd->add_subcommand("surface", "Graph of gT2 or kP2");
  surface_cmd->add_option("--genus", genus, "g, or k with --non-orientable")->required()->check(CLI::Range(1, 1000));
  surface_cmd->add_flag("--non-orientable", non_orientable, "Connected sum of projective planes");
  auto* prism_cmd = generate_cmd->add_subcommand("prism", "Product of a graph with an edge");
  add_input(prism_cmd);

  int census_n = -1;
  int threads = 1;
  auto* census_cmd = app.add_subcommand("census", "Pure colorings of a small regular graph");
  add_input(census_cmd);
  census_cmd->add_option("--n", census_n, "n (default: degree - 1)")->check(CLI::PositiveNumber);
  census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  bool table = false;
  auto* realize_cmd = app.add_subcommand("realize", "Isotropy and moment-graph data");
  add_input(realize_cmd);
  realize_cmd->add_flag("--table", table, "Per-nest isotropy and fixed circles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(ctx, input);
    if (nests_cmd->parsed()) return cmd_nests(ctx, input, nest_dim);
    if (expand_cmd->parsed()) return cmd_expand(ctx, input, dump_complex);
    if (classify_cmd->parsed()) return cmd_classify(ctx, input);
    if (dualize_cmd->parsed()) return cmd_dualize(ctx, input, kappa);
    if (census_cmd->parsed()) return cmd_census(ctx, input, census_n, threads);
    if (realize_cmd->parsed()) return cmd_realize(ctx, input, table);
    if (cube_cmd->parsed()) {
      emit(ctx, serialize_graph(gen_cube(cube_n)));
    } else if (surface_cmd->parsed()) {
      emit(ctx, serialize_graph(non_orientable ? gen_nonorientable_surface(genus) : gen_orientable_surface(genus)));
    } else if (prism_cmd->parsed()) {
      emit(ctx, serialize_graph(gen_prism(read_graph(ctx, input))));
    }
    return 0;
  } catch (const InvalidGraph& e) {
    err << "skelex: invalid graph: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPoset& e) {
    err << "skelex: invalid poset: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "skelex: error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "skelex: refused: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedDimension& e) {
    err << "skelex: refused: " << e.what() << "\n";
    return 1;
  } catch (const Refusal& e) {
    err << "skelex: refused: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "skelex: parse error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "skelex: error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "skelex: error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "skelex: error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "skelex: internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "skelex: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace skelex::cli
