#include "skelex/graph_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "skelex/error.hpp"

namespace skelex {

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

int require_int(const nlohmann::json& value, const std::string& field) {
  if (!value.is_number_integer()) throw ParseError(field + ": expected an integer");
  const auto x = value.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw ParseError(field + ": integer out of range");
  }
  return static_cast<int>(x);
}

}  // namespace

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos), line, column);
  }
}

ColoredGraph graph_from_json(const nlohmann::json& doc, bool check_valid) {
  if (!doc.is_object()) throw ParseError("graph: expected a JSON object");
  for (const char* key : {"n", "vertices", "edges"}) {
    if (!doc.contains(key)) throw ParseError(std::string("graph: missing field '") + key + "'");
  }
  const int n = require_int(doc["n"], "n");
  if (n < 1 || n + 1 > kMaxAmbient) throw ParseError("n: must lie in 1.." + std::to_string(kMaxAmbient - 1));
  const int vertices = require_int(doc["vertices"], "vertices");
  if (vertices < 1) throw ParseError("vertices: must be positive");
  const auto& list = doc["edges"];
  if (!list.is_array()) throw ParseError("edges: expected an array");

  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& item = list[i];
    if (!item.is_array() || item.size() != 3) throw ParseError(where + ": expected [u, v, color]");
    const int u = require_int(item[0], where + "[0]");
    const int v = require_int(item[1], where + "[1]");
    for (int end : {u, v}) {
      if (end < 0 || end >= vertices) {
        throw ParseError(where + ": endpoint " + std::to_string(end) + " outside 0.." +
                         std::to_string(vertices - 1));
      }
    }
    if (!item[2].is_string()) throw ParseError(where + "[2]: expected a color string");
    const auto text = item[2].get<std::string>();
    if (text.size() != static_cast<std::size_t>(n + 1)) {
      throw ParseError(where + "[2]: color '" + text + "' has length " +
                       std::to_string(text.size()) + ", expected n+1 = " + std::to_string(n + 1));
    }
    ColorVector color;
    try {
      color = ColorVector::parse(text);
    } catch (const std::exception& e) {
      throw ParseError(where + "[2]: " + e.what());
    }
    edges.push_back({u, v, color});
  }
  ColoredGraph g(n, vertices, std::move(edges));
  if (check_valid) require_valid(g);
  return g;
}

ColoredGraph parse_graph(std::string_view text, bool check_valid) {
  return graph_from_json(parse_json(text), check_valid);
}

std::string serialize_graph(const ColoredGraph& g) {
  std::ostringstream out;
  out << "{\n  \"n\": " << g.n() << ",\n  \"vertices\": " << g.vertex_count()
      << ",\n  \"edges\": [";
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    out << (id == 0 ? "\n" : ",\n") << "    [" << e.u << ", " << e.v << ", \"" << e.color.str()
        << "\"]";
  }
  out << (g.edge_count() > 0 ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

nlohmann::ordered_json graph_to_json(const ColoredGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.n();
  doc["vertices"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color.str()});
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace skelex
