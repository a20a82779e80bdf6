#pragma once

// Graph file format: one JSON object
//
//   {"n": 2, "vertices": 4, "edges": [[0, 1, "001"], ...]}
//
// Colors are '0'/'1' strings of length n+1 with x_0 leftmost. Array order
// defines edge ids.

#include <string>
#include <string_view>

#include "skelex/colored_graph.hpp"

#include <json.hpp>

namespace skelex {

/// Throws ParseError with line/column for JSON syntax errors and with the
/// offending field path for schema errors. With `check_valid` set, the
/// coloring invariants are checked too (InvalidGraph).
ColoredGraph parse_graph(std::string_view text, bool check_valid = true);
ColoredGraph graph_from_json(const nlohmann::json& doc, bool check_valid = true);

std::string serialize_graph(const ColoredGraph& g);
nlohmann::ordered_json graph_to_json(const ColoredGraph& g);

/// Parses JSON text, converting syntax errors into ParseError with a
/// line/column position.
nlohmann::json parse_json(std::string_view text);

}  // namespace skelex
