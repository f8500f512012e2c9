#pragma once

// Line-oriented text format:
//
//   n r
//   u v color        (one line per edge, 0-based vertices)
//
// Colored graphs use colors 1..r; uncolored graphs write r = 0 and color 0 on
// every edge. Blank lines and lines starting with '#' are ignored on input.

#include <iosfwd>
#include <string>

#include "rpg/graph.hpp"

namespace rpg {

void write_graph(std::ostream& out, const Graph& g);
void write_colored_graph(std::ostream& out, const ColoredGraph& cg);

/// Throws InputError with the offending line number on malformed input.
ColoredGraph read_colored_graph(std::istream& in);
/// Reads either flavor and drops the colors.
Graph read_graph(std::istream& in);

ColoredGraph load_colored_graph(const std::string& path);
void save_colored_graph(const std::string& path, const ColoredGraph& cg);

}  // namespace rpg
