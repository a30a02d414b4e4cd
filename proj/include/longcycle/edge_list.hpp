#pragma once

#include <iosfwd>
#include <string>

#include "longcycle/graph.hpp"

namespace longcycle {

// Text format: one "u v" pair per line, 0-indexed, whitespace separated.
// Lines starting with '#' are comments, except "# n <count>" which fixes
// the vertex count (otherwise it is max id + 1). Self-loops, duplicates
// and malformed lines are rejected with InvalidParameter.

void write_edge_list(std::ostream& out, const Graph& g);
[[nodiscard]] Graph read_edge_list(std::istream& in);

void save_edge_list(const std::string& path, const Graph& g);
[[nodiscard]] Graph load_edge_list(const std::string& path);

}  // namespace longcycle
