#pragma once

#include <string>

#include "cxh/graph.hpp"

namespace cxh {

// Edge-list text format.
//
//   line 1:        "n m"
//   next m lines:  "u v"        (0 <= u < v < n in canonical output)
//   anywhere:      '#' starts a comment, blank lines are skipped
//
// Labels survive a round trip through the reserved comment form
// "# v <id> <label...>", which the writer emits after the header for labeled
// graphs and the reader recognizes; all other comments are ignored.
// The reader accepts "v u" order and normalizes.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// graph6 format (McKay).  Orders up to 64 (the solver representation cap);
// 63- and 64-vertex graphs use the 4-byte order header.  The optional
// ">>graph6<<" prefix is accepted on input.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

}  // namespace cxh
