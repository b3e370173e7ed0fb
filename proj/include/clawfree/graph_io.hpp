#ifndef CLAWFREE_GRAPH_IO_HPP
#define CLAWFREE_GRAPH_IO_HPP

#include <string>

#include "clawfree/graph.hpp"

namespace clawfree {

// Standard graph6: byte n+63, then the upper-triangle adjacency bits in
// column order (pairs (i,j) for j = 1..n-1, i = 0..j-1), packed big-endian
// six bits per byte, each byte offset by 63.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(const std::string& text);

// First line: vertex count. Each following non-empty line: "u v".
// '#' starts a comment. Errors carry the offending line number.
Graph parse_edgelist(const std::string& text);

// Graph literal: catalog name, inline graph6, or "@file" holding an edge
// list or a graph6 string.
Graph parse_graph_literal(const std::string& literal);

}  // namespace clawfree

#endif
