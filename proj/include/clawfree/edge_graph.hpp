#ifndef CLAWFREE_EDGE_GRAPH_HPP
#define CLAWFREE_EDGE_GRAPH_HPP

#include <variant>
#include <vector>

#include "clawfree/graph.hpp"

namespace clawfree {

// The edge-graph S(U): vertices are the edges of U in lexicographic order;
// {u,v} adjacent iff the base edges share exactly one endpoint and the pair
// of unshared endpoints is a non-edge of U. Not the line graph.
struct EdgeGraph {
    Graph base;
    std::vector<Edge> verts;            // base edges, lexicographic
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int vertex_count() const { return static_cast<int>(verts.size()); }
    bool adjacent(int u, int v) const;
};

EdgeGraph edge_graph(const Graph& u);

// Edge-graph as a Graph value; requires |E(base)| <= 62.
Graph to_graph(const EdgeGraph& s);

struct Component {
    int root = -1;             // least vertex, colored 0 by bipartition
    std::vector<int> vertices; // BFS discovery order
};

struct TwoColoring {
    std::vector<int> color;            // vertex -> {0,1}
    std::vector<Component> components; // increasing least-vertex order
};

// Closed walk v0..vk with v0 == vk, consecutive vertices adjacent, and an
// odd number of edges.
using OddWalk = std::vector<int>;

// Canonical BFS 2-coloring (components by least vertex, root color 0), or an
// odd closed walk when the graph is not bipartite.
std::variant<TwoColoring, OddWalk> bipartition(const EdgeGraph& s);

bool is_proper_vertex_coloring(const Graph& g, const std::vector<int>& color);

// Given a proper 2-coloring c of the bipartite graph U itself, colors each
// vertex {x,y} of S(complement(U)) by c(x)+c(y) mod 2. Always proper.
TwoColoring parity_coloring(const Graph& u, const std::vector<int>& vertex_color);

}  // namespace clawfree

#endif
