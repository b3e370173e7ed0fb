#ifndef CLAWFREE_GRAPH_HPP
#define CLAWFREE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace clawfree {

// Hard cap matching the single-byte size field of the graph6 format.
inline constexpr int kMaxVertices = 62;

using Edge = std::pair<int, int>;  // always stored with first < second

// Index of the pair {i,j}, i<j, in lexicographic order over all C(n,2) pairs.
inline int pair_index(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

int pair_count(int n);
Edge pair_from_index(int n, int idx);

// Finite simple undirected graph on vertices 0..n-1.
// Immutable after construction; adjacency kept as one 64-bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    // Edge bitmask in lexicographic pair order; requires C(n,2) <= 64.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;

    // U(e) notation: 1 iff {i,j} is an edge.
    int indicator(int i, int j) const { return adjacent(i, j) ? 1 : 0; }

    std::vector<Edge> edges() const;        // lexicographic order
    std::uint64_t edge_mask() const;        // requires C(n,2) <= 64
    std::uint64_t full_vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    bool operator==(const Graph&) const = default;

private:
    void add_edge_unchecked(int i, int j);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Subset of the vertices of a graph on n vertices, as a membership bitmask.
struct VertexSubset {
    int n = 0;
    std::uint64_t bits = 0;

    static VertexSubset of(int n, const std::vector<int>& members);
    int size() const;
    bool contains(int v) const { return (bits >> v) & 1u; }
    std::vector<int> members() const;
};

Graph complement(const Graph& g);

// Induced subgraph plus the old->new index map (-1 for vertices outside A).
std::pair<Graph, std::vector<int>> induced(const Graph& g, const VertexSubset& a);
Graph induced_on(const Graph& g, const std::vector<int>& verts);

Graph boolean_sum(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);

// Vertex bijection phi with {i,j} in E(G) <=> {phi i, phi j} in E(H), if any.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

// Injective map of pattern vertices into host preserving adjacency and
// non-adjacency (induced embedding), if any.
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern,
                                                       const Graph& host);

// Minimum edge mask over all vertex permutations; requires n <= 10.
std::uint64_t canonical_code(const Graph& g);

}  // namespace clawfree

#endif
