#include "clawfree/edge_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace clawfree {

bool EdgeGraph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

EdgeGraph edge_graph(const Graph& u) {
    EdgeGraph s;
    s.base = u;
    s.verts = u.edges();
    int m = s.vertex_count();
    s.adj.assign(static_cast<std::size_t>(m), {});
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            auto [x1, y1] = s.verts[a];
            auto [x2, y2] = s.verts[b];
            // shared endpoint and pair of unshared endpoints
            int shared = -1, p = -1, q = -1;
            if (x1 == x2) { shared = x1; p = y1; q = y2; }
            else if (x1 == y2) { shared = x1; p = y1; q = x2; }
            else if (y1 == x2) { shared = y1; p = x1; q = y2; }
            else if (y1 == y2) { shared = y1; p = x1; q = x2; }
            if (shared < 0) continue;
            if (!u.adjacent(p, q)) {
                s.adj[a].push_back(b);
                s.adj[b].push_back(a);
            }
        }
    for (auto& row : s.adj) std::sort(row.begin(), row.end());
    return s;
}

Graph to_graph(const EdgeGraph& s) {
    int m = s.vertex_count();
    if (m > kMaxVertices) throw std::invalid_argument("to_graph: edge-graph too large");
    std::vector<Edge> es;
    for (int a = 0; a < m; ++a)
        for (int b : s.adj[a])
            if (b > a) es.emplace_back(a, b);
    return Graph::from_edges(m, es);
}

std::variant<TwoColoring, OddWalk> bipartition(const EdgeGraph& s) {
    int m = s.vertex_count();
    TwoColoring tc;
    tc.color.assign(static_cast<std::size_t>(m), -1);
    std::vector<int> parent(static_cast<std::size_t>(m), -1);
    for (int root = 0; root < m; ++root) {
        if (tc.color[root] != -1) continue;
        Component comp;
        comp.root = root;
        tc.color[root] = 0;
        comp.vertices.push_back(root);
        for (std::size_t head = 0; head < comp.vertices.size(); ++head) {
            int v = comp.vertices[head];
            for (int w : s.adj[v]) {
                if (tc.color[w] == -1) {
                    tc.color[w] = 1 - tc.color[v];
                    parent[w] = v;
                    comp.vertices.push_back(w);
                } else if (tc.color[w] == tc.color[v]) {
                    // odd closed walk: v up to root, root down to w, cross edge back
                    OddWalk walk;
                    for (int x = v; x != -1; x = parent[x]) walk.push_back(x);
                    std::vector<int> down;
                    for (int x = w; x != -1; x = parent[x]) down.push_back(x);
                    walk.insert(walk.end(), down.rbegin() + 1, down.rend());
                    walk.push_back(v);
                    return walk;
                }
            }
        }
        tc.components.push_back(std::move(comp));
    }
    return tc;
}

bool is_proper_vertex_coloring(const Graph& g, const std::vector<int>& color) {
    int n = g.vertex_count();
    if (static_cast<int>(color.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) && color[i] == color[j]) return false;
    return true;
}

TwoColoring parity_coloring(const Graph& u, const std::vector<int>& vertex_color) {
    if (!is_proper_vertex_coloring(u, vertex_color))
        throw std::invalid_argument("parity_coloring: coloring is not proper for U");
    EdgeGraph sbar = edge_graph(complement(u));
    TwoColoring tc;
    tc.color.reserve(sbar.verts.size());
    for (auto [x, y] : sbar.verts) tc.color.push_back((vertex_color[x] + vertex_color[y]) & 1);
    // component structure of S(complement(U)), colors as given
    int m = sbar.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int root = 0; root < m; ++root) {
        if (seen[root]) continue;
        Component comp;
        comp.root = root;
        seen[root] = true;
        comp.vertices.push_back(root);
        for (std::size_t head = 0; head < comp.vertices.size(); ++head)
            for (int w : sbar.adj[comp.vertices[head]])
                if (!seen[w]) {
                    seen[w] = true;
                    comp.vertices.push_back(w);
                }
        tc.components.push_back(std::move(comp));
    }
    return tc;
}

}  // namespace clawfree
