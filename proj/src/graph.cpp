#include "clawfree/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace clawfree {

int pair_count(int n) { return n * (n - 1) / 2; }

Edge pair_from_index(int n, int idx) {
    for (int i = 0; i < n - 1; ++i) {
        int row = n - 1 - i;
        if (idx < row) return {i, i + 1 + idx};
        idx -= row;
    }
    throw std::out_of_range("pair_from_index: index out of range");
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("Graph: vertex count must be in [0, 62], got " +
                                    std::to_string(n));
}

void Graph::add_edge_unchecked(int i, int j) {
    adj_[i] |= 1ull << j;
    adj_[j] |= 1ull << i;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) {
        if (i == j) throw std::invalid_argument("Graph: loop pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw std::invalid_argument("Graph: endpoint out of range in {" + std::to_string(i) + "," + std::to_string(j) + "}");
        g.add_edge_unchecked(i, j);
    }
    return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (pair_count(n) > 64) throw std::invalid_argument("from_edge_mask: C(n,2) > 64");
    Graph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if ((mask >> k) & 1u) g.add_edge_unchecked(i, j);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

std::uint64_t Graph::edge_mask() const {
    if (pair_count(n_) > 64) throw std::invalid_argument("edge_mask: C(n,2) > 64");
    std::uint64_t mask = 0;
    int k = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++k)
            if (adjacent(i, j)) mask |= 1ull << k;
    return mask;
}

VertexSubset VertexSubset::of(int n, const std::vector<int>& members) {
    VertexSubset s{n, 0};
    for (int v : members) {
        if (v < 0 || v >= n) throw std::invalid_argument("VertexSubset: member out of range");
        s.bits |= 1ull << v;
    }
    return s;
}

int VertexSubset::size() const { return std::popcount(bits); }

std::vector<int> VertexSubset::members() const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    std::vector<Edge> missing;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) missing.emplace_back(i, j);
    return Graph::from_edges(n, missing);
}

std::pair<Graph, std::vector<int>> induced(const Graph& g, const VertexSubset& a) {
    if (a.n != g.vertex_count())
        throw std::invalid_argument("induced: subset parent size mismatch");
    std::vector<int> old_to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> verts = a.members();
    for (std::size_t k = 0; k < verts.size(); ++k) old_to_new[verts[k]] = static_cast<int>(k);
    return {induced_on(g, verts), old_to_new};
}

Graph induced_on(const Graph& g, const std::vector<int>& verts) {
    int m = static_cast<int>(verts.size());
    std::vector<Edge> es;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (g.adjacent(verts[a], verts[b])) es.emplace_back(a, b);
    return Graph::from_edges(m, es);
}

Graph boolean_sum(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw std::invalid_argument("boolean_sum: vertex counts differ");
    int n = g.vertex_count();
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j) != h.adjacent(i, j)) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int gn = g.vertex_count(), hn = h.vertex_count();
    if (gn * hn > kMaxVertices)
        throw std::invalid_argument("cartesian_product: product exceeds vertex cap");
    std::vector<Edge> es;
    auto id = [hn](int i, int j) { return i * hn + j; };
    for (int i = 0; i < gn; ++i)
        for (int j = 0; j < hn; ++j) {
            for (int j2 = j + 1; j2 < hn; ++j2)
                if (h.adjacent(j, j2)) es.emplace_back(id(i, j), id(i, j2));
            for (int i2 = i + 1; i2 < gn; ++i2)
                if (g.adjacent(i, i2)) es.emplace_back(id(i, j), id(i2, j));
        }
    return Graph::from_edges(gn * hn, es);
}

namespace {

// (degree, sorted neighbor degrees) refinement key, shared by the two
// backtracking searches below.
std::vector<std::vector<int>> vertex_keys(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> k{g.degree(v)};
        for (int u = 0; u < n; ++u)
            if (g.adjacent(v, u)) k.push_back(g.degree(u));
        std::sort(k.begin() + 1, k.end());
        keys[v] = std::move(k);
    }
    return keys;
}

bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<std::vector<int>>& cands,
                        const std::vector<int>& order, std::size_t pos,
                        std::vector<int>& map, std::uint64_t& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w : cands[v]) {
        if ((used >> w) & 1u) continue;
        bool ok = true;
        for (std::size_t p = 0; p < pos && ok; ++p) {
            int u = order[p];
            if (g.adjacent(v, u) != h.adjacent(w, map[u])) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used |= 1ull << w;
        if (extend_isomorphism(g, h, cands, order, pos + 1, map, used)) return true;
        used &= ~(1ull << w);
        map[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    auto gk = vertex_keys(g), hk = vertex_keys(h);
    {
        auto gs = gk, hs = hk;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return std::nullopt;
    }
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (gk[v] == hk[w]) cands[v].push_back(w);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cands[a].size() < cands[b].size() || (cands[a].size() == cands[b].size() && a < b);
    });
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::uint64_t used = 0;
    if (extend_isomorphism(g, h, cands, order, 0, map, used)) return map;
    return std::nullopt;
}

namespace {

bool extend_embedding(const Graph& p, const Graph& host,
                      const std::vector<int>& order, std::size_t pos,
                      std::vector<int>& map, std::uint64_t& used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    int hn = host.vertex_count();
    for (int w = 0; w < hn; ++w) {
        if ((used >> w) & 1u) continue;
        if (host.degree(w) < p.degree(v)) continue;
        bool ok = true;
        for (std::size_t q = 0; q < pos && ok; ++q) {
            int u = order[q];
            if (p.adjacent(v, u) != host.adjacent(w, map[u])) ok = false;
        }
        if (!ok) continue;
        map[v] = w;
        used |= 1ull << w;
        if (extend_embedding(p, host, order, pos + 1, map, used)) return true;
        used &= ~(1ull << w);
        map[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern,
                                                       const Graph& host) {
    int pn = pattern.vertex_count();
    if (pn > host.vertex_count()) return std::nullopt;
    // BFS order over the pattern so each placement is constrained early.
    std::vector<int> order;
    std::vector<bool> seen(static_cast<std::size_t>(pn), false);
    for (int s = 0; s < pn; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            int v = order[head];
            for (int u = 0; u < pn; ++u)
                if (pattern.adjacent(v, u) && !seen[u]) {
                    seen[u] = true;
                    order.push_back(u);
                }
        }
    }
    std::vector<int> map(static_cast<std::size_t>(pn), -1);
    std::uint64_t used = 0;
    if (extend_embedding(pattern, host, order, 0, map, used)) return map;
    return std::nullopt;
}

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical_code: n > 10");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t mask = 0;
        int k = 0;
        bool prune = false;
        for (int i = 0; i < n && !prune; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.adjacent(perm[i], perm[j])) {
                    mask |= 1ull << k;
                    if (mask > best) { prune = true; break; }
                }
        if (!prune && mask < best) best = mask;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace clawfree
