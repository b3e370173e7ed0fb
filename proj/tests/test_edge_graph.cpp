#include <doctest.h>

#include <stdexcept>

#include <random>

#include "clawfree/catalog.hpp"
#include "clawfree/detect.hpp"
#include "clawfree/edge_graph.hpp"
#include "clawfree/harness.hpp"

using namespace clawfree;

namespace {

// brute-force bipartiteness oracle: try all 2^m colorings
bool bipartite_bruteforce(const EdgeGraph& s) {
    int m = s.vertex_count();
    REQUIRE(m <= 16);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool proper = true;
        for (int a = 0; a < m && proper; ++a)
            for (int b : s.adj[a])
                if (b > a && ((mask >> a) & 1u) == ((mask >> b) & 1u)) {
                    proper = false;
                    break;
                }
        if (proper) return true;
    }
    return m == 0;
}

bool proper_on(const EdgeGraph& s, const std::vector<int>& color) {
    for (int a = 0; a < s.vertex_count(); ++a)
        for (int b : s.adj[a])
            if (b > a && color[a] == color[b]) return false;
    return true;
}

}  // namespace

TEST_CASE("edge-graph of named graphs") {
    CHECK(is_isomorphic(to_graph(edge_graph(catalog::claw())), catalog::k3()).has_value());
    CHECK(is_isomorphic(to_graph(edge_graph(catalog::a6())), catalog::cycle(9)).has_value());

    EdgeGraph sk3 = edge_graph(catalog::k3());
    CHECK(sk3.vertex_count() == 3);
    for (const auto& row : sk3.adj) CHECK(row.empty());

    for (int n = 4; n <= 12; ++n)
        CHECK(is_isomorphic(to_graph(edge_graph(catalog::cycle(n))), catalog::cycle(n)).has_value());
}

TEST_CASE("canonical bipartition of S(C4)") {
    EdgeGraph s = edge_graph(catalog::cycle(4));
    REQUIRE(s.verts == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    auto res = bipartition(s);
    auto* tc = std::get_if<TwoColoring>(&res);
    REQUIRE(tc != nullptr);
    CHECK(tc->color == std::vector<int>{0, 1, 1, 0});  // {01,23} vs {03,12}
    REQUIRE(tc->components.size() == 1);
    CHECK(tc->components[0].root == 0);
}

TEST_CASE("odd walk obstruction for C5") {
    auto res = bipartition(edge_graph(catalog::cycle(5)));
    auto* walk = std::get_if<OddWalk>(&res);
    REQUIRE(walk != nullptr);
    EdgeGraph s = edge_graph(catalog::cycle(5));
    CHECK(walk->front() == walk->back());
    CHECK((walk->size() - 1) % 2 == 1);
    for (std::size_t i = 0; i + 1 < walk->size(); ++i)
        CHECK(s.adjacent((*walk)[i], (*walk)[i + 1]));
}

TEST_CASE("bipartition of empty edge-graph") {
    auto res = bipartition(edge_graph(Graph(4)));
    auto* tc = std::get_if<TwoColoring>(&res);
    REQUIRE(tc != nullptr);
    CHECK(tc->color.empty());
    CHECK(tc->components.empty());
}

TEST_CASE("isolated S-vertices get color 0") {
    // S(K3) has three isolated vertices
    auto res = bipartition(edge_graph(catalog::k3()));
    auto* tc = std::get_if<TwoColoring>(&res);
    REQUIRE(tc != nullptr);
    CHECK(tc->color == std::vector<int>{0, 0, 0});
    CHECK(tc->components.size() == 3);
}

TEST_CASE("bipartition agrees with the brute-force oracle") {
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << pair_count(n)); ++mask) {
            EdgeGraph s = edge_graph(Graph::from_edge_mask(n, mask));
            bool colored = std::holds_alternative<TwoColoring>(bipartition(s));
            CHECK(colored == bipartite_bruteforce(s));
        }
}

TEST_CASE("parity coloring: single edge example") {
    Graph u = Graph::from_edges(4, {{0, 1}});
    std::vector<int> c{0, 1, 0, 0};
    TwoColoring tc = parity_coloring(u, c);
    EdgeGraph sbar = edge_graph(complement(u));
    CHECK(proper_on(sbar, tc.color));
    auto color_of = [&](Edge e) {
        for (int v = 0; v < sbar.vertex_count(); ++v)
            if (sbar.verts[v] == e) return tc.color[v];
        FAIL("non-edge not found");
        return -1;
    };
    CHECK(color_of({2, 3}) == 0);
    CHECK(color_of({0, 2}) == 0);
    CHECK(color_of({1, 2}) == 1);
}

TEST_CASE("parity coloring: C6 and edgeless") {
    Graph c6 = catalog::cycle(6);
    std::vector<int> alt{0, 1, 0, 1, 0, 1};
    CHECK(proper_on(edge_graph(complement(c6)), parity_coloring(c6, alt).color));

    Graph none(4);
    TwoColoring tc = parity_coloring(none, {0, 0, 0, 0});
    for (int c : tc.color) CHECK(c == 0);

    CHECK_THROWS_AS(parity_coloring(catalog::k3(), {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("parity coloring proper for every bipartite graph up to n=6") {
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < (1ull << pair_count(n)); ++mask) {
            Graph u = Graph::from_edge_mask(n, mask);
            // vertex 2-coloring of U itself via BFS, skip non-bipartite U
            std::vector<int> color(n, -1);
            bool bip = true;
            for (int s = 0; s < n && bip; ++s) {
                if (color[s] != -1) continue;
                color[s] = 0;
                std::vector<int> q{s};
                for (std::size_t h = 0; h < q.size() && bip; ++h)
                    for (int v = 0; v < n; ++v) {
                        if (!u.adjacent(q[h], v)) continue;
                        if (color[v] == -1) {
                            color[v] = 1 - color[q[h]];
                            q.push_back(v);
                        } else if (color[v] == color[q[h]]) {
                            bip = false;
                        }
                    }
            }
            if (!bip) continue;
            CHECK(proper_on(edge_graph(complement(u)), parity_coloring(u, color).color));
        }
}

TEST_CASE("recoloring after relabeling stays proper") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph u = Graph::from_edge_mask(n, rng() & ((1ull << pair_count(n)) - 1));
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> es;
        for (auto [i, j] : u.edges())
            es.emplace_back(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
        EdgeGraph s = edge_graph(Graph::from_edges(n, es));
        auto res = bipartition(s);
        if (auto* tc = std::get_if<TwoColoring>(&res)) CHECK(proper_on(s, tc->color));
    }
}
