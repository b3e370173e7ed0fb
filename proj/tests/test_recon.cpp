#include <doctest.h>

#include <stdexcept>

#include <random>

#include "clawfree/catalog.hpp"
#include "clawfree/recon.hpp"

using namespace clawfree;

TEST_CASE("iso_utc") {
    CHECK(iso_utc(catalog::b5(), complement(catalog::b5())));
    CHECK(iso_utc(catalog::k3(), catalog::k3bar()));
    CHECK_FALSE(iso_utc(catalog::cycle(5), catalog::path(5)));
    CHECK_THROWS_AS(iso_utc(Graph(3), Graph(4)), std::invalid_argument);
}

TEST_CASE("hypomorphic_utc basics") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = Graph::from_edge_mask(n, rng() & ((1ull << pair_count(n)) - 1));
        // against own complement: true at every k
        for (int k = 1; k <= n; ++k)
            CHECK(hypomorphic_utc(g, complement(g), k).result);
        // at k = n it is exactly iso_utc
        Graph h = Graph::from_edge_mask(n, rng() & ((1ull << pair_count(n)) - 1));
        CHECK(hypomorphic_utc(g, h, n).result == iso_utc(g, h));
        // symmetry and simultaneous complementation
        int k = 2 + static_cast<int>(rng() % (n - 1));
        bool fwd = hypomorphic_utc(g, h, k).result;
        CHECK(fwd == hypomorphic_utc(h, g, k).result);
        CHECK(fwd == hypomorphic_utc(complement(g), complement(h), k).result);
    }
    CHECK_THROWS_AS(hypomorphic_utc(Graph(3), Graph(3), 4), std::invalid_argument);
}

TEST_CASE("hypomorphic_utc under a vertex permutation at k = n") {
    Graph g = catalog::a6();
    std::vector<int> perm{3, 1, 5, 0, 2, 4};
    std::vector<Edge> es;
    for (auto [i, j] : g.edges())
        es.emplace_back(std::min(perm[i], perm[j]), std::max(perm[i], perm[j]));
    CHECK(hypomorphic_utc(g, Graph::from_edges(6, es), 6).result);
}

TEST_CASE("failing subset is reported") {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}});  // K3 + isolated
    Graph h = catalog::cycle(4);
    HypomorphyReport rep = hypomorphic_utc(g, h, 3);
    CHECK_FALSE(rep.result);
    REQUIRE(rep.failing_subset.has_value());
    CHECK_FALSE(iso_utc(induced_on(g, *rep.failing_subset),
                        induced_on(h, *rep.failing_subset)));
}

TEST_CASE("small reconstruction counterexamples") {
    // v = 3, k = 2: an edge count survey cannot pin the graph
    bool found3 = false;
    for (std::uint64_t m = 0; m < 8 && !found3; ++m)
        found3 = reconstructible_utc(Graph::from_edge_mask(3, m), 2).has_value();
    CHECK(found3);

    bool found4 = false;
    for (std::uint64_t m = 0; m < 64 && !found4; ++m)
        found4 = reconstructible_utc(Graph::from_edge_mask(4, m), 3).has_value();
    CHECK(found4);

    CHECK_THROWS_AS(reconstructible_utc(Graph(7), 3), std::invalid_argument);
}

TEST_CASE("reconstructible_utc counterexamples are genuine") {
    for (std::uint64_t m = 0; m < 64; ++m) {
        Graph g = Graph::from_edge_mask(4, m);
        if (auto h = reconstructible_utc(g, 3)) {
            CHECK(hypomorphic_utc(g, *h, 3).result);
            CHECK_FALSE(iso_utc(g, *h));
        }
    }
}

TEST_CASE("recon_sweep agrees with per-graph search at v=4") {
    ReconSweepResult res = recon_sweep(4, 3);
    CHECK(res.graphs == 64);
    CHECK_FALSE(res.failures.empty());
    for (auto [gm, hm] : res.failures) {
        Graph g = Graph::from_edge_mask(4, gm), h = Graph::from_edge_mask(4, hm);
        CHECK(hypomorphic_utc(g, h, 3).result);
        CHECK_FALSE(iso_utc(g, h));
    }
}

TEST_CASE("check_prop_down") {
    Graph g = catalog::b5();
    CHECK(check_prop_down(g, complement(g), 3, 2));
    CHECK(check_prop_down(g, g, 3, 2));
    CHECK_THROWS_AS(check_prop_down(g, g, 4, 3), std::invalid_argument);  // t > n-k

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 6;
        Graph a = Graph::from_edge_mask(n, rng() & ((1ull << 15) - 1));
        Graph b = Graph::from_edge_mask(n, rng() & ((1ull << 15) - 1));
        CHECK(check_prop_down(a, b, 3, 2));
    }
}

TEST_CASE("propdown_sweep at v=4") {
    PropDownResult res = propdown_sweep(4, 2, 2, 1);
    CHECK(res.pairs == 64 * 64);
    CHECK(res.violations.empty());
    CHECK_THROWS_AS(propdown_sweep(4, 3, 2, 1), std::invalid_argument);
}
