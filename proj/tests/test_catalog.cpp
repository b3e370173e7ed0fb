#include <doctest.h>

#include <stdexcept>

#include "clawfree/catalog.hpp"
#include "clawfree/detect.hpp"
#include "clawfree/graph.hpp"

using namespace clawfree;

TEST_CASE("named lookup and parametric names") {
    CHECK(catalog::named("P9").vertex_count() == 9);
    CHECK(catalog::named("cycle:5") == catalog::cycle(5));
    CHECK(catalog::named("cycle(5)") == catalog::cycle(5));
    CHECK(catalog::named("path:4") == catalog::path(4));
    CHECK_THROWS_AS(catalog::named("nope"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::named("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(catalog::cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(catalog::path(0), std::invalid_argument);
}

TEST_CASE("P9 shape") {
    Graph p9 = catalog::p9();
    CHECK(p9.vertex_count() == 9);
    CHECK(p9.edge_count() == 18);
    for (int v = 0; v < 9; ++v) CHECK(p9.degree(v) == 4);
}

TEST_CASE("self-complementary catalog graphs") {
    CHECK(is_isomorphic(catalog::p9(), catalog::p9bar()).has_value());
    CHECK(is_isomorphic(catalog::b5(), complement(catalog::b5())).has_value());
    CHECK(is_isomorphic(catalog::p9_minus_v(), complement(catalog::p9_minus_v())).has_value());
}

TEST_CASE("induced subgraphs of P9") {
    Graph p9 = catalog::p9();
    for (const Graph& g : {catalog::b5(), catalog::e6(), catalog::e6bar(),
                           catalog::p9_minus_edge(), catalog::p9_minus_edge_bar(),
                           catalog::p9_minus_v()})
        CHECK(find_induced_embedding(g, p9).has_value());
    CHECK_FALSE(find_induced_embedding(catalog::a6(), p9).has_value());
    CHECK_FALSE(find_induced_embedding(catalog::a6bar(), p9).has_value());
}

TEST_CASE("A6 structure") {
    Graph a6 = catalog::a6();
    CHECK(a6.vertex_count() == 6);
    CHECK(a6.edge_count() == 9);
    // inner triangle and outer independent set
    CHECK(a6.adjacent(0, 1));
    CHECK(a6.adjacent(1, 2));
    CHECK(a6.adjacent(0, 2));
    CHECK_FALSE(a6.adjacent(3, 4));
    CHECK_FALSE(a6.adjacent(4, 5));
    CHECK_FALSE(a6.adjacent(3, 5));
    CHECK(find_triangle(a6) == std::array<int, 3>{0, 1, 2});
    CHECK(is_forb_bruteforce(a6));
}

TEST_CASE("every catalog graph lies in the class on both sides") {
    for (const char* name : {"K3", "K3bar", "A6", "A6bar", "B5", "E6", "E6bar",
                             "P9", "P9bar", "P9_minus_v", "P9_minus_edge",
                             "P9_minus_edge_bar"})
        CHECK_MESSAGE(is_forb_bruteforce(catalog::named(name)), name);
}

TEST_CASE("P9 edge deletion is edge-transitive") {
    Graph p9 = catalog::p9();
    Graph ref = catalog::p9_minus_edge();
    for (auto removed : p9.edges()) {
        std::vector<int> keep;
        for (int v = 0; v < 9; ++v)
            if (v != removed.first && v != removed.second) keep.push_back(v);
        CHECK(is_isomorphic(induced_on(p9, keep), ref).has_value());
    }
}

TEST_CASE("P9 vertex deletion is vertex-transitive") {
    Graph p9 = catalog::p9();
    Graph ref = catalog::p9_minus_v();
    for (int drop = 0; drop < 9; ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < 9; ++v)
            if (v != drop) keep.push_back(v);
        CHECK(is_isomorphic(induced_on(p9, keep), ref).has_value());
    }
}
