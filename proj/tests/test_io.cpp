#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "clawfree/catalog.hpp"
#include "clawfree/graph_io.hpp"

using namespace clawfree;

TEST_CASE("graph6 emit on known strings") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(emit_graph6(Graph(2)) == "A?");
    CHECK(emit_graph6(catalog::k3()) == "Bw");
    CHECK(emit_graph6(catalog::cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round-trips") {
    auto roundtrip = [](const Graph& g) {
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back == g);
    };
    roundtrip(catalog::p9());
    roundtrip(catalog::a6());
    roundtrip(complement(catalog::e6()));
    for (std::uint64_t mask = 0; mask < 1024; mask += 17)
        roundtrip(Graph::from_edge_mask(5, mask));

    std::mt19937 rng(7);
    for (int n : {13, 30, 62})
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<Edge> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() & 1) es.emplace_back(i, j);
            roundtrip(Graph::from_edges(n, es));
        }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);       // truncated
    CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x1f"), std::invalid_argument);   // byte < 63
    CHECK_THROWS_AS(parse_graph6("A\x7f"), std::invalid_argument);   // byte > 126
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edgelist("3\n0 1\n1 2\n");
    CHECK(g == Graph::from_edges(3, {{0, 1}, {1, 2}}));

    Graph with_comments = parse_edgelist("# triangle\n3\n0 1\n\n0 2\n# mid\n1 2\n");
    CHECK(with_comments == catalog::k3());

    CHECK_THROWS_AS(parse_edgelist(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("two\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edgelist("3\n0 3\n"), std::invalid_argument);

    try {
        parse_edgelist("3\n1 1\n");
        FAIL("loop accepted");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("graph literals") {
    CHECK(parse_graph_literal("P9") == catalog::p9());
    CHECK(parse_graph_literal("cycle:7") == catalog::cycle(7));
    CHECK(parse_graph_literal("Bw") == catalog::k3());
    CHECK_THROWS_AS(parse_graph_literal("no_such_graph"), std::invalid_argument);
}

TEST_CASE("graph literal @file in both formats") {
    const char* path = "io_test_tmp.txt";
    {
        std::ofstream out(path);
        out << "# square\n4\n0 1\n1 2\n2 3\n0 3\n";
    }
    CHECK(parse_graph_literal(std::string("@") + path) == catalog::cycle(4));
    {
        std::ofstream out(path);
        out << emit_graph6(catalog::a6()) << "\n";
    }
    CHECK(parse_graph_literal(std::string("@") + path) == catalog::a6());
    std::remove(path);

    CHECK_THROWS_AS(parse_graph_literal("@/no/such/file"), std::invalid_argument);
}
