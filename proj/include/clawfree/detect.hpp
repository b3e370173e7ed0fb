#ifndef CLAWFREE_DETECT_HPP
#define CLAWFREE_DETECT_HPP

#include <array>
#include <optional>
#include <vector>

#include "clawfree/graph.hpp"

namespace clawfree {

// 3-uniform hypergraph of homogeneous triples (cliques or independent sets).
struct TripleHypergraph {
    int n = 0;
    std::vector<std::array<int, 3>> triples;  // each sorted; list sorted

    bool operator==(const TripleHypergraph&) const = default;
};

TripleHypergraph h3(const Graph& g);

struct Claw {
    int center = -1;
    std::array<int, 3> leaves{};  // sorted, pairwise nonadjacent, all ~ center

    bool operator==(const Claw&) const = default;
};

// Lexicographically least induced K_{1,3} witness (by center, then leaves).
std::optional<Claw> find_claw(const Graph& g);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);
std::optional<std::array<int, 3>> find_cotriangle(const Graph& g);

bool has_triangle(const Graph& g);
bool has_cotriangle(const Graph& g);

enum class ShapeTag { Cycle, Path, Isolated, Other };

struct ComponentShape {
    ShapeTag tag = ShapeTag::Other;
    int length = 0;             // cycle length / path vertex count, 1 for isolated
    std::vector<int> vertices;  // sorted

    bool operator==(const ComponentShape&) const = default;
};

// Components in increasing least-vertex order, each classified exactly.
std::vector<ComponentShape> component_shapes(const Graph& g);

// All components are cycles (length >= min_cycle, even only if even_cycles),
// paths or isolated vertices.
bool shapes_admissible(const std::vector<ComponentShape>& shapes, int min_cycle,
                       bool even_cycles);

// Brute-force oracle: no induced claw in U and none in its complement.
bool is_forb_bruteforce(const Graph& u);

}  // namespace clawfree

#endif
