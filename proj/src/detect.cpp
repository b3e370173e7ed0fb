#include "clawfree/detect.hpp"

#include <bit>

namespace clawfree {

TripleHypergraph h3(const Graph& g) {
    TripleHypergraph h;
    h.n = g.vertex_count();
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            for (int c = b + 1; c < h.n; ++c) {
                int e = g.indicator(a, b) + g.indicator(a, c) + g.indicator(b, c);
                if (e == 0 || e == 3) h.triples.push_back({a, b, c});
            }
    return h;
}

std::optional<Claw> find_claw(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) < 3) continue;
        std::uint64_t nb = g.neighbors(c);
        for (int a = 0; a < n; ++a) {
            if (!((nb >> a) & 1u)) continue;
            for (int b = a + 1; b < n; ++b) {
                if (!((nb >> b) & 1u) || g.adjacent(a, b)) continue;
                // third leaf: neighbor of c, nonadjacent to a and b
                std::uint64_t cand = nb & ~g.neighbors(a) & ~g.neighbors(b);
                cand &= ~((2ull << b) - 1);  // leaves ascending: > b
                if (cand) {
                    int d = std::countr_zero(cand);
                    return Claw{c, {a, b, d}};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            std::uint64_t common = g.neighbors(a) & g.neighbors(b) & ~((2ull << b) - 1);
            if (common) return std::array<int, 3>{a, b, std::countr_zero(common)};
        }
    return std::nullopt;
}

std::optional<std::array<int, 3>> find_cotriangle(const Graph& g) {
    return find_triangle(complement(g));
}

bool has_triangle(const Graph& g) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        std::uint64_t nb = g.neighbors(a);
        for (int b = a + 1; b < n; ++b)
            if (((nb >> b) & 1u) && (nb & g.neighbors(b))) return true;
    }
    return false;
}

bool has_cotriangle(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t full = g.full_vertex_mask();
    for (int a = 0; a < n; ++a) {
        std::uint64_t non = full & ~g.neighbors(a) & ~(1ull << a);
        for (int b = a + 1; b < n; ++b)
            if (((non >> b) & 1u) &&
                (non & (full & ~g.neighbors(b) & ~(1ull << b)) & ~((2ull << b) - 1)))
                return true;
    }
    return false;
}

std::vector<ComponentShape> component_shapes(const Graph& g) {
    int n = g.vertex_count();
    std::vector<ComponentShape> out;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ComponentShape shape;
        std::vector<int>& comp = shape.vertices;
        comp.push_back(s);
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int v = comp[head];
            for (int u = 0; u < n; ++u)
                if (g.adjacent(v, u) && !seen[u]) {
                    seen[u] = true;
                    comp.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        int size = static_cast<int>(comp.size());
        int max_deg = 0, deg2 = 0;
        for (int v : comp) {
            int d = g.degree(v);
            max_deg = std::max(max_deg, d);
            if (d == 2) ++deg2;
        }
        if (size == 1) {
            shape.tag = ShapeTag::Isolated;
            shape.length = 1;
        } else if (max_deg <= 2 && deg2 == size) {
            shape.tag = ShapeTag::Cycle;  // connected, all degree 2
            shape.length = size;
        } else if (max_deg <= 2) {
            shape.tag = ShapeTag::Path;   // connected, degrees <= 2, not a cycle
            shape.length = size;
        } else {
            shape.tag = ShapeTag::Other;
            shape.length = size;
        }
        out.push_back(std::move(shape));
    }
    return out;
}

bool shapes_admissible(const std::vector<ComponentShape>& shapes, int min_cycle,
                       bool even_cycles) {
    for (const auto& s : shapes) {
        switch (s.tag) {
            case ShapeTag::Isolated:
            case ShapeTag::Path:
                break;
            case ShapeTag::Cycle:
                if (s.length < min_cycle) return false;
                if (even_cycles && s.length % 2 != 0) return false;
                break;
            case ShapeTag::Other:
                return false;
        }
    }
    return true;
}

bool is_forb_bruteforce(const Graph& u) {
    return !find_claw(u) && !find_claw(complement(u));
}

}  // namespace clawfree
