#include "clawfree/catalog.hpp"

#include <cctype>
#include <stdexcept>

namespace clawfree::catalog {

Graph k3() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph k3bar() { return Graph(3); }
Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }
Graph clawbar() { return complement(claw()); }

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph::from_edges(n, es);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph a6() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2},
                                 {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}
Graph a6bar() { return complement(a6()); }

Graph b5() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}); }

Graph e6() {
    // square 0-1-2-3 bounded by the triangles {0,1,4} and {1,2,5}
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                 {0, 4}, {1, 4}, {1, 5}, {2, 5}});
}
Graph e6bar() { return complement(e6()); }

Graph p9() { return cartesian_product(k3(), k3()); }
Graph p9bar() { return complement(p9()); }

Graph p9_minus_v() {
    std::vector<int> keep;
    for (int v = 1; v < 9; ++v) keep.push_back(v);
    return induced_on(p9(), keep);
}

Graph p9_minus_edge() {
    // delete both endpoints of the least edge; edge-transitivity makes the
    // choice irrelevant up to isomorphism
    Edge e = p9().edges().front();
    std::vector<int> keep;
    for (int v = 0; v < 9; ++v)
        if (v != e.first && v != e.second) keep.push_back(v);
    return induced_on(p9(), keep);
}

Graph p9_minus_edge_bar() { return complement(p9_minus_edge()); }

namespace {

// "cycle:5", "cycle(5)", "path:4", "path(4)"
bool parse_parametric(const std::string& name, const std::string& prefix, int& out) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
        return false;
    std::string rest = name.substr(prefix.size());
    if (rest.front() == ':') rest = rest.substr(1);
    else if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    else return false;
    if (rest.empty()) return false;
    for (char c : rest)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    long v = std::stol(rest);
    if (v > kMaxVertices) throw std::invalid_argument("catalog: " + prefix + " size exceeds 62");
    out = static_cast<int>(v);
    return true;
}

}  // namespace

Graph named(const std::string& name) {
    if (name == "K3") return k3();
    if (name == "K3bar") return k3bar();
    if (name == "claw") return claw();
    if (name == "clawbar") return clawbar();
    if (name == "A6") return a6();
    if (name == "A6bar") return a6bar();
    if (name == "B5") return b5();
    if (name == "E6") return e6();
    if (name == "E6bar") return e6bar();
    if (name == "P9") return p9();
    if (name == "P9bar") return p9bar();
    if (name == "P9_minus_v") return p9_minus_v();
    if (name == "P9_minus_edge") return p9_minus_edge();
    if (name == "P9_minus_edge_bar") return p9_minus_edge_bar();
    int n = 0;
    if (parse_parametric(name, "cycle", n)) return cycle(n);
    if (parse_parametric(name, "path", n)) return path(n);
    throw std::invalid_argument("catalog: unknown graph name '" + name + "'");
}

bool is_catalog_name(const std::string& name) {
    try {
        named(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

const std::vector<Graph>& nine_graphs() {
    static const std::vector<Graph> g = {b5(), a6(), a6bar(), e6(), e6bar(),
                                         p9_minus_edge(), p9_minus_edge_bar(),
                                         p9_minus_v(), p9()};
    return g;
}

const std::vector<std::string>& nine_graph_names() {
    static const std::vector<std::string> names = {
        "B5", "A6", "A6bar", "E6", "E6bar",
        "P9_minus_edge", "P9_minus_edge_bar", "P9_minus_v", "P9"};
    return names;
}

}  // namespace clawfree::catalog
