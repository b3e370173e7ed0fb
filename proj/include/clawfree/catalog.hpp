#ifndef CLAWFREE_CATALOG_HPP
#define CLAWFREE_CATALOG_HPP

#include <string>
#include <vector>

#include "clawfree/graph.hpp"

namespace clawfree::catalog {

// Fixed labeled representatives of the named graphs.
Graph k3();
Graph k3bar();
Graph claw();       // center 0 adjacent to leaves 1,2,3
Graph clawbar();
Graph cycle(int n);  // n >= 3
Graph path(int n);   // n >= 1 vertices
Graph a6();          // inner triangle {0,1,2}; 3~{0,1}, 4~{1,2}, 5~{0,2}
Graph a6bar();
Graph b5();          // the bull: triangle {0,1,2} + pendant edges {0,3},{1,4}
Graph e6();
Graph e6bar();
Graph p9();          // Paley graph on 9 vertices, built as K3 box K3
Graph p9bar();
Graph p9_minus_v();
Graph p9_minus_edge();
Graph p9_minus_edge_bar();

// Lookup by name; accepts "cycle:N"/"cycle(N)" and "path:N"/"path(N)".
// Throws std::invalid_argument on unknown names.
Graph named(const std::string& name);

bool is_catalog_name(const std::string& name);

// The nine graphs of the case analysis for members containing both a
// triangle and a co-triangle, in a fixed order:
// B5, A6, A6bar, E6, E6bar, P9-eps, complement(P9-eps), P9-v, P9.
const std::vector<Graph>& nine_graphs();
const std::vector<std::string>& nine_graph_names();

}  // namespace clawfree::catalog

#endif
