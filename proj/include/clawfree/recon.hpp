#ifndef CLAWFREE_RECON_HPP
#define CLAWFREE_RECON_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "clawfree/graph.hpp"

namespace clawfree {

// H isomorphic to G or to complement(G).
bool iso_utc(const Graph& g, const Graph& h);

struct HypomorphyReport {
    int k = 0;
    bool result = false;
    std::optional<std::vector<int>> failing_subset;  // first failure, lexicographic
};

// Every k-subset K induces subgraphs isomorphic up to complementation.
HypomorphyReport hypomorphic_utc(const Graph& g, const Graph& h, int k);

// Exhaustive search over all labeled graphs on the same vertices for a
// k-hypomorphic-utc partner not isomorphic-utc to g; requires n <= 6.
std::optional<Graph> reconstructible_utc(const Graph& g, int k);

// (k-hypomorphic-utc => t-hypomorphic-utc); requires t <= min(k, n-k).
bool check_prop_down(const Graph& g, const Graph& h, int k, int t);

// Precomputed per-mask data for fast pair sweeps over all labeled graphs on
// v vertices: for each edge mask, the canonical iso-utc code and the vector,
// indexed by k-subset, of induced-subgraph iso-utc codes.
struct ReconTable {
    int v = 0;
    int k = 0;
    std::vector<std::uint64_t> canon_utc;            // by mask
    std::vector<std::vector<std::uint64_t>> sig;     // by mask, per k-subset
};

ReconTable build_recon_table(int v, int k);

struct ReconSweepResult {
    std::uint64_t graphs = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> failures;  // (g mask, h mask)
};

// Runs reconstructible_utc over all labeled graphs on v vertices; for each
// non-reconstructible g records its first counterexample.
ReconSweepResult recon_sweep(int v, int k);

struct PropDownResult {
    std::uint64_t pairs = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;
};

// Exhaustive pair sweep of the downward hypomorphy implication.
PropDownResult propdown_sweep(int v, int k, int t, int jobs = 1);

}  // namespace clawfree

#endif
