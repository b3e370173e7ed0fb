#ifndef CLAWFREE_HARNESS_HPP
#define CLAWFREE_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clawfree/graph.hpp"

namespace clawfree {

// All labeled graphs on n vertices in increasing edge-bit-mask order.
class LabeledEnumerator {
public:
    explicit LabeledEnumerator(int n);

    std::uint64_t total() const { return total_; }
    Graph at(std::uint64_t mask) const { return Graph::from_edge_mask(n_, mask); }
    int vertex_count() const { return n_; }

private:
    int n_;
    std::uint64_t total_;
};

enum class Property {
    Theorem1,
    Formula1,
    Theorem2,
    LemmaTrivial,
    CaseAnalysis,
    Claims,
    LemmaGGU,          // pairwise: samples (G, G2)
    Thm2Consequences,
};

Property property_from_name(const std::string& name);
std::string property_name(Property p);
const std::vector<std::string>& property_names();

// LemmaGGU quantifies over pairs of graphs and is sample-only.
bool property_is_pairwise(Property p);

// Single-instance checkers (true = property holds on this instance).
bool check_property(Property p, const Graph& u);
bool check_property_pair(const Graph& g, const Graph& g2);

struct Mismatch {
    std::uint64_t mask = 0;
    std::optional<std::uint64_t> mask2;  // pairwise properties only

    bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
    std::string property;
    int n = 0;
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;
    std::optional<std::uint64_t> sample;  // absent = exhaustive
    std::uint64_t seed = 0;
    double wall_ms = 0.0;                 // excluded from serialized reports

    bool passed() const { return mismatches.empty(); }
    bool same_outcome(const VerificationReport& other) const;
};

struct VerifyOptions {
    std::optional<std::uint64_t> sample;  // required for n >= 8 and pairwise
    std::uint64_t seed = 0;
    int jobs = 1;
};

// OpenMP sweep; deterministic merge (chunks in index order, mismatches
// ascending), so the report matches verify_serial for any job count.
VerificationReport verify(Property p, int n, const VerifyOptions& opts);

// Plain single-loop reference implementation, kept for testing.
VerificationReport verify_serial(Property p, int n, const VerifyOptions& opts);

// Counter-based sample stream: deterministic mask for (seed, index).
std::uint64_t sample_mask(std::uint64_t seed, std::uint64_t index, int bits);

}  // namespace clawfree

#endif
