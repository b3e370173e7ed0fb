#ifndef CLAWFREE_THEOREM_HPP
#define CLAWFREE_THEOREM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clawfree/detect.hpp"
#include "clawfree/edge_graph.hpp"
#include "clawfree/graph.hpp"

namespace clawfree {

enum class Verdict { Member, NonMember };

enum class MemberCase { A6Case, P9Embedding, DirectShape, ComplementShape };

struct ClawWitness {
    bool in_complement = false;  // claw found in the complement
    Claw claw;
};

struct ForbCertificate {
    Verdict verdict = Verdict::NonMember;
    MemberCase member_case = MemberCase::DirectShape;   // Member only
    std::vector<int> embedding;                         // P9Embedding: U-vertex -> P9 vertex
    std::vector<int> a6_iso;                            // A6Case: U-vertex -> A6/A6bar vertex
    bool a6_complement = false;                         // A6Case: target is A6bar
    std::vector<ComponentShape> shapes;                 // shape cases
    std::optional<ClawWitness> witness;                 // NonMember only
};

// Structural classifier for membership in Forb{claw, co-claw}, certified.
ForbCertificate classify(const Graph& u);

// Re-checks a certificate against the graph it was issued for.
bool validate_certificate(const Graph& u, const ForbCertificate& cert);

enum class Cond3Case { P9Embedding, DirectShape, ComplementShape, Fails };

struct Condition3Result {
    Cond3Case c = Cond3Case::Fails;
    std::vector<int> embedding;                     // P9Embedding
    std::vector<ComponentShape> shapes;             // shape cases
    std::optional<ComponentShape> offender;         // Fails: bad component of U
    std::optional<ComponentShape> offender_bar;     // Fails: bad component of complement
};

// Which disjunct of the decomposability condition holds: induced embedding
// into P9, or all components of U (resp. its complement) even cycles, paths
// or isolated vertices.
Condition3Result condition3(const Graph& u);

struct Decomposition {
    Graph g;
    Graph g2;
    std::vector<Edge> a1, a2;  // partition of E(U):    independent sets of S(U)
    std::vector<Edge> b1, b2;  // partition of E(comp): independent sets of S(comp(U))
    std::vector<int> flips_u;      // per-component color flips applied to S(U)
    std::vector<int> flips_ubar;   // same for S(complement(U))
};

struct DecomposeObstruction {
    bool in_complement = false;    // odd walk found in S(complement(U))
    std::vector<Edge> odd_walk;    // walk vertices as base edges
};

// Boolean-sum decomposition U = G (+) G2 with h3(G) = h3(G2), built from the
// canonical bipartitions of S(U) and S(complement(U)).
std::variant<Decomposition, DecomposeObstruction> decompose(const Graph& u);

// All decompositions reachable by per-component color flips; 2^(c1+c2)
// results (or half with dedup_swap, collapsing the global (G,G2) swap).
std::vector<Decomposition> all_decompositions(const Graph& u, bool dedup_swap = false);

bool same_h3(const Graph& g, const Graph& g2);

struct GGUCheck {
    bool a = false;  // same 3-element homogeneous subsets
    bool b = false;  // local indicator condition on boolean_sum(g, g2)
    bool c = false;  // A1/A2 independent in S(U), B1/B2 in S(complement(U))
};

GGUCheck lemma_ggu_check(const Graph& g, const Graph& g2);

}  // namespace clawfree

#endif
