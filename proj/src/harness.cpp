#include "clawfree/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "clawfree/catalog.hpp"
#include "clawfree/detect.hpp"
#include "clawfree/edge_graph.hpp"
#include "clawfree/theorem.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clawfree {

LabeledEnumerator::LabeledEnumerator(int n) : n_(n) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumerate_labeled: need 1 <= n <= 9");
    total_ = 1ull << pair_count(n);
}

Property property_from_name(const std::string& name) {
    if (name == "theorem1") return Property::Theorem1;
    if (name == "formula1") return Property::Formula1;
    if (name == "theorem2") return Property::Theorem2;
    if (name == "lemma_trivial") return Property::LemmaTrivial;
    if (name == "caseanalysis") return Property::CaseAnalysis;
    if (name == "claims") return Property::Claims;
    if (name == "lemma_ggu") return Property::LemmaGGU;
    if (name == "thm2_consequences") return Property::Thm2Consequences;
    throw std::invalid_argument("unknown property '" + name + "'");
}

std::string property_name(Property p) {
    switch (p) {
        case Property::Theorem1: return "theorem1";
        case Property::Formula1: return "formula1";
        case Property::Theorem2: return "theorem2";
        case Property::LemmaTrivial: return "lemma_trivial";
        case Property::CaseAnalysis: return "caseanalysis";
        case Property::Claims: return "claims";
        case Property::LemmaGGU: return "lemma_ggu";
        case Property::Thm2Consequences: return "thm2_consequences";
    }
    return "?";
}

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "theorem1", "formula1", "theorem2", "lemma_trivial",
        "caseanalysis", "claims", "lemma_ggu", "thm2_consequences"};
    return names;
}

bool property_is_pairwise(Property p) { return p == Property::LemmaGGU; }

namespace {

bool vertex_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u = 0; u < n; ++u) {
                if (!g.adjacent(v, u)) continue;
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool both_edge_graphs_bipartite(const Graph& u) {
    return std::holds_alternative<TwoColoring>(bipartition(edge_graph(u))) &&
           std::holds_alternative<TwoColoring>(bipartition(edge_graph(complement(u))));
}

bool check_theorem1(const Graph& u) {
    ForbCertificate cert = classify(u);
    if (!validate_certificate(u, cert)) return false;
    return (cert.verdict == Verdict::Member) == is_forb_bruteforce(u);
}

bool check_formula1(const Graph& u) {
    bool claw_free = !find_claw(u);
    bool s_triangle_free = !has_triangle(to_graph(edge_graph(u)));
    return claw_free == s_triangle_free;
}

bool check_theorem2(const Graph& u) {
    auto dec = decompose(u);
    bool dec_ok = std::holds_alternative<Decomposition>(dec);
    if (dec_ok != both_edge_graphs_bipartite(u)) return false;
    if (dec_ok != (condition3(u).c != Cond3Case::Fails)) return false;
    if (dec_ok) {
        const auto& d = std::get<Decomposition>(dec);
        if (!(boolean_sum(d.g, d.g2) == u)) return false;
        if (!same_h3(d.g, d.g2)) return false;
    }
    return true;
}

bool check_lemma_trivial(const Graph& u) {
    bool lhs = !find_claw(u) && !has_triangle(u);
    bool rhs = shapes_admissible(component_shapes(u), 4, false);
    return lhs == rhs;
}

bool check_caseanalysis(const Graph& u) {
    if (!has_triangle(u) || !has_cotriangle(u)) return true;
    if (!is_forb_bruteforce(u)) return true;
    std::vector<int> degs;
    for (int v = 0; v < u.vertex_count(); ++v) degs.push_back(u.degree(v));
    std::sort(degs.begin(), degs.end());
    for (const Graph& cand : catalog::nine_graphs()) {
        if (cand.vertex_count() != u.vertex_count() ||
            cand.edge_count() != u.edge_count())
            continue;
        std::vector<int> cd;
        for (int v = 0; v < cand.vertex_count(); ++v) cd.push_back(cand.degree(v));
        std::sort(cd.begin(), cd.end());
        if (cd != degs) continue;
        if (is_isomorphic(u, cand)) return true;
    }
    return false;
}

bool triangle_through(const Graph& g, int x) {
    std::uint64_t nb = g.neighbors(x);
    for (int a = 0; a < g.vertex_count(); ++a)
        if (((nb >> a) & 1u) && (nb & g.neighbors(a) & ~((2ull << a) - 1))) return true;
    return false;
}

bool cotriangle_through(const Graph& g, int x) {
    int n = g.vertex_count();
    std::uint64_t non = g.full_vertex_mask() & ~g.neighbors(x) & ~(1ull << x);
    for (int a = 0; a < n; ++a) {
        if (!((non >> a) & 1u)) continue;
        std::uint64_t rest = non & ~g.neighbors(a) & ~((2ull << a) - 1);
        if (rest) return true;
    }
    return false;
}

// The local indicator characterization of membership in the Forb class.
bool syntaxic_predicate(const Graph& u) {
    int n = u.vertex_count();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int a = 0; a < n; ++a) {
                if (a == x || a == y) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (b == x || b == y) continue;
                    if (u.indicator(x, a) == u.indicator(x, b) &&
                        u.indicator(y, a) == u.indicator(y, b) &&
                        u.indicator(x, a) != u.indicator(y, a) &&
                        u.indicator(x, y) != u.indicator(a, b))
                        return false;
                }
            }
    return true;
}

bool check_claims(const Graph& u) {
    int n = u.vertex_count();
    Graph ubar = complement(u);
    bool claw_free = !find_claw(u);
    bool forb = claw_free && !find_claw(ubar);

    // every vertex of degree >= 3 of a claw-free graph lies in a triangle
    if (claw_free)
        for (int x = 0; x < n; ++x)
            if (u.degree(x) >= 3 && !triangle_through(u, x)) return false;

    // a graph with both a triangle and a co-triangle has a pair sharing a
    // vertex; with a vertex-disjoint pair it has at least five homogeneous
    // triples
    if (has_triangle(u) && has_cotriangle(u)) {
        bool shared = false;
        for (int x = 0; x < n && !shared; ++x)
            shared = triangle_through(u, x) && cotriangle_through(u, x);
        if (!shared) return false;

        std::vector<std::uint64_t> tris, cotris;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    int e = u.indicator(a, b) + u.indicator(a, c) + u.indicator(b, c);
                    if (e != 0 && e != 3) continue;
                    (e == 3 ? tris : cotris).push_back((1ull << a) | (1ull << b) | (1ull << c));
                }
        bool disjoint_pair = false;
        for (std::uint64_t t : tris) {
            for (std::uint64_t s : cotris)
                if (!(t & s)) { disjoint_pair = true; break; }
            if (disjoint_pair) break;
        }
        if (disjoint_pair && tris.size() + cotris.size() < 5) return false;
    }

    // membership matches the syntactic characterization
    if (forb != syntaxic_predicate(u)) return false;

    if (forb) {
        // |N_U(x) inter N_Ubar(y)| <= 2
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (std::popcount(u.neighbors(x) & ubar.neighbors(y)) > 2) return false;
            }
        for (int x = 0; x < n; ++x) {
            std::uint64_t nb = u.neighbors(x);
            std::uint64_t non = u.full_vertex_mask() & ~nb & ~(1ull << x);
            // triangle {x,a,b} + co-triangle {x,c,d} induce a bull on their union
            for (int a = 0; a < n; ++a) {
                if (!((nb >> a) & 1u)) continue;
                for (int b = a + 1; b < n; ++b) {
                    if (!((nb >> b) & 1u) || !u.adjacent(a, b)) continue;
                    for (int c = 0; c < n; ++c) {
                        if (!((non >> c) & 1u)) continue;
                        for (int d = c + 1; d < n; ++d) {
                            if (!((non >> d) & 1u) || u.adjacent(c, d)) continue;
                            int ac = u.indicator(a, c), ad = u.indicator(a, d);
                            int bc = u.indicator(b, c), bd = u.indicator(b, d);
                            bool bull = (ac && bd && !ad && !bc) || (ad && bc && !ac && !bd);
                            if (!bull) return false;
                        }
                    }
                }
            }
            if (cotriangle_through(u, x)) {
                // degree bound, and no two triangles through x share an edge
                if (u.degree(x) > 4) return false;
                for (int b = 0; b < n; ++b)
                    if (((nb >> b) & 1u) && std::popcount(nb & u.neighbors(b)) > 1)
                        return false;
            }
        }
    }
    return true;
}

bool check_thm2_consequences(const Graph& u) {
    if (!both_edge_graphs_bipartite(u)) return true;
    auto shapes = component_shapes(u);
    bool triangle_free = !has_triangle(u);
    if (shapes.size() > 1 && !triangle_free) return false;
    if (triangle_free) {
        if (!shapes_admissible(shapes, 4, true)) return false;
        if (!vertex_bipartite(u)) return false;
    }
    return true;
}

std::uint64_t mask_bits_cap(int bits) {
    return bits >= 64 ? ~0ull : (1ull << bits) - 1;
}

}  // namespace

bool check_property(Property p, const Graph& u) {
    switch (p) {
        case Property::Theorem1: return check_theorem1(u);
        case Property::Formula1: return check_formula1(u);
        case Property::Theorem2: return check_theorem2(u);
        case Property::LemmaTrivial: return check_lemma_trivial(u);
        case Property::CaseAnalysis: return check_caseanalysis(u);
        case Property::Claims: return check_claims(u);
        case Property::Thm2Consequences: return check_thm2_consequences(u);
        case Property::LemmaGGU:
            throw std::invalid_argument("lemma_ggu is a pairwise property");
    }
    return false;
}

bool check_property_pair(const Graph& g, const Graph& g2) {
    GGUCheck r = lemma_ggu_check(g, g2);
    return r.a == r.b && r.b == r.c;
}

std::uint64_t sample_mask(std::uint64_t seed, std::uint64_t index, int bits) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return z & mask_bits_cap(bits);
}

namespace {

struct SweepPlan {
    int n;
    int bits;
    std::uint64_t total;
    bool pairwise;
    bool sampled;
    std::uint64_t seed;
};

SweepPlan make_plan(Property p, int n, const VerifyOptions& opts) {
    if (n < 1 || n > 9) throw std::invalid_argument("verify: need 1 <= n <= 9");
    SweepPlan plan{};
    plan.n = n;
    plan.bits = pair_count(n);
    plan.pairwise = property_is_pairwise(p);
    plan.seed = opts.seed;
    if (plan.pairwise || n >= 8) {
        if (!opts.sample)
            throw std::invalid_argument("verify: --sample required for this property/size");
    }
    plan.sampled = opts.sample.has_value();
    plan.total = plan.sampled ? *opts.sample : (1ull << plan.bits);
    return plan;
}

// true = instance passes; fills mismatch identifiers on failure
bool run_one(Property p, const SweepPlan& plan, std::uint64_t index, Mismatch& mm) {
    if (plan.pairwise) {
        std::uint64_t m1 = sample_mask(plan.seed, 2 * index, plan.bits);
        std::uint64_t m2 = sample_mask(plan.seed, 2 * index + 1, plan.bits);
        if (check_property_pair(Graph::from_edge_mask(plan.n, m1),
                                Graph::from_edge_mask(plan.n, m2)))
            return true;
        mm = Mismatch{m1, m2};
        return false;
    }
    std::uint64_t mask = plan.sampled ? sample_mask(plan.seed, index, plan.bits) : index;
    if (check_property(p, Graph::from_edge_mask(plan.n, mask))) return true;
    mm = Mismatch{mask, std::nullopt};
    return false;
}

VerificationReport finish_report(Property p, const SweepPlan& plan,
                                 std::vector<Mismatch> mismatches,
                                 std::chrono::steady_clock::time_point start) {
    VerificationReport rep;
    rep.property = property_name(p);
    rep.n = plan.n;
    rep.checked = plan.total;
    rep.mismatches = std::move(mismatches);
    if (plan.sampled) {
        rep.sample = plan.total;
        rep.seed = plan.seed;
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace

bool VerificationReport::same_outcome(const VerificationReport& other) const {
    return property == other.property && n == other.n && checked == other.checked &&
           mismatches == other.mismatches && sample == other.sample && seed == other.seed;
}

VerificationReport verify_serial(Property p, int n, const VerifyOptions& opts) {
    SweepPlan plan = make_plan(p, n, opts);
    auto start = std::chrono::steady_clock::now();
    std::vector<Mismatch> mm;
    for (std::uint64_t i = 0; i < plan.total; ++i) {
        Mismatch m;
        if (!run_one(p, plan, i, m)) mm.push_back(m);
    }
    return finish_report(p, plan, std::move(mm), start);
}

VerificationReport verify(Property p, int n, const VerifyOptions& opts) {
    SweepPlan plan = make_plan(p, n, opts);
    auto start = std::chrono::steady_clock::now();
    int jobs = std::max(1, opts.jobs);
    std::uint64_t chunks = std::min<std::uint64_t>(
        plan.total, static_cast<std::uint64_t>(jobs) * 16);
    if (chunks == 0) chunks = 1;
    std::vector<std::vector<Mismatch>> per_chunk(chunks);
    std::int64_t nchunks = static_cast<std::int64_t>(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
    for (std::int64_t c = 0; c < nchunks; ++c) {
        std::uint64_t lo = plan.total * c / chunks;
        std::uint64_t hi = plan.total * (c + 1) / chunks;
        auto& local = per_chunk[c];
        for (std::uint64_t i = lo; i < hi; ++i) {
            Mismatch m;
            if (!run_one(p, plan, i, m)) local.push_back(m);
        }
    }
    std::vector<Mismatch> mm;
    for (auto& chunk : per_chunk) mm.insert(mm.end(), chunk.begin(), chunk.end());
    return finish_report(p, plan, std::move(mm), start);
}

}  // namespace clawfree
