#include "clawfree/theorem.hpp"

#include <algorithm>
#include <stdexcept>

#include "clawfree/catalog.hpp"

namespace clawfree {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

struct NineEntry {
    Graph graph;
    std::vector<int> degrees;
    int edge_count;
    bool is_a6;
    bool is_a6bar;
};

const std::vector<NineEntry>& nine_entries() {
    static const std::vector<NineEntry> entries = [] {
        std::vector<NineEntry> out;
        const auto& graphs = catalog::nine_graphs();
        const auto& names = catalog::nine_graph_names();
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out.push_back({graphs[i], sorted_degrees(graphs[i]), graphs[i].edge_count(),
                           names[i] == "A6", names[i] == "A6bar"});
        return out;
    }();
    return entries;
}

ForbCertificate nonmember_with_witness(const Graph& u) {
    ForbCertificate cert;
    cert.verdict = Verdict::NonMember;
    if (auto claw = find_claw(u)) {
        cert.witness = ClawWitness{false, *claw};
    } else if (auto cobar = find_claw(complement(u))) {
        cert.witness = ClawWitness{true, *cobar};
    } else {
        throw std::logic_error("classify: non-member without a claw witness");
    }
    return cert;
}

}  // namespace

ForbCertificate classify(const Graph& u) {
    if (!has_triangle(u)) {
        auto shapes = component_shapes(u);
        if (shapes_admissible(shapes, 4, false)) {
            ForbCertificate cert;
            cert.verdict = Verdict::Member;
            cert.member_case = MemberCase::DirectShape;
            cert.shapes = std::move(shapes);
            return cert;
        }
        // triangle-free with a bad component forces a claw in U
        return nonmember_with_witness(u);
    }
    Graph ubar = complement(u);
    if (!has_triangle(ubar)) {
        auto shapes = component_shapes(ubar);
        if (shapes_admissible(shapes, 4, false)) {
            ForbCertificate cert;
            cert.verdict = Verdict::Member;
            cert.member_case = MemberCase::ComplementShape;
            cert.shapes = std::move(shapes);
            return cert;
        }
        return nonmember_with_witness(u);
    }
    // both a triangle and a co-triangle: member only for the nine known graphs
    int n = u.vertex_count();
    if (n >= 5 && n <= 9) {
        int ec = u.edge_count();
        std::vector<int> degs = sorted_degrees(u);
        for (const auto& entry : nine_entries()) {
            if (entry.graph.vertex_count() != n || entry.edge_count != ec ||
                entry.degrees != degs)
                continue;
            auto iso = is_isomorphic(u, entry.graph);
            if (!iso) continue;
            ForbCertificate cert;
            cert.verdict = Verdict::Member;
            if (entry.is_a6 || entry.is_a6bar) {
                cert.member_case = MemberCase::A6Case;
                cert.a6_iso = *iso;
                cert.a6_complement = entry.is_a6bar;
            } else {
                cert.member_case = MemberCase::P9Embedding;
                auto emb = find_induced_embedding(u, catalog::p9());
                if (!emb) throw std::logic_error("classify: catalog graph fails to embed into P9");
                cert.embedding = *emb;
            }
            return cert;
        }
    }
    return nonmember_with_witness(u);
}

bool validate_certificate(const Graph& u, const ForbCertificate& cert) {
    int n = u.vertex_count();
    if (cert.verdict == Verdict::NonMember) {
        if (!cert.witness) return false;
        const Graph host = cert.witness->in_complement ? complement(u) : u;
        const Claw& cw = cert.witness->claw;
        auto [a, b, c] = cw.leaves;
        std::vector<int> vs{cw.center, a, b, c};
        std::sort(vs.begin(), vs.end());
        if (std::unique(vs.begin(), vs.end()) != vs.end()) return false;
        for (int v : vs)
            if (v < 0 || v >= n) return false;
        return host.adjacent(cw.center, a) && host.adjacent(cw.center, b) &&
               host.adjacent(cw.center, c) && !host.adjacent(a, b) &&
               !host.adjacent(a, c) && !host.adjacent(b, c);
    }
    switch (cert.member_case) {
        case MemberCase::DirectShape:
            return cert.shapes == component_shapes(u) &&
                   shapes_admissible(cert.shapes, 4, false);
        case MemberCase::ComplementShape:
            return cert.shapes == component_shapes(complement(u)) &&
                   shapes_admissible(cert.shapes, 4, false);
        case MemberCase::A6Case: {
            const Graph target = cert.a6_complement ? catalog::a6bar() : catalog::a6();
            if (static_cast<int>(cert.a6_iso.size()) != n || n != 6) return false;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (u.adjacent(i, j) != target.adjacent(cert.a6_iso[i], cert.a6_iso[j]))
                        return false;
            return true;
        }
        case MemberCase::P9Embedding: {
            if (static_cast<int>(cert.embedding.size()) != n) return false;
            Graph p9 = catalog::p9();
            std::uint64_t used = 0;
            for (int v : cert.embedding) {
                if (v < 0 || v >= 9 || ((used >> v) & 1u)) return false;
                used |= 1ull << v;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (u.adjacent(i, j) != p9.adjacent(cert.embedding[i], cert.embedding[j]))
                        return false;
            return true;
        }
    }
    return false;
}

Condition3Result condition3(const Graph& u) {
    Condition3Result res;
    auto shapes = component_shapes(u);
    if (shapes_admissible(shapes, 4, true)) {
        res.c = Cond3Case::DirectShape;
        res.shapes = std::move(shapes);
        return res;
    }
    Graph ubar = complement(u);
    auto shapes_bar = component_shapes(ubar);
    if (shapes_admissible(shapes_bar, 4, true)) {
        res.c = Cond3Case::ComplementShape;
        res.shapes = std::move(shapes_bar);
        return res;
    }
    if (u.vertex_count() <= 9) {
        if (auto emb = find_induced_embedding(u, catalog::p9())) {
            res.c = Cond3Case::P9Embedding;
            res.embedding = *emb;
            return res;
        }
    }
    res.c = Cond3Case::Fails;
    auto first_bad = [](const std::vector<ComponentShape>& ss) -> std::optional<ComponentShape> {
        for (const auto& s : ss)
            if (s.tag == ShapeTag::Other || (s.tag == ShapeTag::Cycle && (s.length < 4 || s.length % 2 != 0)))
                return s;
        return std::nullopt;
    };
    res.offender = first_bad(shapes);
    res.offender_bar = first_bad(shapes_bar);
    return res;
}

namespace {

Decomposition build_decomposition(const Graph& u, const EdgeGraph& s,
                                  const EdgeGraph& sbar, const TwoColoring& cu,
                                  const TwoColoring& cbar,
                                  std::vector<int> flips_u,
                                  std::vector<int> flips_ubar) {
    Decomposition d;
    d.flips_u = std::move(flips_u);
    d.flips_ubar = std::move(flips_ubar);
    std::vector<int> col_u(cu.color), col_b(cbar.color);
    for (std::size_t c = 0; c < cu.components.size(); ++c)
        if (d.flips_u[c])
            for (int v : cu.components[c].vertices) col_u[v] ^= 1;
    for (std::size_t c = 0; c < cbar.components.size(); ++c)
        if (d.flips_ubar[c])
            for (int v : cbar.components[c].vertices) col_b[v] ^= 1;
    for (int v = 0; v < s.vertex_count(); ++v)
        (col_u[v] == 0 ? d.a1 : d.a2).push_back(s.verts[v]);
    for (int v = 0; v < sbar.vertex_count(); ++v)
        (col_b[v] == 0 ? d.b1 : d.b2).push_back(sbar.verts[v]);
    std::vector<Edge> ge(d.a1), g2e(d.a2);
    ge.insert(ge.end(), d.b1.begin(), d.b1.end());
    g2e.insert(g2e.end(), d.b1.begin(), d.b1.end());
    d.g = Graph::from_edges(u.vertex_count(), ge);
    d.g2 = Graph::from_edges(u.vertex_count(), g2e);
    return d;
}

}  // namespace

std::variant<Decomposition, DecomposeObstruction> decompose(const Graph& u) {
    EdgeGraph s = edge_graph(u);
    EdgeGraph sbar = edge_graph(complement(u));
    auto bu = bipartition(s);
    if (auto* walk = std::get_if<OddWalk>(&bu)) {
        DecomposeObstruction obs;
        obs.in_complement = false;
        for (int v : *walk) obs.odd_walk.push_back(s.verts[v]);
        return obs;
    }
    auto bb = bipartition(sbar);
    if (auto* walk = std::get_if<OddWalk>(&bb)) {
        DecomposeObstruction obs;
        obs.in_complement = true;
        for (int v : *walk) obs.odd_walk.push_back(sbar.verts[v]);
        return obs;
    }
    const auto& cu = std::get<TwoColoring>(bu);
    const auto& cbar = std::get<TwoColoring>(bb);
    return build_decomposition(u, s, sbar, cu, cbar,
                               std::vector<int>(cu.components.size(), 0),
                               std::vector<int>(cbar.components.size(), 0));
}

std::vector<Decomposition> all_decompositions(const Graph& u, bool dedup_swap) {
    EdgeGraph s = edge_graph(u);
    EdgeGraph sbar = edge_graph(complement(u));
    auto bu = bipartition(s);
    auto bb = bipartition(sbar);
    if (!std::holds_alternative<TwoColoring>(bu) || !std::holds_alternative<TwoColoring>(bb))
        throw std::invalid_argument("all_decompositions: edge-graphs not both bipartite");
    const auto& cu = std::get<TwoColoring>(bu);
    const auto& cbar = std::get<TwoColoring>(bb);
    std::size_t c1 = cu.components.size(), c2 = cbar.components.size();
    if (c1 + c2 > 20)
        throw std::invalid_argument("all_decompositions: component count exceeds guard");
    std::vector<Decomposition> out;
    for (std::uint64_t mask = 0; mask < (1ull << (c1 + c2)); ++mask) {
        if (dedup_swap && c1 >= 1 && (mask & 1u)) continue;
        std::vector<int> fu(c1), fb(c2);
        for (std::size_t i = 0; i < c1; ++i) fu[i] = (mask >> i) & 1u;
        for (std::size_t i = 0; i < c2; ++i) fb[i] = (mask >> (c1 + i)) & 1u;
        out.push_back(build_decomposition(u, s, sbar, cu, cbar, std::move(fu), std::move(fb)));
    }
    return out;
}

bool same_h3(const Graph& g, const Graph& g2) {
    if (g.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("same_h3: vertex counts differ");
    return h3(g) == h3(g2);
}

GGUCheck lemma_ggu_check(const Graph& g, const Graph& g2) {
    if (g.vertex_count() != g2.vertex_count())
        throw std::invalid_argument("lemma_ggu_check: vertex counts differ");
    int n = g.vertex_count();
    Graph u = boolean_sum(g, g2);
    GGUCheck res;
    res.a = same_h3(g, g2);
    // (b): U({x,y}) = U({x,z}) != U({y,z})  =>  G({x,y}) != G({x,z})
    res.b = true;
    for (int x = 0; x < n && res.b; ++x)
        for (int y = 0; y < n && res.b; ++y) {
            if (y == x) continue;
            for (int z = y + 1; z < n; ++z) {
                if (z == x) continue;
                if (u.indicator(x, y) == u.indicator(x, z) &&
                    u.indicator(x, y) != u.indicator(y, z) &&
                    g.indicator(x, y) == g.indicator(x, z)) {
                    res.b = false;
                    break;
                }
            }
        }
    // (c): A1/A2 independent in S(U), B1/B2 independent in S(complement(U)),
    // with A1 = E(U) inter E(G), B1 = E(comp U) inter E(G).
    auto side_independent = [&g](const EdgeGraph& s) {
        for (int a = 0; a < s.vertex_count(); ++a) {
            auto [x1, y1] = s.verts[a];
            for (int b : s.adj[a]) {
                if (b < a) continue;
                auto [x2, y2] = s.verts[b];
                if (g.adjacent(x1, y1) == g.adjacent(x2, y2)) return false;
            }
        }
        return true;
    };
    res.c = side_independent(edge_graph(u)) && side_independent(edge_graph(complement(u)));
    return res;
}

}  // namespace clawfree
