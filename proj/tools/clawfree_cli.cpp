#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clawfree/catalog.hpp"
#include "clawfree/detect.hpp"
#include "clawfree/edge_graph.hpp"
#include "clawfree/graph.hpp"
#include "clawfree/graph_io.hpp"
#include "clawfree/harness.hpp"
#include "clawfree/recon.hpp"
#include "clawfree/theorem.hpp"

namespace cf = clawfree;
using json = nlohmann::ordered_json;

namespace {

json edges_json(const std::vector<cf::Edge>& es) {
    json out = json::array();
    for (auto [i, j] : es) out.push_back(json::array({i, j}));
    return out;
}

json shapes_json(const std::vector<cf::ComponentShape>& shapes) {
    json out = json::array();
    for (const auto& s : shapes) {
        json j;
        switch (s.tag) {
            case cf::ShapeTag::Cycle: j["tag"] = "cycle"; break;
            case cf::ShapeTag::Path: j["tag"] = "path"; break;
            case cf::ShapeTag::Isolated: j["tag"] = "isolated"; break;
            case cf::ShapeTag::Other: j["tag"] = "other"; break;
        }
        j["length"] = s.length;
        j["vertices"] = s.vertices;
        out.push_back(std::move(j));
    }
    return out;
}

json certificate_json(const cf::ForbCertificate& cert) {
    json j;
    if (cert.verdict == cf::Verdict::Member) {
        j["verdict"] = "member";
        switch (cert.member_case) {
            case cf::MemberCase::A6Case:
                j["case"] = "a6";
                j["target"] = cert.a6_complement ? "A6bar" : "A6";
                j["iso"] = cert.a6_iso;
                break;
            case cf::MemberCase::P9Embedding:
                j["case"] = "p9_embedding";
                j["embedding"] = cert.embedding;
                break;
            case cf::MemberCase::DirectShape:
                j["case"] = "direct_shape";
                j["shapes"] = shapes_json(cert.shapes);
                break;
            case cf::MemberCase::ComplementShape:
                j["case"] = "complement_shape";
                j["shapes"] = shapes_json(cert.shapes);
                break;
        }
    } else {
        j["verdict"] = "nonmember";
        const auto& w = *cert.witness;
        j["witness"] = {{"in", w.in_complement ? "complement" : "U"},
                        {"center", w.claw.center},
                        {"leaves", w.claw.leaves}};
    }
    return j;
}

json decomposition_json(const cf::Decomposition& d) {
    json j;
    j["G"] = cf::emit_graph6(d.g);
    j["G2"] = cf::emit_graph6(d.g2);
    j["A1"] = edges_json(d.a1);
    j["A2"] = edges_json(d.a2);
    j["B1"] = edges_json(d.b1);
    j["B2"] = edges_json(d.b2);
    j["flips"] = {{"s_u", d.flips_u}, {"s_ubar", d.flips_ubar}};
    return j;
}

json report_json(const cf::VerificationReport& rep) {
    json j;
    j["property"] = rep.property;
    j["n"] = rep.n;
    if (rep.sample) {
        j["sample"] = *rep.sample;
        j["seed"] = rep.seed;
    }
    j["checked"] = rep.checked;
    json mm = json::array();
    for (const auto& m : rep.mismatches) {
        if (m.mask2) mm.push_back(json::array({m.mask, *m.mask2}));
        else mm.push_back(m.mask);
    }
    j["mismatches"] = std::move(mm);
    return j;
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"claw-free graph classification, boolean-sum decomposition and "
                 "desk-scale verification"};
    app.require_subcommand(1);

    std::string graph_arg, graph_arg2, property_arg;
    bool all_flag = false, dedup_flag = false, serial_flag = false;
    int n_arg = 0, v_arg = 0, k_arg = 0, t_arg = 0, jobs_arg = 1;
    std::optional<std::uint64_t> sample_arg;
    std::uint64_t seed_arg = 0;

    auto* classify_cmd = app.add_subcommand("classify", "classify a graph with a certificate");
    classify_cmd->add_option("graph", graph_arg, "graph literal")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "boolean-sum decomposition");
    decompose_cmd->add_option("graph", graph_arg, "graph literal")->required();
    decompose_cmd->add_flag("--all", all_flag, "enumerate all per-component flips");
    decompose_cmd->add_flag("--dedup", dedup_flag, "collapse the global (G,G2) swap");

    auto* h3_cmd = app.add_subcommand("h3", "3-element homogeneous subsets");
    h3_cmd->add_option("graph", graph_arg, "graph literal")->required();

    auto* eg_cmd = app.add_subcommand("edge-graph", "edge-graph S(U)");
    eg_cmd->add_option("graph", graph_arg, "graph literal")->required();

    auto* verify_cmd = app.add_subcommand("verify", "sweep a property over small graphs");
    verify_cmd->add_option("property", property_arg, "one of: theorem1 formula1 theorem2 "
                           "lemma_trivial caseanalysis claims lemma_ggu thm2_consequences")
        ->required();
    verify_cmd->add_option("--n", n_arg, "vertex count")->required();
    std::uint64_t sample_raw = 0;
    auto* sample_opt = verify_cmd->add_option("--sample", sample_raw, "sample count (required for n >= 8)");
    verify_cmd->add_option("--seed", seed_arg, "sampling seed");
    verify_cmd->add_option("--jobs", jobs_arg, "worker count");
    verify_cmd->add_flag("--serial", serial_flag, "use the serial reference sweep");

    auto* recon_cmd = app.add_subcommand("recon", "reconstruction up to complementation");
    recon_cmd->require_subcommand(1);
    auto* rrec = recon_cmd->add_subcommand("reconstructible", "sweep all graphs on v vertices");
    rrec->add_option("--v", v_arg, "vertex count")->required();
    rrec->add_option("--k", k_arg, "subset size")->required();
    auto* rhyp = recon_cmd->add_subcommand("hypomorphic", "k-hypomorphy of two graphs");
    rhyp->add_option("graph1", graph_arg, "graph literal")->required();
    rhyp->add_option("graph2", graph_arg2, "graph literal")->required();
    rhyp->add_option("--k", k_arg, "subset size")->required();
    auto* rpd = recon_cmd->add_subcommand("propdown", "downward hypomorphy pair sweep");
    rpd->add_option("--v", v_arg, "vertex count")->required();
    rpd->add_option("--k", k_arg, "hypothesis subset size")->required();
    rpd->add_option("--t", t_arg, "conclusion subset size")->required();
    rpd->add_option("--jobs", jobs_arg, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (sample_opt->count() > 0) sample_arg = sample_raw;

    try {
        if (classify_cmd->parsed()) {
            cf::Graph u = cf::parse_graph_literal(graph_arg);
            print_json(certificate_json(cf::classify(u)));
            return 0;
        }
        if (decompose_cmd->parsed()) {
            cf::Graph u = cf::parse_graph_literal(graph_arg);
            if (all_flag) {
                auto list = cf::all_decompositions(u, dedup_flag);
                json j;
                j["count"] = list.size();
                json arr = json::array();
                for (const auto& d : list) arr.push_back(decomposition_json(d));
                j["decompositions"] = std::move(arr);
                print_json(j);
                return 0;
            }
            auto res = cf::decompose(u);
            if (auto* obs = std::get_if<cf::DecomposeObstruction>(&res)) {
                json j;
                j["obstruction"] = {{"in", obs->in_complement ? "S(Ubar)" : "S(U)"},
                                    {"odd_cycle", edges_json(obs->odd_walk)}};
                print_json(j);
            } else {
                print_json(decomposition_json(std::get<cf::Decomposition>(res)));
            }
            return 0;
        }
        if (h3_cmd->parsed()) {
            cf::Graph u = cf::parse_graph_literal(graph_arg);
            cf::TripleHypergraph h = cf::h3(u);
            json j;
            j["n"] = h.n;
            j["count"] = h.triples.size();
            json arr = json::array();
            for (const auto& t : h.triples) arr.push_back(t);
            j["triples"] = std::move(arr);
            print_json(j);
            return 0;
        }
        if (eg_cmd->parsed()) {
            cf::Graph u = cf::parse_graph_literal(graph_arg);
            cf::EdgeGraph s = cf::edge_graph(u);
            json j;
            j["base"] = cf::emit_graph6(u);
            j["vertices"] = edges_json(s.verts);
            json arr = json::array();
            for (int a = 0; a < s.vertex_count(); ++a)
                for (int b : s.adj[a])
                    if (b > a) arr.push_back(json::array({a, b}));
            j["edges"] = std::move(arr);
            print_json(j);
            return 0;
        }
        if (verify_cmd->parsed()) {
            cf::Property p = cf::property_from_name(property_arg);
            cf::VerifyOptions opts{sample_arg, seed_arg, jobs_arg};
            cf::VerificationReport rep =
                serial_flag ? cf::verify_serial(p, n_arg, opts) : cf::verify(p, n_arg, opts);
            print_json(report_json(rep));
            std::cerr << "wall_ms " << rep.wall_ms << "\n";
            return rep.passed() ? 0 : 1;
        }
        if (rrec->parsed()) {
            cf::ReconSweepResult res = cf::recon_sweep(v_arg, k_arg);
            json j;
            j["v"] = v_arg;
            j["k"] = k_arg;
            j["graphs"] = res.graphs;
            j["all_reconstructible"] = res.failures.empty();
            json arr = json::array();
            for (auto [gm, hm] : res.failures)
                arr.push_back({{"g_mask", gm},
                               {"h_mask", hm},
                               {"g", cf::emit_graph6(cf::Graph::from_edge_mask(v_arg, gm))},
                               {"h", cf::emit_graph6(cf::Graph::from_edge_mask(v_arg, hm))}});
            j["counterexamples"] = std::move(arr);
            print_json(j);
            return 0;  // a negative verdict is an answer, not a failure
        }
        if (rhyp->parsed()) {
            cf::Graph g = cf::parse_graph_literal(graph_arg);
            cf::Graph h = cf::parse_graph_literal(graph_arg2);
            cf::HypomorphyReport rep = cf::hypomorphic_utc(g, h, k_arg);
            json j;
            j["k"] = rep.k;
            j["hypomorphic"] = rep.result;
            if (rep.failing_subset) j["failing_subset"] = *rep.failing_subset;
            print_json(j);
            return 0;
        }
        if (rpd->parsed()) {
            cf::PropDownResult res = cf::propdown_sweep(v_arg, k_arg, t_arg, jobs_arg);
            json j;
            j["v"] = v_arg;
            j["k"] = k_arg;
            j["t"] = t_arg;
            j["pairs"] = res.pairs;
            json arr = json::array();
            for (auto [gm, hm] : res.violations) arr.push_back(json::array({gm, hm}));
            j["violations"] = std::move(arr);
            print_json(j);
            return res.violations.empty() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
