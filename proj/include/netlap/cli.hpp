#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "netlap/exact.hpp"
#include "netlap/forests.hpp"
#include "netlap/generators.hpp"
#include "netlap/json_io.hpp"
#include "netlap/search.hpp"
#include "netlap/signed_graph.hpp"
#include "netlap/structure.hpp"
#include "netlap/theorems.hpp"

namespace netlap {

// Exit codes: 0 success, 1 failed checks, 2 bad input, 3 enumeration cap.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
    kExitCapExceeded = 3,
};

namespace cli_detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return text;
    }
    std::ifstream f(path);
    if (!f) throw input_error("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return text;
}

// Arbitrary-precision coefficients rendered as bare JSON numbers; nlohmann
// would clip them to 64 bits, so the array is assembled by hand.
inline std::string coeff_array_json(const std::vector<Bigint>& coeffs) {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += coeffs[i].str();
    }
    return out + "]";
}

inline json inertia_json(const Inertia& in) {
    return json::array({in.positive, in.negative, in.zero});
}

// Collapse per-graph reports into one line per check kind.
inline VerificationReport aggregate_by_name(const std::vector<VerificationReport>& reports) {
    std::map<std::string, CheckResult> by_name;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            auto it = by_name.find(c.name);
            if (it == by_name.end()) {
                by_name.emplace(c.name, c);
                continue;
            }
            CheckResult& agg = it->second;
            if (!c.applicable) continue;
            if (!agg.applicable) {
                agg = c;
                continue;
            }
            if (!c.passed && agg.passed) {
                agg.passed = false;
                agg.witness = c.witness;
            }
        }
    VerificationReport out;
    for (auto& [name, c] : by_name) out.add(c);
    return out;
}

inline std::vector<SignedGraph> small_suite_corpus() {
    std::vector<SignedGraph> corpus;
    corpus.push_back(edgeless_graph(1));
    corpus.push_back(edgeless_graph(4));
    corpus.push_back(SignedGraph(2, {{0, 1, 1}}));
    corpus.push_back(SignedGraph(2, {{0, 1, -1}}));
    corpus.push_back(complete_graph(3, 1));
    corpus.push_back(complete_graph(3, -1));
    corpus.push_back(complete_graph(4, 1));
    corpus.push_back(cycle_graph({1, 1, -1, -1}));
    corpus.push_back(cycle_graph({1, 1, 1, -1}));
    corpus.push_back(star_graph({1, 1, -1}));
    corpus.push_back(path_graph({1, 1, 1}));
    for (int k = 1; k <= 4; ++k) {
        corpus.push_back(complete_join_neg(k));
        corpus.push_back(negate(complete_join_neg(k)));
    }
    for (std::uint64_t s = 1; s <= 6; ++s) {
        corpus.push_back(random_tree(4 + static_cast<int>(s), 0.4, s));
        corpus.push_back(random_unicyclic(6 + static_cast<int>(s % 3), 3 + static_cast<int>(s % 3),
                                          0.5, 100 + s));
        corpus.push_back(random_cactus(10, 2, CycleSignProfile::Free, 200 + s));
        corpus.push_back(random_connected(6, 0.3, 0.5, 300 + s));
        corpus.push_back(random_signed(6, 0.35, 0.5, 400 + s));
    }
    corpus.push_back(random_cactus(12, 3, CycleSignProfile::Balanced, 7));
    corpus.push_back(random_cactus(12, 3, CycleSignProfile::Unbalanced, 8));
    corpus.push_back(random_cactus(12, 3, CycleSignProfile::Mixed, 9));
    corpus.push_back(theta_graph(2, 2, 2, {{1, 1}, {1, 1}, {1, 1}}));
    corpus.push_back(theta_graph(1, 3, 3, {{1}, {1, -1, -1}, {1, -1, -1}}));
    corpus.push_back(random_theta(2, 3, 4, 0.5, 11));
    // bowtie and a bridge-joined pair of balanced squares
    corpus.push_back(coalesce(complete_graph(3, 1), 0, complete_graph(3, 1), 0));
    corpus.push_back(bridge_join(cycle_graph({1, 1, -1, -1}), 0, cycle_graph({1, -1, 1, -1}), 2, 1));
    return corpus;
}

struct GraphInput {
    SignedGraph graph;
    Expectations expect;
};

inline GraphInput load_graph(const std::string& path, std::istream& in) {
    std::string text = read_input(path, in);
    return {parse_graph(text), expectations_from_json_text(text)};
}

}  // namespace cli_detail

inline int run_command(std::vector<std::string> args, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    CLI::App app{"exact spectral analysis of signed graphs via the net Laplacian"};
    app.require_subcommand(1);

    std::string path = "-";
    bool oracle = false;
    int cap = kDefaultForestCap;

    auto* nullity_cmd = app.add_subcommand("nullity", "nullity, rank and inertia of a graph");
    nullity_cmd->add_option("file", path, "graph JSON file or - for stdin");

    auto* charpoly_cmd =
        app.add_subcommand("charpoly", "characteristic polynomial coefficients c_0..c_n");
    charpoly_cmd->add_option("file", path, "graph JSON file or - for stdin");
    charpoly_cmd->add_flag("--oracle", oracle,
                           "also compute every coefficient by spanning-forest enumeration");
    charpoly_cmd->add_option("--cap", cap, "order cap for forest enumeration");

    auto* analyze_cmd = app.add_subcommand("analyze", "structural and spectral report");
    analyze_cmd->add_option("file", path, "graph JSON file or - for stdin");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run verifier checks on a graph or a suite");
    verify_cmd->add_option("file", path, "graph JSON file or - for stdin");
    verify_cmd->add_option("--suite", suite, "built-in suite name (small)");
    verify_cmd->add_option("--cap", cap, "order cap for forest enumeration");

    std::string kind;
    int gen_n = 6, cycle_len = 3, cycles = 1, pa = 2, pb = 2, pc = 2, join_k = 2;
    double neg_prob = 0.5, edge_prob = 0.4, extra_prob = 0.25;
    std::string profile = "free";
    std::uint64_t seed = 1;
    auto* generate_cmd = app.add_subcommand("generate", "emit a graph as canonical JSON");
    generate_cmd
        ->add_option("kind", kind, "tree|unicyclic|cactus|random|connected|theta|join")
        ->required();
    generate_cmd->add_option("--n", gen_n, "vertex count");
    generate_cmd->add_option("--seed", seed, "RNG seed");
    generate_cmd->add_option("--neg-prob", neg_prob, "probability an edge is negative");
    generate_cmd->add_option("--cycle-len", cycle_len, "cycle length (unicyclic)");
    generate_cmd->add_option("--cycles", cycles, "cycle count (cactus)");
    generate_cmd->add_option("--profile", profile,
                             "cactus cycle profile: unbalanced|balanced|mixed|free");
    generate_cmd->add_option("--edge-prob", edge_prob, "edge probability (random)");
    generate_cmd->add_option("--extra-prob", extra_prob, "extra edge probability (connected)");
    generate_cmd->add_option("--a", pa, "theta path length a");
    generate_cmd->add_option("--b", pb, "theta path length b");
    generate_cmd->add_option("--c", pc, "theta path length c");
    generate_cmd->add_option("--k", join_k, "clique order k for the join (2k vertices)");

    int sweep_n = 4, workers = 0;
    long samples = 0;
    bool exhaustive = false, skip_edge_checks = false;
    std::string filter = "all";
    auto* sweep_cmd = app.add_subcommand("sweep", "check every graph in a configured space");
    sweep_cmd->add_option("--n", sweep_n, "vertex count")->required();
    sweep_cmd->add_flag("--exhaustive", exhaustive, "iterate all 3^C(n,2) signed graphs");
    sweep_cmd->add_option("--samples", samples, "random sample count (non-exhaustive)");
    sweep_cmd->add_option("--seed", seed, "RNG seed (non-exhaustive)");
    sweep_cmd->add_option("--workers", workers, "worker threads (default: cores)");
    sweep_cmd->add_flag("--skip-edge-checks", skip_edge_checks,
                        "skip per-edge and per-cut-vertex checks");
    sweep_cmd->add_option("--filter", filter, "all|connected|cactus|non-cactus");

    int max_sum = 10;
    auto* theta_cmd = app.add_subcommand(
        "find-theta", "hunt shared-edge cycle graphs with balanced cycle pairs");
    theta_cmd->add_option("--max-sum", max_sum, "max total path length");

    auto* dot_cmd = app.add_subcommand("export-dot", "emit Graphviz DOT");
    dot_cmd->add_option("file", path, "graph JSON file or - for stdin");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        std::stringstream hold_out, hold_err;
        int code = app.exit(e, hold_out, hold_err);
        out << hold_out.str();
        err << hold_err.str();
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (app.got_subcommand(nullity_cmd)) {
            SignedGraph g = cli_detail::load_graph(path, in).graph;
            SpectralSummary s = spectral_summary(g);
            out << json{{"nullity", s.nullity},
                        {"rank", s.rank},
                        {"inertia", cli_detail::inertia_json(s.inertia)}}
                       .dump()
                << "\n";
            return kExitOk;
        }

        if (app.got_subcommand(charpoly_cmd)) {
            SignedGraph g = cli_detail::load_graph(path, in).graph;
            CharPoly p = char_poly(net_laplacian(g));
            if (!oracle) {
                out << "{\"coeffs\":" << cli_detail::coeff_array_json(p.coeffs) << "}\n";
                return kExitOk;
            }
            CharPoly o = char_poly_via_forests(g, cap);
            bool agree = o.coeffs == p.coeffs;
            out << "{\"agree\":" << (agree ? "true" : "false")
                << ",\"coeffs\":" << cli_detail::coeff_array_json(p.coeffs)
                << ",\"oracle\":" << cli_detail::coeff_array_json(o.coeffs) << "}\n";
            return agree ? kExitOk : kExitCheckFailed;
        }

        if (app.got_subcommand(analyze_cmd)) {
            SignedGraph g = cli_detail::load_graph(path, in).graph;
            json rep;
            rep["n"] = g.order();
            rep["edges"] = g.edge_count();
            auto comps = connected_components(g);
            rep["components"] = comps;
            rep["connected"] = comps.size() <= 1;
            SpectralSummary s = spectral_summary(g);
            rep["nullity"] = s.nullity;
            rep["rank"] = s.rank;
            rep["inertia"] = cli_detail::inertia_json(s.inertia);
            rep["eigenvalues_float"] = s.eigenvalues;
            if (comps.size() > 1) {
                json per = json::array();
                int sum = 0;
                for (const auto& comp : comps) {
                    int eta = nullity(induced_subgraph(g, comp).graph);
                    sum += eta;
                    per.push_back(json{{"vertices", comp}, {"nullity", eta}});
                }
                rep["per_component"] = per;
                rep["component_nullity_sum"] = sum;
                rep["additivity_ok"] = sum == s.nullity;
            } else if (g.order() >= 1) {
                int beta = cyclomatic_number(g);
                rep["beta"] = beta;
                if (auto b = nullity_bounds(g))
                    rep["bounds"] = json::array({b->low, b->high});
                bool cactus = is_cactus(g);
                rep["cactus"] = cactus;
                json blocks = json::array();
                for (const auto& blk : block_decomposition(g).blocks)
                    blocks.push_back(json{{"vertices", blk.vertices},
                                          {"edges", blk.edge_indices},
                                          {"kind", blk.is_bridge() ? "edge" : (blk.is_cycle() ? "cycle" : "shared-edge")}});
                rep["blocks"] = blocks;
                if (cactus) {
                    json cyc = json::array();
                    for (const auto& cy : cactus_cycles(g))
                        cyc.push_back(json{{"vertices", cy.vertices},
                                           {"m_plus", cy.m_plus},
                                           {"m_minus", cy.m_minus},
                                           {"balanced", cy.balanced_counts()}});
                    rep["cycles"] = cyc;
                    CactusPrediction pr = predict_cactus_nullity(g);
                    rep["prediction"] = json{{"regime", regime_name(pr.regime)},
                                             {"balanced_cycles", pr.balanced_cycle_count},
                                             {"predicted_nullity", pr.predicted_nullity},
                                             {"matches", pr.predicted_nullity == s.nullity}};
                }
            }
            out << rep.dump() << "\n";
            return kExitOk;
        }

        if (app.got_subcommand(verify_cmd)) {
            VerificationReport report;
            if (suite == "small") {
                std::vector<VerificationReport> reports;
                for (const auto& g : cli_detail::small_suite_corpus())
                    reports.push_back(verify_all(g, cap));
                report = cli_detail::aggregate_by_name(reports);

                SweepConfig cfg;
                cfg.n = 4;
                cfg.exhaustive = true;
                SweepStats st = exhaustive_sweep(cfg);
                report.add(st.violations() == 0
                               ? CheckResult::pass("exhaustive-n4-universal-checks")
                               : CheckResult::fail("exhaustive-n4-universal-checks",
                                                   st.violation_witnesses.front()));
                std::vector<std::string> expected_max;
                // the six labelled positive-clique joins on 4 vertices and their negations
                for (std::uint64_t code = 0; code < 729; ++code) {
                    SignedGraph g = detail::decode_base3(4, code);
                    if (g.edge_count() != 6 || !is_connected(g)) continue;
                    MaxNullityClassification cls = classify_max_nullity(g);
                    if (cls.structural_match) expected_max.push_back(canonical_graph_json(g));
                }
                std::sort(expected_max.begin(), expected_max.end());
                report.add(st.max_nullity_graphs == expected_max && expected_max.size() == 6
                               ? CheckResult::pass("exhaustive-n4-max-nullity-set")
                               : CheckResult::fail("exhaustive-n4-max-nullity-set",
                                                   "classified joins and eta==3 set differ"));
            } else if (!suite.empty()) {
                throw input_error("unknown suite: " + suite);
            } else {
                cli_detail::GraphInput gi = cli_detail::load_graph(path, in);
                report = verify_all(gi.graph, cap);
                if (gi.expect.nullity) {
                    int eta = nullity(gi.graph);
                    report.add(eta == *gi.expect.nullity
                                   ? CheckResult::pass("expected-nullity")
                                   : CheckResult::fail("expected-nullity",
                                                       "stored " + std::to_string(*gi.expect.nullity) +
                                                           " computed " + std::to_string(eta)));
                }
                if (gi.expect.charpoly) {
                    CharPoly p = char_poly(net_laplacian(gi.graph));
                    report.add(p.coeffs == *gi.expect.charpoly
                                   ? CheckResult::pass("expected-charpoly")
                                   : CheckResult::fail("expected-charpoly",
                                                       "stored coefficients differ from computed " +
                                                           p.str()));
                }
            }
            out << report.to_json().dump() << "\n";
            err << report.applicable_count() << " applicable checks, " << report.failed_count()
                << " failed\n";
            return report.all_passed() ? kExitOk : kExitCheckFailed;
        }

        if (app.got_subcommand(generate_cmd)) {
            SignedGraph g;
            if (kind == "tree")
                g = random_tree(gen_n, neg_prob, seed);
            else if (kind == "unicyclic")
                g = random_unicyclic(gen_n, cycle_len, neg_prob, seed);
            else if (kind == "cactus") {
                CycleSignProfile p;
                if (profile == "unbalanced")
                    p = CycleSignProfile::Unbalanced;
                else if (profile == "balanced")
                    p = CycleSignProfile::Balanced;
                else if (profile == "mixed")
                    p = CycleSignProfile::Mixed;
                else if (profile == "free")
                    p = CycleSignProfile::Free;
                else
                    throw input_error("unknown cactus profile: " + profile);
                g = random_cactus(gen_n, cycles, p, seed);
            } else if (kind == "random")
                g = random_signed(gen_n, edge_prob, neg_prob, seed);
            else if (kind == "connected")
                g = random_connected(gen_n, extra_prob, neg_prob, seed);
            else if (kind == "theta")
                g = random_theta(pa, pb, pc, neg_prob, seed);
            else if (kind == "join")
                g = complete_join_neg(join_k);
            else
                throw input_error("unknown generate kind: " + kind);
            out << canonical_graph_json(g) << "\n";
            return kExitOk;
        }

        if (app.got_subcommand(sweep_cmd)) {
            SweepConfig cfg;
            cfg.n = sweep_n;
            cfg.exhaustive = exhaustive;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.per_edge_checks = !skip_edge_checks;
            if (filter == "connected")
                cfg.filter = SweepFilter::ConnectedOnly;
            else if (filter == "cactus")
                cfg.filter = SweepFilter::CactusOnly;
            else if (filter == "non-cactus")
                cfg.filter = SweepFilter::NonCactusOnly;
            else if (filter != "all")
                throw input_error("sweep: unknown filter " + filter);
            if (!exhaustive && samples <= 0)
                throw input_error("sweep: choose --exhaustive or --samples N");
            SweepStats st = exhaustive_sweep(cfg);
            out << st.to_json().dump() << "\n";
            return st.violations() == 0 ? kExitOk : kExitCheckFailed;
        }

        if (app.got_subcommand(theta_cmd)) {
            auto findings = find_shared_cycle_examples(max_sum);
            long witnesses = 0;
            for (const auto& f : findings) {
                if (f.nullity_value == 1) ++witnesses;
                out << f.to_json().dump() << "\n";
            }
            err << findings.size() << " findings, " << witnesses << " with nullity 1\n";
            return kExitOk;
        }

        if (app.got_subcommand(dot_cmd)) {
            SignedGraph g = cli_detail::load_graph(path, in).graph;
            out << to_dot(g);
            return kExitOk;
        }
    } catch (const cap_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitInputError;
}

}  // namespace netlap
