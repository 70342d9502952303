#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "netlap/exact.hpp"
#include "netlap/generators.hpp"
#include "netlap/json_io.hpp"
#include "netlap/structure.hpp"
#include "netlap/theorems.hpp"

namespace netlap {

// Exhaustive mode iterates every signed graph on n labelled vertices (each
// vertex pair absent/positive/negative, base-3); 3^15 at n = 6 is the
// practical ceiling.
constexpr int kMaxExhaustiveOrder = 6;

enum class SweepFilter { All, ConnectedOnly, CactusOnly, NonCactusOnly };

struct SweepConfig {
    int n = 4;
    bool exhaustive = true;
    long samples = 0;          // random mode when exhaustive == false
    std::uint64_t seed = 1;
    int workers = 0;           // 0: hardware_concurrency
    bool per_edge_checks = true;
    SweepFilter filter = SweepFilter::All;
    int theta_max_len_sum = 10;  // theta-family mode
};

struct HistogramKey {
    int n = 0;
    int beta = 0;
    int eta = 0;

    friend bool operator<(const HistogramKey& a, const HistogramKey& b) {
        return std::tie(a.n, a.beta, a.eta) < std::tie(b.n, b.beta, b.eta);
    }
    friend bool operator==(const HistogramKey& a, const HistogramKey& b) {
        return std::tie(a.n, a.beta, a.eta) == std::tie(b.n, b.beta, b.eta);
    }
};

struct SweepStats {
    long total = 0;
    long connected = 0;
    long bound_violations = 0;
    long additivity_violations = 0;
    long edge_step_violations = 0;
    long coalescence_violations = 0;
    long classifier_mismatches = 0;
    std::map<HistogramKey, long> histogram;          // connected graphs only
    std::vector<std::string> violation_witnesses;    // canonical graph JSON
    std::vector<std::string> max_nullity_graphs;     // connected, eta == n-1

    long violations() const {
        return bound_violations + additivity_violations + edge_step_violations +
               coalescence_violations + classifier_mismatches;
    }

    void merge(SweepStats&& o) {
        total += o.total;
        connected += o.connected;
        bound_violations += o.bound_violations;
        additivity_violations += o.additivity_violations;
        edge_step_violations += o.edge_step_violations;
        coalescence_violations += o.coalescence_violations;
        classifier_mismatches += o.classifier_mismatches;
        for (auto& [k, v] : o.histogram) histogram[k] += v;
        violation_witnesses.insert(violation_witnesses.end(), o.violation_witnesses.begin(),
                                   o.violation_witnesses.end());
        max_nullity_graphs.insert(max_nullity_graphs.end(), o.max_nullity_graphs.begin(),
                                  o.max_nullity_graphs.end());
    }

    json to_json() const {
        json hist = json::array();
        for (const auto& [k, v] : histogram)
            hist.push_back(json{{"n", k.n}, {"beta", k.beta}, {"eta", k.eta}, {"count", v}});
        return json{{"total", total},
                    {"connected", connected},
                    {"bound_violations", bound_violations},
                    {"additivity_violations", additivity_violations},
                    {"edge_step_violations", edge_step_violations},
                    {"coalescence_violations", coalescence_violations},
                    {"classifier_mismatches", classifier_mismatches},
                    {"histogram", hist},
                    {"max_nullity_graphs", max_nullity_graphs},
                    {"violation_witnesses", violation_witnesses}};
    }
};

namespace detail {

// Universal statements checked on each swept graph. Any violation is recorded
// with the witness graph; callers treat a nonzero count as fatal.
inline bool passes_filter(const SignedGraph& g, SweepFilter filter, bool connected) {
    switch (filter) {
        case SweepFilter::All: return true;
        case SweepFilter::ConnectedOnly: return connected;
        case SweepFilter::CactusOnly: return connected && is_cactus(g);
        case SweepFilter::NonCactusOnly: return connected && !is_cactus(g);
    }
    return true;
}

inline void sweep_check(const SignedGraph& g, const SweepConfig& cfg, SweepStats& st,
                        std::atomic<bool>& abort) {
    const int n = g.order();
    const bool connected = is_connected(g);
    if (!passes_filter(g, cfg.filter, connected)) return;
    ++st.total;
    const int eta = nullity(g);

    if (connected) {
        ++st.connected;
        int beta = g.edge_count() - n + 1;
        ++st.histogram[{n, beta, eta}];
        if (n >= 2) {
            int high = std::min(beta + 1, n - 1);
            if (eta < 1 || eta > high) {
                ++st.bound_violations;
                st.violation_witnesses.push_back("bounds: " + canonical_graph_json(g));
                abort.store(true);
            }
            // structural shape against the exact rank route (eta is n - rank)
            bool structural = detail::is_pos_clique_pair(g) || detail::is_pos_clique_pair(negate(g));
            bool extremal = eta == n - 1;
            if (structural != extremal) {
                ++st.classifier_mismatches;
                st.violation_witnesses.push_back("classifier: " + canonical_graph_json(g));
                abort.store(true);
            }
            if (extremal) st.max_nullity_graphs.push_back(canonical_graph_json(g));
        }
    } else {
        int sum = 0;
        for (const auto& comp : connected_components(g))
            sum += nullity(induced_subgraph(g, comp).graph);
        if (sum != eta) {
            ++st.additivity_violations;
            st.violation_witnesses.push_back("additivity: " + canonical_graph_json(g));
            abort.store(true);
        }
    }

    if (cfg.per_edge_checks) {
        for (int i = 0; i < g.edge_count(); ++i) {
            int after = nullity(delete_edge(g, {i}));
            if (after < eta - 1 || after > eta + 1) {
                ++st.edge_step_violations;
                st.violation_witnesses.push_back("edge-step: " + canonical_graph_json(g));
                abort.store(true);
                break;
            }
        }
        if (connected) {
            for (int w : cut_vertices(g)) {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if (v != w) keep.push_back(v);
                SignedGraph minus_w = induced_subgraph(g, keep).graph;
                auto comps = connected_components(minus_w);
                std::vector<int> side1;
                for (int v : comps.front()) side1.push_back(v < w ? v : v + 1);
                side1.push_back(w);
                std::vector<int> side2{w};
                for (std::size_t ci = 1; ci < comps.size(); ++ci)
                    for (int v : comps[ci]) side2.push_back(v < w ? v : v + 1);
                int want = nullity(induced_subgraph(g, side1).graph) +
                           nullity(induced_subgraph(g, side2).graph) - 1;
                if (want != eta) {
                    ++st.coalescence_violations;
                    st.violation_witnesses.push_back("coalescence: " + canonical_graph_json(g));
                    abort.store(true);
                    break;
                }
            }
        }
    }
}

inline SignedGraph decode_base3(int n, std::uint64_t code) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int digit = static_cast<int>(code % 3);
            code /= 3;
            if (digit == 1) es.push_back({u, v, 1});
            if (digit == 2) es.push_back({u, v, -1});
        }
    return SignedGraph(n, std::move(es));
}

}  // namespace detail

// Runs the universal checks over the configured graph space. Deterministic
// for a fixed config; embarrassingly parallel over disjoint code ranges.
inline SweepStats exhaustive_sweep(const SweepConfig& cfg) {
    SweepStats stats;
    std::atomic<bool> abort{false};

    if (cfg.exhaustive) {
        if (cfg.n < 1 || cfg.n > kMaxExhaustiveOrder)
            throw cap_error("exhaustive sweep: n must be between 1 and " +
                            std::to_string(kMaxExhaustiveOrder));
        const int pairs = cfg.n * (cfg.n - 1) / 2;
        std::uint64_t space = 1;
        for (int i = 0; i < pairs; ++i) space *= 3;

        int workers = cfg.workers > 0 ? cfg.workers
                                      : static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
        if (static_cast<std::uint64_t>(workers) > space) workers = static_cast<int>(space);

        std::vector<SweepStats> parts(workers);
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = space * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
            std::uint64_t hi = space * (static_cast<std::uint64_t>(w) + 1) / static_cast<std::uint64_t>(workers);
            threads.emplace_back([&, lo, hi, w] {
                for (std::uint64_t code = lo; code < hi; ++code) {
                    if (abort.load(std::memory_order_relaxed)) break;
                    detail::sweep_check(detail::decode_base3(cfg.n, code), cfg,
                                        parts[w], abort);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& p : parts) stats.merge(std::move(p));
    } else {
        if (cfg.n < 1) throw input_error("sweep: n must be >= 1");
        for (long i = 0; i < cfg.samples && !abort.load(); ++i) {
            SignedGraph g = random_signed(cfg.n, 0.5, 0.5, cfg.seed + static_cast<std::uint64_t>(i));
            detail::sweep_check(g, cfg, stats, abort);
        }
    }

    std::sort(stats.violation_witnesses.begin(), stats.violation_witnesses.end());
    std::sort(stats.max_nullity_graphs.begin(), stats.max_nullity_graphs.end());
    return stats;
}

// Empirical population of the nullity range: (n, beta, eta) -> count over the
// connected graphs of the sweep.
inline std::map<HistogramKey, long> nullity_histogram(const SweepConfig& cfg) {
    return exhaustive_sweep(cfg).histogram;
}

// One cycle of a theta graph (pair of terminal-to-terminal paths).
struct ThetaCycle {
    int length = 0;
    int m_plus = 0;
    int m_minus = 0;

    bool balanced_counts() const { return m_plus == m_minus; }
};

// A theta graph whose cycle balance profile probes the edge of the cactus
// rule: at least two cycles with m+ == m- yet possibly nullity 1, which no
// cactus can achieve.
struct ThetaFinding {
    SignedGraph graph;
    int a = 0, b = 0, c = 0;
    std::vector<std::vector<int>> path_signs;
    int nullity_value = 0;
    int beta = 2;
    std::vector<ThetaCycle> cycles;
    int balanced_cycles = 0;
    std::string note;

    json to_json() const {
        json cyc = json::array();
        for (const auto& cy : cycles)
            cyc.push_back(json{{"length", cy.length},
                               {"m_plus", cy.m_plus},
                               {"m_minus", cy.m_minus},
                               {"balanced", cy.balanced_counts()}});
        return json{{"graph", graph_to_json(graph)},
                    {"paths", json::array({a, b, c})},
                    {"nullity", nullity_value},
                    {"beta", beta},
                    {"cycles", cyc},
                    {"balanced_cycles", balanced_cycles},
                    {"note", note}};
    }
};

namespace detail {

inline std::vector<std::vector<int>> unpack_theta_signs(const int len[3], std::uint32_t mask) {
    std::vector<std::vector<int>> signs(3);
    int bit = 0;
    for (int p = 0; p < 3; ++p)
        for (int i = 0; i < len[p]; ++i)
            signs[p].push_back((mask >> bit++) & 1 ? -1 : 1);
    return signs;
}

// Canonical representative under the automorphisms of the underlying theta
// graph: permutations of equal-length paths and the terminal swap, which
// reverses every path simultaneously.
inline std::string theta_canonical(const int len[3], const std::vector<std::vector<int>>& signs) {
    std::string best;
    int order[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int rev = 0; rev < 2; ++rev) {
        for (auto& perm : order) {
            if (len[perm[0]] != len[0] || len[perm[1]] != len[1] || len[perm[2]] != len[2])
                continue;
            std::string sig;
            for (int p = 0; p < 3; ++p) {
                const auto& s = signs[perm[p]];
                sig += '|';
                if (rev)
                    for (std::size_t i = s.size(); i-- > 0;) sig += s[i] > 0 ? '+' : '-';
                else
                    for (int x : s) sig += x > 0 ? '+' : '-';
            }
            if (best.empty() || sig < best) best = sig;
        }
    }
    return best;
}

}  // namespace detail

// Enumerates theta graphs with path lengths a <= b <= c summing to at most
// max_len_sum, all sign patterns up to symmetry, and reports every instance
// with at least two balanced-count cycles: nullity 1 instances witness that
// the cactus characterization has no converse off the cactus class, the
// nullity > 1 instances are kept for contrast.
inline std::vector<ThetaFinding> find_shared_cycle_examples(int max_len_sum) {
    if (max_len_sum < 4) throw input_error("find_shared_cycle_examples: need max length sum >= 4");
    std::vector<ThetaFinding> out;
    for (int a = 1; a <= max_len_sum; ++a)
        for (int b = std::max(a, 2); b <= max_len_sum; ++b)
            for (int c = b; a + b + c <= max_len_sum; ++c) {
                const int len[3] = {a, b, c};
                const int total = a + b + c;
                std::set<std::string> seen;
                for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
                    auto signs = detail::unpack_theta_signs(len, mask);
                    std::string canon = detail::theta_canonical(len, signs);
                    if (!seen.insert(canon).second) continue;

                    ThetaFinding f;
                    f.a = a;
                    f.b = b;
                    f.c = c;
                    f.path_signs = signs;
                    const int pair_idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
                    for (auto& pr : pair_idx) {
                        ThetaCycle cy;
                        for (int which : {pr[0], pr[1]})
                            for (int s : signs[which]) {
                                ++(s > 0 ? cy.m_plus : cy.m_minus);
                                ++cy.length;
                            }
                        f.cycles.push_back(cy);
                        if (cy.balanced_counts()) ++f.balanced_cycles;
                    }
                    if (f.balanced_cycles < 2) continue;

                    f.graph = theta_graph(a, b, c, signs);
                    f.nullity_value = nullity(f.graph);
                    f.note = f.nullity_value == 1
                                 ? "two balanced-count cycles sharing edges, yet nullity 1"
                                 : "balanced-count cycles with nullity above 1";
                    out.push_back(std::move(f));
                }
            }
    return out;
}

inline std::vector<ThetaFinding> find_shared_cycle_examples(const SweepConfig& cfg) {
    return find_shared_cycle_examples(cfg.theta_max_len_sum);
}

}  // namespace netlap
