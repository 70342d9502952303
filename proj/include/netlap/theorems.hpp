#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netlap/exact.hpp"
#include "netlap/forests.hpp"
#include "netlap/json_io.hpp"
#include "netlap/signed_graph.hpp"
#include "netlap/structure.hpp"

namespace netlap {

struct CheckResult {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string witness;  // failure data, or the precondition that failed

    static CheckResult pass(std::string name) { return {std::move(name), true, true, ""}; }
    static CheckResult fail(std::string name, std::string witness) {
        return {std::move(name), true, false, std::move(witness)};
    }
    static CheckResult skip(std::string name, std::string reason) {
        return {std::move(name), false, true, std::move(reason)};
    }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }

    void merge(VerificationReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.applicable && !c.passed) return false;
        return true;
    }

    int failed_count() const {
        int k = 0;
        for (const auto& c : checks)
            if (c.applicable && !c.passed) ++k;
        return k;
    }

    int applicable_count() const {
        int k = 0;
        for (const auto& c : checks)
            if (c.applicable) ++k;
        return k;
    }

    json to_json() const {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back(json{{"name", c.name},
                               {"applicable", c.applicable},
                               {"passed", c.passed},
                               {"witness", c.witness}});
        return arr;
    }
};

// 1 <= eta <= min(beta + 1, n - 1) for connected graphs of order >= 2.
// The n = 1 case is left inapplicable: eta = 1 there but the upper expression
// degenerates to 0.
struct NullityBounds {
    int low = 1;
    int high = 0;
};

inline std::optional<NullityBounds> nullity_bounds(const SignedGraph& g) {
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    int beta = cyclomatic_number(g);
    return NullityBounds{1, std::min(beta + 1, g.order() - 1)};
}

inline CheckResult check_nullity_bounds(const SignedGraph& g) {
    auto b = nullity_bounds(g);
    if (!b) return CheckResult::skip("nullity-bounds", "needs a connected graph of order >= 2");
    int eta = nullity(g);
    if (eta < b->low || eta > b->high)
        return CheckResult::fail("nullity-bounds",
                                 "eta=" + std::to_string(eta) + " outside [" +
                                     std::to_string(b->low) + "," + std::to_string(b->high) +
                                     "] for " + canonical_graph_json(g));
    return CheckResult::pass("nullity-bounds");
}

enum class CactusRegime { AllUnbalanced, AllBalanced, Mixed };

inline const char* regime_name(CactusRegime r) {
    switch (r) {
        case CactusRegime::AllUnbalanced: return "all-unbalanced";
        case CactusRegime::AllBalanced: return "all-balanced";
        default: return "mixed";
    }
}

// Exact nullity of a connected cactus from its cycle sign counts alone:
// 1 + (number of cycles with m+ == m-). The two pure regimes give 1 and
// beta + 1; the mixed value follows from coalescence additivity applied
// block by block.
struct CactusPrediction {
    int predicted_nullity = 1;
    int balanced_cycle_count = 0;
    CactusRegime regime = CactusRegime::AllUnbalanced;
};

inline CactusPrediction predict_cactus_nullity(const SignedGraph& g) {
    if (!is_connected(g)) throw input_error("predict_cactus_nullity: graph must be connected");
    std::vector<CycleInfo> cycles = cactus_cycles(g);  // names the offending block if not a cactus
    CactusPrediction p;
    for (const auto& c : cycles)
        if (c.balanced_counts()) ++p.balanced_cycle_count;
    int beta = static_cast<int>(cycles.size());
    p.predicted_nullity = 1 + p.balanced_cycle_count;
    if (beta > 0 && p.balanced_cycle_count == beta)
        p.regime = CactusRegime::AllBalanced;
    else if (p.balanced_cycle_count == 0)
        p.regime = CactusRegime::AllUnbalanced;
    else
        p.regime = CactusRegime::Mixed;
    return p;
}

inline CheckResult check_cactus_prediction(const SignedGraph& g) {
    if (!is_connected(g))
        return CheckResult::skip("cactus-nullity-prediction", "graph is disconnected");
    if (!is_cactus(g)) return CheckResult::skip("cactus-nullity-prediction", "not a cactus");
    CactusPrediction p = predict_cactus_nullity(g);
    int eta = nullity(g);
    if (eta != p.predicted_nullity)
        return CheckResult::fail("cactus-nullity-prediction",
                                 std::string("regime ") + regime_name(p.regime) + " predicted " +
                                     std::to_string(p.predicted_nullity) + " but eta=" +
                                     std::to_string(eta) + " for " + canonical_graph_json(g));
    return CheckResult::pass("cactus-nullity-prediction");
}

// Does g achieve nullity n-1? Two independent routes: the structural shape
// (two same-sign cliques of order n/2, opposite cross edges) and exact rank 1.
// They must agree; is_extremal() hard-fails on disagreement.
struct MaxNullityClassification {
    bool structural_match = false;
    bool rank_is_one = false;
    std::string witness;

    bool agreed() const { return structural_match == rank_is_one; }
    bool is_extremal() const {
        if (!agreed())
            throw numeric_error("classify_max_nullity: structural and rank routes disagree: " +
                                witness);
        return structural_match;
    }
};

namespace detail {

// g's positive edges form two disjoint cliques of order n/2 and every cross
// pair is a negative edge.
inline bool is_pos_clique_pair(const SignedGraph& g) {
    const int n = g.order();
    if (n < 2 || n % 2) return false;
    if (g.edge_count() != n * (n - 1) / 2) return false;
    std::vector<std::vector<int>> sign(n,
                                       std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        sign[e.u][e.v] = e.sign;
        sign[e.v][e.u] = e.sign;
    }
    std::vector<bool> in_part(n, false);
    in_part[0] = true;
    int part_size = 1;
    for (int v = 1; v < n; ++v)
        if (sign[0][v] > 0) {
            in_part[v] = true;
            ++part_size;
        }
    if (part_size != n / 2) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same = in_part[u] == in_part[v];
            if (sign[u][v] != (same ? 1 : -1))
                return false;
        }
    return true;
}

}  // namespace detail

inline MaxNullityClassification classify_max_nullity(const SignedGraph& g) {
    if (!is_connected(g)) throw input_error("classify_max_nullity: graph must be connected");
    if (g.order() < 2) throw input_error("classify_max_nullity: needs order >= 2");
    MaxNullityClassification out;
    bool join_shape = detail::is_pos_clique_pair(g);
    bool neg_join_shape = detail::is_pos_clique_pair(negate(g));
    out.structural_match = join_shape || neg_join_shape;
    out.rank_is_one = rank_exact(net_laplacian(g)) == 1;
    if (!out.agreed())
        out.witness = "structural=" + std::to_string(out.structural_match) +
                      " rank1=" + std::to_string(out.rank_is_one) + " for " +
                      canonical_graph_json(g);
    else if (out.structural_match)
        out.witness = join_shape ? "positive-clique join" : "negation of positive-clique join";
    return out;
}

inline CheckResult check_max_nullity_classification(const SignedGraph& g) {
    if (!is_connected(g) || g.order() < 2)
        return CheckResult::skip("max-nullity-classification",
                                 "needs a connected graph of order >= 2");
    MaxNullityClassification c = classify_max_nullity(g);
    if (!c.agreed())
        return CheckResult::fail("max-nullity-classification", c.witness);
    bool eta_max = nullity(g) == g.order() - 1;
    if (eta_max != c.structural_match)
        return CheckResult::fail("max-nullity-classification",
                                 "eta==n-1 is " + std::to_string(eta_max) +
                                     " but classification is " + std::to_string(c.structural_match) +
                                     " for " + canonical_graph_json(g));
    return CheckResult::pass("max-nullity-classification");
}

// Deleting a positive edge pushes every eigenvalue down in the interlacing
// sense; deleting a negative edge mirrors the chain.
inline CheckResult verify_interlacing(const SignedGraph& g, EdgeRef e, double tol = 1e-7) {
    const Edge& edge = g.edge(e);
    std::vector<double> big = eigenvalues_float(net_laplacian(g));
    std::vector<double> small = eigenvalues_float(net_laplacian(delete_edge(g, e)));
    const auto& upper = edge.sign > 0 ? big : small;   // upper[i] >= lower[i] >= upper[i+1]
    const auto& lower = edge.sign > 0 ? small : big;
    const int n = g.order();
    for (int i = 0; i < n; ++i) {
        if (upper[i] < lower[i] - tol)
            return CheckResult::fail("edge-interlacing",
                                     "level " + std::to_string(i) + " of " +
                                         canonical_graph_json(g) + " edge " +
                                         std::to_string(e.index));
        if (i + 1 < n &&
            lower[i] < upper[i + 1] - tol)
            return CheckResult::fail("edge-interlacing",
                                     "cross level " + std::to_string(i) + " of " +
                                         canonical_graph_json(g) + " edge " +
                                         std::to_string(e.index));
    }
    return CheckResult::pass("edge-interlacing");
}

// |eta(g) - eta(g - e)| <= 1, exactly.
inline CheckResult verify_edge_nullity_step(const SignedGraph& g, EdgeRef e) {
    int before = nullity(g);
    int after = nullity(delete_edge(g, e));
    if (after < before - 1 || after > before + 1)
        return CheckResult::fail("edge-deletion-nullity-step",
                                 "eta jumped " + std::to_string(before) + " -> " +
                                     std::to_string(after) + " deleting edge " +
                                     std::to_string(e.index) + " of " + canonical_graph_json(g));
    return CheckResult::pass("edge-deletion-nullity-step");
}

// eta(g) >= eta(side_u) + eta(side_v) - 1 across a cut edge.
inline CheckResult verify_cut_edge_inequality(const SignedGraph& g, EdgeRef e) {
    if (!is_connected(g))
        return CheckResult::skip("cut-edge-inequality", "graph is disconnected");
    const Edge& edge = g.edge(e);
    SignedGraph rest = delete_edge(g, e);
    auto comps = connected_components(rest);
    if (comps.size() != 2)
        return CheckResult::skip("cut-edge-inequality",
                                 "edge " + std::to_string(e.index) + " is not a cut edge");
    auto side_of = [&](int v) {
        for (const auto& c : comps)
            if (std::binary_search(c.begin(), c.end(), v)) return c;
        throw numeric_error("cut-edge-inequality: vertex not in any component");
    };
    int eta1 = nullity(induced_subgraph(rest, side_of(edge.u)).graph);
    int eta2 = nullity(induced_subgraph(rest, side_of(edge.v)).graph);
    int eta = nullity(g);
    if (eta < eta1 + eta2 - 1)
        return CheckResult::fail("cut-edge-inequality",
                                 "eta=" + std::to_string(eta) + " < " + std::to_string(eta1) +
                                     "+" + std::to_string(eta2) + "-1 for " +
                                     canonical_graph_json(g));
    return CheckResult::pass("cut-edge-inequality");
}

// eta(g1 . g2) == eta(g1) + eta(g2) - 1 when the graphs are glued at one vertex.
inline CheckResult verify_coalescence(const SignedGraph& g1, int u, const SignedGraph& g2, int v) {
    if (!is_connected(g1) || !is_connected(g2))
        return CheckResult::skip("coalescence-additivity", "both parts must be connected");
    SignedGraph glued = coalesce(g1, u, g2, v);
    int got = nullity(glued);
    int want = nullity(g1) + nullity(g2) - 1;
    if (got != want)
        return CheckResult::fail("coalescence-additivity",
                                 "eta=" + std::to_string(got) + " expected " +
                                     std::to_string(want) + " gluing " + canonical_graph_json(g1) +
                                     " at " + std::to_string(u) + " with " +
                                     canonical_graph_json(g2) + " at " + std::to_string(v));
    return CheckResult::pass("coalescence-additivity");
}

// Signed trees: inertia is (m+, m-, 1).
inline CheckResult verify_tree_inertia(const SignedGraph& g) {
    if (!is_connected(g) || g.edge_count() != g.order() - 1)
        return CheckResult::skip("tree-inertia", "not a tree");
    int mp = 0, mm = 0;
    for (const auto& e : g.edges()) (e.sign > 0 ? mp : mm)++;
    Inertia in = inertia(net_laplacian(g));
    if (in.positive != mp || in.negative != mm || in.zero != 1)
        return CheckResult::fail("tree-inertia",
                                 "inertia (" + std::to_string(in.positive) + "," +
                                     std::to_string(in.negative) + "," + std::to_string(in.zero) +
                                     ") expected (" + std::to_string(mp) + "," +
                                     std::to_string(mm) + ",1) for " + canonical_graph_json(g));
    return CheckResult::pass("tree-inertia");
}

namespace detail {

inline CheckResult aggregate(const std::string& name, const std::vector<CheckResult>& results) {
    bool any_applicable = false;
    for (const auto& r : results) {
        if (!r.applicable) continue;
        any_applicable = true;
        if (!r.passed) return CheckResult::fail(name, r.witness);
    }
    if (!any_applicable) return CheckResult::skip(name, "no applicable instance");
    return CheckResult::pass(name);
}

}  // namespace detail

// Every applicable structural and spectral statement against one graph.
inline VerificationReport verify_all(const SignedGraph& g, int forest_cap = kDefaultForestCap) {
    VerificationReport rep;
    const int n = g.order();
    const bool connected = is_connected(g);
    IntMatrix lap = net_laplacian(g);
    const int eta = n - rank_exact(lap);
    CharPoly cp = char_poly(lap);

    rep.add(check_nullity_bounds(g));
    rep.add(check_cactus_prediction(g));
    rep.add(connected && n >= 2
                ? check_max_nullity_classification(g)
                : CheckResult::skip("max-nullity-classification",
                                    "needs a connected graph of order >= 2"));

    // edgeless <=> eta == n, both directions
    if ((eta == n) != (g.edge_count() == 0))
        rep.add(CheckResult::fail("edgeless-iff-full-nullity",
                                  "eta=" + std::to_string(eta) + " with " +
                                      std::to_string(g.edge_count()) + " edges on n=" +
                                      std::to_string(n)));
    else
        rep.add(CheckResult::pass("edgeless-iff-full-nullity"));

    // nullity invariant under negation
    if (eta != nullity(negate(g)))
        rep.add(CheckResult::fail("negation-invariance", canonical_graph_json(g)));
    else
        rep.add(CheckResult::pass("negation-invariance"));

    // three independent nullity computations
    {
        int from_poly = cp.trailing_zeros();
        int from_float = float_zero_count(eigenvalues_float(lap), float_zero_tolerance(lap));
        if (from_poly != eta || from_float != eta)
            rep.add(CheckResult::fail("nullity-cross-paths",
                                      "rank route " + std::to_string(eta) + ", char-poly route " +
                                          std::to_string(from_poly) + ", float route " +
                                          std::to_string(from_float) + " for " +
                                          canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("nullity-cross-paths"));
    }

    // c_{n-1} = -trace
    if (n >= 1 && cp.coeffs[n - 1] != -lap.trace())
        rep.add(CheckResult::fail("charpoly-trace", canonical_graph_json(g)));
    else
        rep.add(CheckResult::pass("charpoly-trace"));

    // forest-sum coefficients against the division-free computation
    if (n <= forest_cap) {
        CharPoly oracle = char_poly_via_forests(g, forest_cap);
        if (oracle.coeffs != cp.coeffs)
            rep.add(CheckResult::fail("forest-coefficient-identity",
                                      "forest sum " + oracle.str() + " vs " + cp.str() + " for " +
                                          canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("forest-coefficient-identity"));
    } else {
        rep.add(CheckResult::skip("forest-coefficient-identity",
                                  "order exceeds forest cap " + std::to_string(forest_cap)));
    }

    // connected: eta == 1 <=> c_1 != 0
    if (connected && n >= 1 && n <= forest_cap) {
        TreeSum ts = c1_tree_sum(g, forest_cap);
        bool lhs = eta == 1;
        bool rhs = !ts.c1.is_zero();
        if (lhs != rhs)
            rep.add(CheckResult::fail("nullity-one-iff-c1-nonzero",
                                      "eta=" + std::to_string(eta) + " c1=" + ts.c1.str() +
                                          " for " + canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("nullity-one-iff-c1-nonzero"));
    } else {
        rep.add(CheckResult::skip("nullity-one-iff-c1-nonzero",
                                  connected ? "order exceeds forest cap" : "graph is disconnected"));
    }

    // disconnected: eta is additive over components
    if (!connected) {
        int sum = 0;
        for (const auto& comp : connected_components(g))
            sum += nullity(induced_subgraph(g, comp).graph);
        if (sum != eta)
            rep.add(CheckResult::fail("component-additivity",
                                      "sum of component nullities " + std::to_string(sum) +
                                          " vs eta=" + std::to_string(eta) + " for " +
                                          canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("component-additivity"));
    } else {
        rep.add(CheckResult::skip("component-additivity", "graph is connected"));
    }

    // pendant-tree pruning preserves nullity
    if (connected && n >= 1) {
        SignedGraph pruned = prune_pendant_trees(g);
        if (nullity(pruned) != eta)
            rep.add(CheckResult::fail("pruning-invariance",
                                      "eta " + std::to_string(eta) + " became " +
                                          std::to_string(nullity(pruned)) + " for " +
                                          canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("pruning-invariance"));
    } else {
        rep.add(CheckResult::skip("pruning-invariance", "graph is disconnected"));
    }

    // unicyclic graphs: eta from the unique cycle's sign counts
    if (connected && n >= 3 && cyclomatic_number(g) == 1) {
        auto cycles = cactus_cycles(g);
        int want = cycles.front().balanced_counts() ? 2 : 1;
        if (eta != want)
            rep.add(CheckResult::fail("unicyclic-nullity",
                                      "eta=" + std::to_string(eta) + " expected " +
                                          std::to_string(want) + " for " +
                                          canonical_graph_json(g)));
        else
            rep.add(CheckResult::pass("unicyclic-nullity"));
    } else {
        rep.add(CheckResult::skip("unicyclic-nullity", "not unicyclic"));
    }

    // per-edge checks
    {
        std::vector<CheckResult> inter, steps, cuts;
        for (int i = 0; i < g.edge_count(); ++i) {
            inter.push_back(verify_interlacing(g, {i}));
            steps.push_back(verify_edge_nullity_step(g, {i}));
            cuts.push_back(verify_cut_edge_inequality(g, {i}));
        }
        rep.add(detail::aggregate("edge-interlacing", inter));
        rep.add(detail::aggregate("edge-deletion-nullity-step", steps));
        rep.add(detail::aggregate("cut-edge-inequality", cuts));
    }

    // coalescence at every cut vertex: split into one leaf block vs the rest
    if (connected) {
        std::vector<CheckResult> results;
        BlockDecomposition bd = block_decomposition(g);
        for (int w : bd.cut_vertices) {
            SignedGraph minus_w = induced_subgraph(g, [&] {
                                      std::vector<int> keep;
                                      for (int v = 0; v < n; ++v)
                                          if (v != w) keep.push_back(v);
                                      return keep;
                                  }()).graph;
            auto comps = connected_components(minus_w);
            // one side: first component (plus w); other side: everything else (plus w)
            std::vector<int> side1;
            for (int v : comps.front()) side1.push_back(v < w ? v : v + 1);
            side1.push_back(w);
            std::sort(side1.begin(), side1.end());
            std::vector<int> side2{w};
            for (std::size_t ci = 1; ci < comps.size(); ++ci)
                for (int v : comps[ci]) side2.push_back(v < w ? v : v + 1);
            std::sort(side2.begin(), side2.end());
            SignedGraph g1 = induced_subgraph(g, side1).graph;
            SignedGraph g2 = induced_subgraph(g, side2).graph;
            int want = nullity(g1) + nullity(g2) - 1;
            if (eta != want)
                results.push_back(CheckResult::fail(
                    "coalescence-additivity",
                    "split at cut vertex " + std::to_string(w) + ": eta=" + std::to_string(eta) +
                        " expected " + std::to_string(want) + " for " + canonical_graph_json(g)));
            else
                results.push_back(CheckResult::pass("coalescence-additivity"));
        }
        rep.add(detail::aggregate("coalescence-additivity", results));
    } else {
        rep.add(CheckResult::skip("coalescence-additivity", "graph is disconnected"));
    }

    rep.add(verify_tree_inertia(g));
    return rep;
}

}  // namespace netlap
