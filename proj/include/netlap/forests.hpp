#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netlap/bigint.hpp"
#include "netlap/errors.hpp"
#include "netlap/exact.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

// A spanning forest: acyclic edge subset, every vertex of the graph counted
// (isolated vertices are singleton components). With k components the subset
// has exactly n-k edges; weight is the product of component orders and sign
// the product of edge signs.
struct SpanningForest {
    std::vector<int> edge_indices;     // increasing
    std::vector<int> component_sizes;  // by smallest contained vertex
    int sign = 1;
    Bigint weight;
};

// Enumeration refuses above this order by default; the subset space is
// exponential and a partial sum would be a wrong answer, not an approximation.
constexpr int kDefaultForestCap = 12;

namespace detail {

inline int dsu_find(const std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
}

// Depth-first enumeration of acyclic edge subsets in increasing index order,
// i.e. lexicographic on the edge-index tuples. `fn(chosen, parent)` fires once
// per forest; `need` < 0 means every size, otherwise exactly `need` more edges
// must be added below this node.
template <typename Fn>
void enumerate_forests(const SignedGraph& g, int start, int need, std::vector<int>& chosen,
                       const std::vector<int>& parent, Fn&& fn) {
    if (need == 0) {
        fn(chosen, parent);
        return;
    }
    if (need < 0) fn(chosen, parent);
    const int m = g.edge_count();
    const int last = need > 0 ? m - need : m - 1;
    for (int i = start; i <= last; ++i) {
        const Edge& e = g.edges()[i];
        int ru = dsu_find(parent, e.u);
        int rv = dsu_find(parent, e.v);
        if (ru == rv) continue;  // would close a cycle
        std::vector<int> next_parent = parent;
        next_parent[ru] = rv;
        chosen.push_back(i);
        enumerate_forests(g, i + 1, need < 0 ? need : need - 1, chosen, next_parent, fn);
        chosen.pop_back();
    }
}

inline SpanningForest build_forest(const SignedGraph& g, const std::vector<int>& chosen,
                                   const std::vector<int>& parent) {
    SpanningForest f;
    f.edge_indices = chosen;
    f.sign = 1;
    for (int i : chosen) f.sign *= g.edges()[i].sign;
    // component sizes keyed by smallest vertex of each component
    f.weight = Bigint(1);
    std::vector<int> min_vertex(g.order(), -1);
    std::vector<int> count(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        int r = dsu_find(parent, v);
        if (min_vertex[r] < 0) min_vertex[r] = v;
        ++count[r];
    }
    std::vector<std::pair<int, int>> comps;  // (min vertex, size)
    for (int r = 0; r < g.order(); ++r)
        if (count[r] > 0)
            comps.push_back({min_vertex[r], count[r]});
    std::sort(comps.begin(), comps.end());
    for (auto& [mv, sz] : comps) {
        f.component_sizes.push_back(sz);
        f.weight *= Bigint(sz);
    }
    return f;
}

inline void check_cap(const SignedGraph& g, int cap) {
    if (g.order() > cap)
        throw cap_error("forest enumeration: order " + std::to_string(g.order()) +
                        " exceeds cap " + std::to_string(cap));
}

}  // namespace detail

// Streams every spanning k-component forest of g in lexicographic edge-index
// order. Refuses when g.order() exceeds the cap.
template <typename Fn>
void for_each_spanning_k_forest(const SignedGraph& g, int k, Fn&& fn,
                                int cap = kDefaultForestCap) {
    detail::check_cap(g, cap);
    if (k < 0 || k > g.order())
        throw input_error("spanning forests: k must be between 0 and n");
    const int need = g.order() - k;
    if (need > g.edge_count()) return;
    std::vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v) parent[v] = v;
    std::vector<int> chosen;
    detail::enumerate_forests(g, 0, need, chosen, parent,
                              [&](const std::vector<int>& ch, const std::vector<int>& par) {
                                  fn(detail::build_forest(g, ch, par));
                              });
}

inline std::vector<SpanningForest> spanning_k_forests(const SignedGraph& g, int k,
                                                      int cap = kDefaultForestCap) {
    std::vector<SpanningForest> out;
    for_each_spanning_k_forest(g, k, [&](SpanningForest f) { out.push_back(std::move(f)); }, cap);
    return out;
}

// c_k = (-1)^(n-k) * sum over spanning k-forests of weight * sign.
inline Bigint coefficient_via_forests(const SignedGraph& g, int k, int cap = kDefaultForestCap) {
    Bigint sum;
    for_each_spanning_k_forest(
        g, k, [&](const SpanningForest& f) { sum += f.sign < 0 ? -f.weight : f.weight; }, cap);
    return (g.order() - k) % 2 ? -sum : sum;
}

// Every coefficient in one enumeration pass over all acyclic edge subsets.
inline CharPoly char_poly_via_forests(const SignedGraph& g, int cap = kDefaultForestCap) {
    detail::check_cap(g, cap);
    const int n = g.order();
    std::vector<Bigint> sums(n + 1);  // sums[k]
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::vector<int> chosen;
    detail::enumerate_forests(g, 0, -1, chosen, parent,
                              [&](const std::vector<int>& ch, const std::vector<int>& par) {
                                  SpanningForest f = detail::build_forest(g, ch, par);
                                  int k = n - static_cast<int>(ch.size());
                                  sums[k] += f.sign < 0 ? -f.weight : f.weight;
                              });
    CharPoly p;
    p.coeffs.resize(n + 1);
    for (int k = 0; k <= n; ++k) p.coeffs[k] = (n - k) % 2 ? -sums[k] : sums[k];
    return p;
}

// The linear coefficient c_1 via the spanning-tree sign sum
// c_1 = (-1)^(n-1) * n * sum of tree signs; the sign sum itself is exposed
// because a connected graph has nullity 1 exactly when it is nonzero.
struct TreeSum {
    Bigint c1;
    Bigint sign_sum;
    bool has_spanning_tree = false;
};

inline TreeSum c1_tree_sum(const SignedGraph& g, int cap = kDefaultForestCap) {
    TreeSum out;
    for_each_spanning_k_forest(
        g, 1,
        [&](const SpanningForest& f) {
            out.has_spanning_tree = true;
            out.sign_sum += Bigint(f.sign);
        },
        cap);
    Bigint scaled = Bigint(g.order()) * out.sign_sum;
    out.c1 = (g.order() - 1) % 2 ? -scaled : scaled;
    return out;
}

}  // namespace netlap
