#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "netlap/errors.hpp"
#include "netlap/int_matrix.hpp"

namespace netlap {

// One undirected signed edge, canonical endpoint order u < v, sign in {-1,+1}.
struct Edge {
    int u = 0;
    int v = 0;
    int sign = 1;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.sign == b.sign;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.sign < b.sign;
    }
};

// Index into a graph's canonical edge list.
struct EdgeRef {
    int index = 0;
};

// Simple signed graph on dense vertex labels 0..n-1. Immutable after
// construction; every mutation-shaped operation returns a new graph.
class SignedGraph {
public:
    SignedGraph() = default;

    SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw input_error("SignedGraph: negative vertex count");
        for (auto& e : edges_) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_ || e.u == e.v)
                throw input_error("SignedGraph: edge endpoints out of range or loop");
            if (e.sign != 1 && e.sign != -1)
                throw input_error("SignedGraph: edge sign must be -1 or +1");
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
                throw input_error("SignedGraph: duplicate edge");
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const Edge& edge(EdgeRef e) const {
        if (e.index < 0 || e.index >= edge_count())
            throw input_error("SignedGraph: edge index out of range");
        return edges_[e.index];
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw input_error("SignedGraph: vertex out of range");
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (const auto& e : edges_)
            if (e.u == v || e.v == v) ++d;
        return d;
    }

    std::vector<std::vector<std::pair<int, int>>> adjacency_list() const {
        // per vertex: (neighbour, edge index)
        std::vector<std::vector<std::pair<int, int>>> adj(n_);
        for (int i = 0; i < edge_count(); ++i) {
            adj[edges_[i].u].push_back({edges_[i].v, i});
            adj[edges_[i].v].push_back({edges_[i].u, i});
        }
        return adj;
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const SignedGraph& a, const SignedGraph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::vector<Edge> edges_;  // sorted lexicographically, u < v
};

// positive degree minus negative degree of v.
inline int net_degree(const SignedGraph& g, int v) {
    g.check_vertex(v);
    int d = 0;
    for (const auto& e : g.edges())
        if (e.u == v || e.v == v) d += e.sign;
    return d;
}

inline IntMatrix adjacency_matrix(const SignedGraph& g) {
    IntMatrix a(g.order());
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = e.sign;
        a(e.v, e.u) = e.sign;
    }
    return a;
}

// Net Laplacian: diagonal of net-degrees minus signed adjacency.
// Symmetric with zero row sums by construction.
inline IntMatrix net_laplacian(const SignedGraph& g) {
    IntMatrix m(g.order());
    for (const auto& e : g.edges()) {
        m(e.u, e.v) = -e.sign;
        m(e.v, e.u) = -e.sign;
        m(e.u, e.u) += e.sign;
        m(e.v, e.v) += e.sign;
    }
    return m;
}

// Flip every edge sign. Involution; the nullity is invariant under it.
inline SignedGraph negate(const SignedGraph& g) {
    std::vector<Edge> es = g.edges();
    for (auto& e : es) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(es));
}

inline SignedGraph delete_edge(const SignedGraph& g, EdgeRef e) {
    g.edge(e);  // validates
    std::vector<Edge> es;
    es.reserve(g.edges().size() - 1);
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e.index) es.push_back(g.edges()[i]);
    return SignedGraph(g.order(), std::move(es));
}

struct InducedSubgraph {
    SignedGraph graph;
    std::vector<int> original_label;  // new index -> original vertex
};

// Induced subgraph on `keep`, relabelled compactly preserving relative order.
inline InducedSubgraph induced_subgraph(const SignedGraph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_label(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        g.check_vertex(keep[i]);
        new_label[keep[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (const auto& e : g.edges()) {
        int nu = new_label[e.u];
        int nv = new_label[e.v];
        if (nu >= 0 && nv >= 0) es.push_back({nu, nv, e.sign});
    }
    return {SignedGraph(static_cast<int>(keep.size()), std::move(es)), std::move(keep)};
}

inline SignedGraph disjoint_union(const SignedGraph& g1, const SignedGraph& g2) {
    std::vector<Edge> es = g1.edges();
    for (const auto& e : g2.edges())
        es.push_back({e.u + g1.order(), e.v + g1.order(), e.sign});
    return SignedGraph(g1.order() + g2.order(), std::move(es));
}

// Coalescence: identify vertex u of g1 with vertex v of g2. The identified
// vertex keeps label u; g2's remaining vertices are appended after g1's.
inline SignedGraph coalesce(const SignedGraph& g1, int u, const SignedGraph& g2, int v) {
    g1.check_vertex(u);
    g2.check_vertex(v);
    auto map2 = [&](int x) {
        if (x == v) return u;
        return g1.order() + (x < v ? x : x - 1);
    };
    std::vector<Edge> es = g1.edges();
    for (const auto& e : g2.edges()) es.push_back({map2(e.u), map2(e.v), e.sign});
    return SignedGraph(g1.order() + g2.order() - 1, std::move(es));
}

// Disjoint union of g1 and g2 plus one bridge between u (in g1) and v (in g2).
inline SignedGraph bridge_join(const SignedGraph& g1, int u, const SignedGraph& g2, int v,
                               int sign) {
    g1.check_vertex(u);
    g2.check_vertex(v);
    SignedGraph un = disjoint_union(g1, g2);
    std::vector<Edge> es = un.edges();
    es.push_back({u, g1.order() + v, sign});
    return SignedGraph(un.order(), std::move(es));
}

// Two all-positive complete graphs K_k joined by all-negative cross edges.
// Together with its negation, the unique connected graph of order 2k whose
// net Laplacian has nullity 2k-1.
inline SignedGraph complete_join_neg(int k) {
    if (k < 1) throw input_error("complete_join_neg: k must be >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v) {
            bool same_part = (u < k) == (v < k);
            es.push_back({u, v, same_part ? 1 : -1});
        }
    return SignedGraph(2 * k, std::move(es));
}

inline SignedGraph edgeless_graph(int n) { return SignedGraph(n, {}); }

// Path 0-1-...-k with the given edge signs.
inline SignedGraph path_graph(const std::vector<int>& signs) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < signs.size(); ++i)
        es.push_back({static_cast<int>(i), static_cast<int>(i) + 1, signs[i]});
    return SignedGraph(static_cast<int>(signs.size()) + 1, std::move(es));
}

// Cycle 0-1-...-(k-1)-0; signs[i] is the sign of edge (i, i+1 mod k).
inline SignedGraph cycle_graph(const std::vector<int>& signs) {
    int k = static_cast<int>(signs.size());
    if (k < 3) throw input_error("cycle_graph: need at least 3 edges");
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.push_back({i, (i + 1) % k, signs[i]});
    return SignedGraph(k, std::move(es));
}

// Star with centre 0 and one leaf per sign.
inline SignedGraph star_graph(const std::vector<int>& signs) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < signs.size(); ++i)
        es.push_back({0, static_cast<int>(i) + 1, signs[i]});
    return SignedGraph(static_cast<int>(signs.size()) + 1, std::move(es));
}

inline SignedGraph complete_graph(int n, int sign) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v, sign});
    return SignedGraph(n, std::move(es));
}

// Two terminals (0 and 1) joined by three internally disjoint paths with edge
// counts a, b, c; signs[p] lists the edge signs along path p from terminal 0.
// At most one path may have length 1, otherwise the graph would need a
// multi-edge.
inline SignedGraph theta_graph(int a, int b, int c,
                               const std::vector<std::vector<int>>& signs) {
    const int len[3] = {a, b, c};
    if (a < 1 || b < 1 || c < 1) throw input_error("theta_graph: path lengths must be >= 1");
    if ((a == 1) + (b == 1) + (c == 1) > 1)
        throw input_error("theta_graph: at most one path of length 1");
    if (signs.size() != 3) throw input_error("theta_graph: need three sign lists");
    for (int p = 0; p < 3; ++p)
        if (static_cast<int>(signs[p].size()) != len[p])
            throw input_error("theta_graph: sign list length mismatch");

    std::vector<Edge> es;
    int next = 2;
    for (int p = 0; p < 3; ++p) {
        int prev = 0;
        for (int i = 0; i < len[p]; ++i) {
            int cur = (i == len[p] - 1) ? 1 : next++;
            es.push_back({prev, cur, signs[p][i]});
            prev = cur;
        }
    }
    return SignedGraph(next, std::move(es));
}

}  // namespace netlap
