#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "netlap/errors.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

inline std::vector<std::vector<int>> connected_components(const SignedGraph& g) {
    const int n = g.order();
    auto adj = g.adjacency_list();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [w, ei] : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const SignedGraph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

namespace detail {

// one lowpoint DFS serving bridges, articulation points and blocks
struct DfsLow {
    std::vector<int> disc, low, parent_edge;
    std::vector<int> bridges;          // edge indices
    std::vector<bool> articulation;    // per vertex
    std::vector<std::vector<int>> block_edges;  // edge indices per block

    explicit DfsLow(const SignedGraph& g) {
        const int n = g.order();
        disc.assign(n, -1);
        low.assign(n, 0);
        parent_edge.assign(n, -1);
        articulation.assign(n, false);
        auto adj = g.adjacency_list();
        int timer = 0;
        std::vector<int> edge_stack;

        std::function<void(int)> dfs = [&](int u) {
            disc[u] = low[u] = timer++;
            int children = 0;
            for (auto [w, ei] : adj[u]) {
                if (ei == parent_edge[u]) continue;
                if (disc[w] < 0) {
                    ++children;
                    parent_edge[w] = ei;
                    edge_stack.push_back(ei);
                    dfs(w);
                    low[u] =
                        std::min(low[u], low[w]);
                    if (low[w] > disc[u])
                        bridges.push_back(ei);
                    if (low[w] >= disc[u]) {
                        if (parent_edge[u] >= 0) articulation[u] = true;
                        std::vector<int> blk;
                        while (true) {
                            int top = edge_stack.back();
                            edge_stack.pop_back();
                            blk.push_back(top);
                            if (top == ei) break;
                        }
                        block_edges.push_back(std::move(blk));
                    }
                } else if (disc[w] < disc[u]) {
                    edge_stack.push_back(ei);
                    low[u] =
                        std::min(low[u], disc[w]);
                }
            }
            if (parent_edge[u] < 0 && children >= 2)
                articulation[u] = true;
        };

        for (int s = 0; s < n; ++s)
            if (disc[s] < 0) dfs(s);
    }
};

}  // namespace detail

// Edges whose removal disconnects their component.
inline std::vector<EdgeRef> cut_edges(const SignedGraph& g) {
    detail::DfsLow d(g);
    std::sort(d.bridges.begin(), d.bridges.end());
    std::vector<EdgeRef> out;
    for (int ei : d.bridges) out.push_back({ei});
    return out;
}

inline std::vector<int> cut_vertices(const SignedGraph& g) {
    detail::DfsLow d(g);
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (d.articulation[v]) out.push_back(v);
    return out;
}

// A maximal 2-connected block or a bridge edge.
struct Block {
    std::vector<int> vertices;      // sorted
    std::vector<int> edge_indices;  // sorted

    bool is_bridge() const { return edge_indices.size() == 1; }
    bool is_cycle() const { return edge_indices.size() >= 2 && edge_indices.size() == vertices.size(); }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;
    // block-cut tree: for each block, the cut vertices it contains
    std::vector<std::vector<int>> block_cut_vertices;
};

inline BlockDecomposition block_decomposition(const SignedGraph& g) {
    if (!is_connected(g)) throw input_error("block_decomposition: graph must be connected");
    detail::DfsLow d(g);
    BlockDecomposition out;
    out.cut_vertices = cut_vertices(g);
    for (auto& blk : d.block_edges) {
        Block b;
        b.edge_indices = blk;
        std::sort(b.edge_indices.begin(), b.edge_indices.end());
        for (int ei : b.edge_indices) {
            b.vertices.push_back(g.edges()[ei].u);
            b.vertices.push_back(g.edges()[ei].v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](const Block& a, const Block& b) {
        return a.edge_indices.front() < b.edge_indices.front();
    });
    for (const auto& b : out.blocks) {
        std::vector<int> cuts;
        for (int v : b.vertices)
            if (std::binary_search(out.cut_vertices.begin(), out.cut_vertices.end(), v))
                cuts.push_back(v);
        out.block_cut_vertices.push_back(std::move(cuts));
    }
    return out;
}

// beta = |E| - |V| + 1, the dimension of the cycle space of a connected graph.
inline int cyclomatic_number(const SignedGraph& g) {
    if (!is_connected(g)) throw input_error("cyclomatic_number: graph must be connected");
    return g.edge_count() - g.order() + 1;
}

// Connected graph in which no two cycles share an edge, equivalently every
// block is a single edge or a single cycle.
inline bool is_cactus(const SignedGraph& g) {
    BlockDecomposition d = block_decomposition(g);  // validates connectivity
    for (const auto& b : d.blocks)
        if (!b.is_bridge() && !b.is_cycle()) return false;
    return true;
}

// One cycle of a cactus, in canonical walk order.
struct CycleInfo {
    std::vector<int> vertices;      // starting at the smallest vertex, toward its smaller neighbour
    std::vector<int> edge_indices;  // walk order
    int m_plus = 0;
    int m_minus = 0;

    int length() const { return static_cast<int>(edge_indices.size()); }
    bool balanced_counts() const { return m_plus == m_minus; }
};

inline std::vector<CycleInfo> cactus_cycles(const SignedGraph& g) {
    BlockDecomposition d = block_decomposition(g);
    for (const auto& b : d.blocks)
        if (!b.is_bridge() && !b.is_cycle())
            throw input_error("cactus_cycles: block on " + std::to_string(b.vertices.size()) +
                              " vertices with " + std::to_string(b.edge_indices.size()) +
                              " edges is neither an edge nor a cycle");
    std::vector<CycleInfo> out;
    for (const auto& b : d.blocks) {
        if (!b.is_cycle()) continue;
        // neighbours within the block
        std::vector<std::vector<std::pair<int, int>>> nbr;  // vertex -> (other, edge)
        std::vector<int> local(g.order(), -1);
        for (std::size_t i = 0; i < b.vertices.size(); ++i)
            local[b.vertices[i]] = static_cast<int>(i);
        nbr.assign(b.vertices.size(), {});
        for (int ei : b.edge_indices) {
            const Edge& e = g.edges()[ei];
            nbr[local[e.u]].push_back({e.v, ei});
            nbr[local[e.v]].push_back({e.u, ei});
        }
        CycleInfo info;
        int start = b.vertices.front();
        auto& first_nbrs = nbr[local[start]];
        int next = std::min(first_nbrs[0].first, first_nbrs[1].first);
        int prev = start;
        info.vertices.push_back(start);
        int cur = next;
        while (cur != start) {
            info.vertices.push_back(cur);
            auto& ns = nbr[local[cur]];
            int nxt = ns[0].first == prev ? ns[1].first : ns[0].first;
            prev = cur;
            cur = nxt;
        }
        for (std::size_t i = 0; i < info.vertices.size(); ++i) {
            int a = info.vertices[i];
            int bb = info.vertices[(i + 1) % info.vertices.size()];
            auto& ns = nbr[local[a]];
            int ei = ns[0].first == bb ? ns[0].second : ns[1].second;
            info.edge_indices.push_back(ei);
            if (g.edges()[ei].sign > 0)
                ++info.m_plus;
            else
                ++info.m_minus;
        }
        out.push_back(std::move(info));
    }
    return out;
}

// Repeatedly strip degree-1 vertices. A tree collapses to a single vertex
// (never the empty graph); anything else collapses to its 2-core. Preserves
// nullity.
inline SignedGraph prune_pendant_trees(const SignedGraph& g) {
    if (!is_connected(g)) throw input_error("prune_pendant_trees: graph must be connected");
    if (g.edge_count() == g.order() - 1 || g.order() <= 1) return SignedGraph(1, {});
    std::vector<bool> alive(g.order(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(g.order(), 0);
        for (const auto& e : g.edges())
            if (alive[e.u] && alive[e.v]) {
                ++deg[e.u];
                ++deg[e.v];
            }
        for (int v = 0; v < g.order(); ++v)
            if (alive[v] && deg[v] == 1) {
                alive[v] = false;
                changed = true;
            }
    }
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (alive[v]) keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

}  // namespace netlap
