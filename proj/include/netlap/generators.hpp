#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "netlap/errors.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

// Deterministic RNG wrapper. mt19937_64 output is fully specified by the
// standard and the draws below avoid std::uniform_int_distribution, whose
// output is implementation-defined — same seed, same graph, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int below(int m) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(m)); }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    int sign(double neg_prob) { return chance(neg_prob) ? -1 : 1; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(static_cast<int>(i))]);
    }

private:
    std::mt19937_64 eng_;
};

inline SignedGraph random_tree(int n, double neg_prob, std::uint64_t seed) {
    if (n < 1) throw input_error("random_tree: n must be >= 1");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({rng.below(v), v, rng.sign(neg_prob)});
    return SignedGraph(n, std::move(es));
}

inline SignedGraph random_unicyclic(int n, int cycle_len, double neg_prob, std::uint64_t seed) {
    if (cycle_len < 3 || cycle_len > n)
        throw input_error("random_unicyclic: need 3 <= cycle length <= n");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int i = 0; i < cycle_len; ++i)
        es.push_back({i, (i + 1) % cycle_len, rng.sign(neg_prob)});
    for (int v = cycle_len; v < n; ++v) es.push_back({rng.below(v), v, rng.sign(neg_prob)});
    return SignedGraph(n, std::move(es));
}

// Requested sign pattern for the cycles of a generated cactus.
//   Unbalanced: every cycle has m+ != m-.
//   Balanced:   every cycle has m+ == m- (cycle lengths forced even).
//   Mixed:      alternating, at least one of each when there are >= 2 cycles.
//   Free:       independent fair coin per edge.
enum class CycleSignProfile { Unbalanced, Balanced, Mixed, Free };

namespace detail {

inline std::vector<int> cycle_signs(int len, bool balanced, Rng& rng) {
    int neg;
    if (balanced) {
        neg = len / 2;
    } else {
        do {
            neg = rng.below(len + 1);
        } while (2 * neg == len);
    }
    std::vector<int> signs(len, 1);
    for (int i = 0; i < neg; ++i) signs[i] = -1;
    rng.shuffle(signs);
    return signs;
}

}  // namespace detail

// Connected cactus with exactly `cycles` cycle blocks, built by coalescing
// cycles and pendant edges onto a growing graph. beta == cycles by
// construction.
inline SignedGraph random_cactus(int n, int cycles, CycleSignProfile profile,
                                 std::uint64_t seed) {
    if (n < 1 || cycles < 0) throw input_error("random_cactus: bad parameters");
    const int min_len = profile == CycleSignProfile::Unbalanced ? 3 : 4;
    if (n - 1 < cycles * (min_len - 1))
        throw input_error("random_cactus: not enough vertices for requested cycles");

    Rng rng(seed);
    std::vector<Edge> es;
    int built = 1;  // vertex 0 exists
    for (int ci = 0; ci < cycles; ++ci) {
        int budget = (n - built) - (cycles - 1 - ci) * (min_len - 1);
        int max_len = std::min(8, budget + 1);
        bool balanced;
        switch (profile) {
            case CycleSignProfile::Unbalanced: balanced = false; break;
            case CycleSignProfile::Balanced: balanced = true; break;
            case CycleSignProfile::Mixed: balanced = (ci % 2 == 0); break;
            default: balanced = rng.chance(0.5); break;
        }
        int len;
        if (balanced) {
            int half_choices = max_len / 2 - 1;  // lengths 4, 6, ..., 2*(half_choices+1)
            len = 4 + 2 * rng.below(std::max(1, half_choices));
            if (len > max_len) len = 4;
        } else {
            len = 3 + rng.below(std::max(1, max_len - 2));
        }
        std::vector<int> signs = detail::cycle_signs(len, balanced, rng);
        int anchor = rng.below(built);
        // cycle: anchor -> new vertices built..built+len-2 -> anchor
        int prev = anchor;
        for (int i = 0; i < len - 1; ++i) {
            es.push_back({prev, built + i, signs[i]});
            prev = built + i;
        }
        es.push_back({prev, anchor, signs[len - 1]});
        built += len - 1;
    }
    while (built < n) {
        es.push_back({rng.below(built), built, rng.sign(0.5)});
        ++built;
    }
    return SignedGraph(n, std::move(es));
}

// Erdos-Renyi-style signed graph; may be disconnected.
inline SignedGraph random_signed(int n, double edge_prob, double neg_prob, std::uint64_t seed) {
    if (n < 0) throw input_error("random_signed: n must be >= 0");
    Rng rng(seed);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) es.push_back({u, v, rng.sign(neg_prob)});
    return SignedGraph(n, std::move(es));
}

// Random spanning tree plus independent extra edges: connected by construction.
inline SignedGraph random_connected(int n, double extra_edge_prob, double neg_prob,
                                    std::uint64_t seed) {
    if (n < 1) throw input_error("random_connected: n must be >= 1");
    Rng rng(seed);
    std::vector<Edge> es;
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    for (int v = 1; v < n; ++v) {
        int u = rng.below(v);
        es.push_back({u, v, rng.sign(neg_prob)});
        present[u][v] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present[u][v] && rng.chance(extra_edge_prob))
                es.push_back({u, v, rng.sign(neg_prob)});
    return SignedGraph(n, std::move(es));
}

inline SignedGraph random_theta(int a, int b, int c, double neg_prob, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<int>> signs(3);
    const int len[3] = {a, b, c};
    for (int p = 0; p < 3; ++p)
        for (int i = 0; i < len[p]; ++i)
            signs[p].push_back(rng.sign(neg_prob));
    return theta_graph(a, b, c, signs);
}

}  // namespace netlap
