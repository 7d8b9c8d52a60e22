#pragma once

// Labeled-graph enumeration in graph6-lexicographic order, plus seeded
// uniform samplers. Index bit layout: edge slot j in column order
// (1,2),(1,3),(2,3),(1,4),... maps to bit (C-1-j) of the index, which makes
// ascending indices coincide with lexicographic order of graph6 strings.

#include <cstdint>

#include "srm/graph.hpp"
#include "srm/rng.hpp"

namespace srm {

inline std::uint64_t pair_count(int n) { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }

inline void check_enumerable(int n) {
    if (n < 1) throw std::invalid_argument("enumeration: vertex count must be >= 1");
    if (pair_count(n) > 63)
        throw std::invalid_argument("enumeration: index space needs C(n,2) <= 63 (n <= 11)");
}

inline Graph graph_from_index(int n, std::uint64_t index) {
    check_enumerable(n);
    const std::uint64_t c = pair_count(n);
    if (c < 64 && index >= (std::uint64_t(1) << c))
        throw std::invalid_argument("graph_from_index: index out of range");
    Graph g(n);
    std::uint64_t j = 0;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u, ++j)
            if ((index >> (c - 1 - j)) & 1) g.add_edge_in_place(u, v);
    return g;
}

inline std::uint64_t index_of_graph(const Graph& g) {
    check_enumerable(g.n());
    const std::uint64_t c = pair_count(g.n());
    std::uint64_t index = 0, j = 0;
    for (int v = 2; v <= g.n(); ++v)
        for (int u = 1; u < v; ++u, ++j)
            if (g.has_edge(u, v)) index |= std::uint64_t(1) << (c - 1 - j);
    return index;
}

// Uniform labeled graph: each vertex pair present with probability 1/2,
// consuming one generator bit per pair in column order.
inline Graph random_graph(int n, Xoshiro256StarStar& rng) {
    Graph g(n);
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u)
            if (rng.bit()) g.add_edge_in_place(u, v);
    return g;
}

inline Graph random_graph_p(int n, double p, Xoshiro256StarStar& rng) {
    Graph g(n);
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u)
            if (rng.unit() < p) g.add_edge_in_place(u, v);
    return g;
}

inline Graph random_connected_graph(int n, double p, Xoshiro256StarStar& rng,
                                    std::uint64_t max_attempts = 1'000'000) {
    for (std::uint64_t k = 0; k < max_attempts; ++k) {
        Graph g = random_graph_p(n, p, rng);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: rejection sampling did not finish");
}

}  // namespace srm
