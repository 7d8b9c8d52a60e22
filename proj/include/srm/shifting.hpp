#pragma once

// The (x,y)-shift (Kelmans operation), shiftedness testing, iterated
// shifting to a fixed point, and the Perron-guided neighbor rewiring.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

class NotConnectedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyRewireSetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

// Vertices v with {y,v} an edge, v != x, and {x,v} not an edge of g.
// Both the shift and the rewiring move exactly the edges {y,v} -> {x,v}
// over this set; all membership tests are against the original edge set.
inline std::vector<int> moved_endpoints(const Graph& g, int x, int y) {
    std::vector<int> moved;
    g.for_each_neighbor(y, [&](int v) {
        if (v != x && !g.has_edge(x, v)) moved.push_back(v);
    });
    return moved;
}

inline Graph apply_moves(const Graph& g, int x, int y, const std::vector<int>& moved) {
    Graph h = g;
    for (int v : moved) {
        h.remove_edge_in_place(y, v);
        h.add_edge_in_place(x, v);
    }
    return h;
}

}  // namespace detail

// Replace y by x in every edge containing y but not x whose replacement is
// not already present. Atomic: all replacement tests use the original edges.
inline Graph shift_xy(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("shift_xy: x and y must differ");
    if (x < 1 || x > g.n() || y < 1 || y > g.n())
        throw std::invalid_argument("shift_xy: vertex label out of range");
    return detail::apply_moves(g, x, y, detail::moved_endpoints(g, x, y));
}

// Fixed point of every shift with x < y. Single-step domination test:
// for each edge {a,b} with a < b, every c < b (c != a) must give edge {a,c}
// and every c < a must give edge {c,b}. Equivalent to the all-pairs
// definition, and linear in the number of edges.
inline bool is_shifted(const Graph& g) {
    for (int a = 1; a <= g.n(); ++a) {
        bool fail = false;
        g.for_each_neighbor(a, [&](int b) {
            if (fail || a > b) return;
            for (int c = 1; c < b && !fail; ++c)
                if (c != a && !g.has_edge(a, c)) fail = true;
            for (int c = 1; c < a && !fail; ++c)
                if (!g.has_edge(c, b)) fail = true;
        });
        if (fail) return false;
    }
    return true;
}

// Sum over edges of both endpoint labels; strictly decreases under every
// non-identity shift with x < y, which is what terminates fully_shift.
inline std::uint64_t label_potential(const Graph& g) {
    std::uint64_t phi = 0;
    for (auto [u, v] : edges(g)) phi += static_cast<std::uint64_t>(u) + v;
    return phi;
}

struct ShiftStep {
    int x;
    int y;
    int edges_moved;
};

struct ShiftTrace {
    std::vector<ShiftStep> steps;  // non-identity applications, in order
    Graph result;
};

// Deterministic lexicographic sweeps over pairs (x, y), x < y, repeated
// until a full sweep changes nothing. The fixed point of this particular
// order is what the rest of the toolkit calls the shifted image; no claim
// is made that other orders give the same labeled graph.
inline ShiftTrace fully_shift(const Graph& g) {
    Graph cur = g;
    std::vector<ShiftStep> steps;
    for (;;) {
        bool changed = false;
        for (int x = 1; x <= cur.n(); ++x)
            for (int y = x + 1; y <= cur.n(); ++y) {
                const auto moved = detail::moved_endpoints(cur, x, y);
                if (moved.empty()) continue;
                cur = detail::apply_moves(cur, x, y, moved);
                steps.push_back({x, y, static_cast<int>(moved.size())});
                changed = true;
            }
        if (!changed) break;
    }
    return {std::move(steps), std::move(cur)};
}

// Move all edges {v, w} with w in N(v) \ (N(u) u {u}) to {u, w}. Requires a
// connected graph and a nonempty rewire set; the two violations are
// distinguishable by exception type.
inline Graph rewire_neighbors(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("rewire_neighbors: u and v must differ");
    if (u < 1 || u > g.n() || v < 1 || v > g.n())
        throw std::invalid_argument("rewire_neighbors: vertex label out of range");
    if (!is_connected(g)) throw NotConnectedError("rewire_neighbors: graph must be connected");
    const auto moved = detail::moved_endpoints(g, u, v);
    if (moved.empty())
        throw EmptyRewireSetError("rewire_neighbors: N(v) \\ (N(u) u {u}) is empty");
    return detail::apply_moves(g, u, v, moved);
}

inline GraphFamily shift_family(const GraphFamily& f, int x, int y) {
    std::vector<Graph> shifted;
    shifted.reserve(f.members.size());
    for (const Graph& g : f.members) shifted.push_back(shift_xy(g, x, y));
    return GraphFamily(f.n, std::move(shifted));
}

inline GraphFamily fully_shift_family(const GraphFamily& f) {
    std::vector<Graph> shifted;
    shifted.reserve(f.members.size());
    for (const Graph& g : f.members) shifted.push_back(fully_shift(g).result);
    return GraphFamily(f.n, std::move(shifted));
}

}  // namespace srm
