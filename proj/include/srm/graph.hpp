#pragma once

// Undirected simple graphs on vertices 1..n with bitset adjacency rows,
// plus the extremal constructions used throughout the toolkit.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srm {

class Graph {
public:
    explicit Graph(int n)
        : n_(checked_n(n)),
          words_((n + 63) / 64),
          bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0) {}

    int n() const noexcept { return n_; }
    int words() const noexcept { return words_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[row_idx(u - 1) + (v - 1) / 64] >> ((v - 1) % 64)) & 1u;
    }

    // Fast-path row word for n <= 64; bit (v-1) set iff v is a neighbor.
    std::uint64_t row64(int u) const { return bits_[row_idx(u - 1)]; }

    const std::uint64_t* row(int u) const { return bits_.data() + row_idx(u - 1); }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(bits_[row_idx(u - 1) + w]);
        return d;
    }

    // Builder escape hatch: library code constructs graphs with these and then
    // treats the value as immutable (all public operations are pure).
    void add_edge_in_place(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
        set_bit(u - 1, v - 1);
        set_bit(v - 1, u - 1);
    }

    void remove_edge_in_place(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("remove_edge: loops are not allowed");
        clear_bit(u - 1, v - 1);
        clear_bit(v - 1, u - 1);
    }

    template <class Fn>
    void for_each_neighbor(int u, Fn&& fn) const {
        const std::size_t base = row_idx(u - 1);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[base + w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                fn(w * 64 + b + 1);
            }
        }
    }

    bool same_bits(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    const std::vector<std::uint64_t>& raw_bits() const noexcept { return bits_; }

private:
    static int checked_n(int n) {
        if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
        return n;
    }
    void check_vertex(int u) const {
        if (u < 1 || u > n_)
            throw std::invalid_argument("vertex label " + std::to_string(u) + " out of range [1," +
                                        std::to_string(n_) + "]");
    }
    std::size_t row_idx(int u0) const { return static_cast<std::size_t>(u0) * words_; }
    void set_bit(int u0, int v0) { bits_[row_idx(u0) + v0 / 64] |= std::uint64_t(1) << (v0 % 64); }
    void clear_bit(int u0, int v0) { bits_[row_idx(u0) + v0 / 64] &= ~(std::uint64_t(1) << (v0 % 64)); }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph add_edge(Graph g, int u, int v) {
    g.add_edge_in_place(u, v);
    return g;
}

inline int degree(const Graph& g, int v) { return g.degree(v); }

inline std::vector<int> neighbors(const Graph& g, int v) {
    std::vector<int> out;
    g.for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

inline std::uint64_t edge_count(const Graph& g) {
    std::uint64_t twice = 0;
    for (int v = 1; v <= g.n(); ++v) twice += g.degree(v);
    return twice / 2;
}

// Edges in lexicographic order (u, v), u < v.
inline std::vector<std::pair<int, int>> edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= g.n(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    std::sort(out.begin(), out.end());
    return out;
}

inline Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 1; u <= g.n(); ++u)
        for (int v = u + 1; v <= g.n(); ++v)
            if (!g.has_edge(u, v)) h.add_edge_in_place(u, v);
    return h;
}

// Concatenating forms: the second argument is relabeled to live above the first.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n() + b.n());
    for (auto [u, v] : edges(a)) h.add_edge_in_place(u, v);
    for (auto [u, v] : edges(b)) h.add_edge_in_place(u + a.n(), v + a.n());
    return h;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph h = disjoint_union(a, b);
    for (int u = 1; u <= a.n(); ++u)
        for (int v = a.n() + 1; v <= a.n() + b.n(); ++v) h.add_edge_in_place(u, v);
    return h;
}

inline bool graphs_equal(const Graph& a, const Graph& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("graphs_equal: vertex counts differ");
    return a.same_bits(b);
}

inline bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    const int n = g.n();
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.for_each_neighbor(u, [&](int v) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        });
    }
    return reached == n;
}

// Induced subgraph on S, relabeled to 1..|S| preserving the order of S.
// labels[i] is the original label of new vertex i+1.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};

inline InducedSubgraph induced(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("induced: vertex set must be nonempty");
    std::vector<char> taken(g.n() + 1, 0);
    for (int v : s) {
        if (v < 1 || v > g.n()) throw std::invalid_argument("induced: vertex label out of range");
        if (taken[v]) throw std::invalid_argument("induced: duplicate vertex label");
        taken[v] = 1;
    }
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) h.add_edge_in_place(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return {std::move(h), s};
}

// Parameters of the extremal family A(n, m, i) =
//   K_{i-1}  joined to  (K_{2m-2i+3} union the empty graph on n-2m+i-2 vertices),
// with parts [1..i-1], [i..2m-i+2], [2m-i+3..n].
struct ExtremalParams {
    int n;
    int m;
    int i;

    void validate() const {
        if (m < 1 || 2 * m > n - 2)
            throw std::invalid_argument("ExtremalParams: need 1 <= m <= (n-2)/2");
        if (i < 1 || i > m + 1)
            throw std::invalid_argument("ExtremalParams: need 1 <= i <= m+1");
    }
};

inline Graph construct_extremal(ExtremalParams p) {
    p.validate();
    Graph g(p.n);
    const int k = p.i - 1;          // vertices 1..k dominate everything
    const int t = 2 * p.m - p.i + 2; // clique part is k+1..t
    for (int u = 1; u <= k; ++u)
        for (int v = u + 1; v <= p.n; ++v) g.add_edge_in_place(u, v);
    for (int u = k + 1; u <= t; ++u)
        for (int v = u + 1; v <= t; ++v) g.add_edge_in_place(u, v);
    return g;
}

enum class ExtremalKind { A1, AMPlus1, Neither };

inline const char* to_string(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::A1: return "A1";
        case ExtremalKind::AMPlus1: return "A_m_plus_1";
        default: return "neither";
    }
}

// Structural recognition, label-free and tolerance-free:
//   AMPlus1: the complete split graph  K_m joined to n-m independent vertices,
//            witness = the m dominating vertices.
//   A1:      a clique on 2m+1 vertices plus isolated vertices, witness = the clique.
struct ExtremalRecognition {
    ExtremalKind kind;
    std::vector<int> witness;
};

inline ExtremalRecognition recognize_extremal(const Graph& g, int m) {
    const int n = g.n();
    if (m < 1 || 2 * m > n - 2)
        throw std::invalid_argument("recognize_extremal: need 1 <= m <= (n-2)/2");

    std::vector<int> dominating;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) == n - 1) dominating.push_back(v);
    if (static_cast<int>(dominating.size()) == m) {
        std::vector<int> rest;
        rest.reserve(n - m);
        std::vector<char> in_w(n + 1, 0);
        for (int v : dominating) in_w[v] = 1;
        for (int v = 1; v <= n; ++v)
            if (!in_w[v]) rest.push_back(v);
        if (is_independent(g, rest)) return {ExtremalKind::AMPlus1, dominating};
    }

    std::vector<int> clique;
    bool degrees_ok = true;
    for (int v = 1; v <= n; ++v) {
        const int d = g.degree(v);
        if (d == 2 * m) clique.push_back(v);
        else if (d != 0) { degrees_ok = false; break; }
    }
    if (degrees_ok && static_cast<int>(clique.size()) == 2 * m + 1) {
        bool complete = true;
        for (std::size_t i = 0; i < clique.size() && complete; ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!g.has_edge(clique[i], clique[j])) { complete = false; break; }
        if (complete) return {ExtremalKind::A1, clique};
    }

    return {ExtremalKind::Neither, {}};
}

// Ordered family of graphs sharing the vertex set [n].
struct GraphFamily {
    int n;
    std::vector<Graph> members;

    GraphFamily(int n_, std::vector<Graph> members_) : n(n_), members(std::move(members_)) {
        if (n < 1) throw std::invalid_argument("GraphFamily: vertex count must be >= 1");
        if (members.empty()) throw std::invalid_argument("GraphFamily: need at least one member");
        for (const Graph& g : members)
            if (g.n() != n) throw std::invalid_argument("GraphFamily: member vertex count mismatch");
    }
};

}  // namespace srm
