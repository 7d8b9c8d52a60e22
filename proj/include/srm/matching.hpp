#pragma once

// Exact maximum matching (augmenting paths with blossom contraction),
// exact rainbow-matching search, Hall transversals with deficiency
// witnesses, and the two constructive rainbow procedures for families of
// extremal graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

class AllEqualError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class WrongStructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges;  // lexicographic, u < v
};

namespace detail {

// Classic blossom-contraction augmenting search, 0-based internally.
struct BlossomSolver {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base, queue;
    std::vector<char> used, blossom, path_mark;

    explicit BlossomSolver(const Graph& graph)
        : g(graph),
          n(graph.n()),
          match(n, -1),
          parent(n, -1),
          base(n, 0),
          used(n, 0),
          blossom(n, 0),
          path_mark(n, 0) {}

    int lca(int a, int b) {
        std::fill(path_mark.begin(), path_mark.end(), 0);
        for (;;) {
            a = base[a];
            path_mark[a] = 1;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (path_mark[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = 1;
        queue.clear();
        queue.push_back(root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            std::vector<int> nbrs;
            g.for_each_neighbor(v + 1, [&](int w) { nbrs.push_back(w - 1); });
            for (int to : nbrs) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    const int cur_base = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void solve() {
        // deterministic greedy seed: lowest vertex to its lowest free neighbor
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            g.for_each_neighbor(v + 1, [&](int w) {
                if (match[v] == -1 && match[w - 1] == -1 && w - 1 != v) {
                    match[v] = w - 1;
                    match[w - 1] = v;
                }
            });
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            int u = find_augmenting_path(v);
            while (u != -1) {
                const int pv = parent[u];
                const int ppv = match[pv];
                match[u] = pv;
                match[pv] = u;
                u = ppv;
            }
        }
    }
};

}  // namespace detail

inline MatchingResult max_matching(const Graph& g) {
    detail::BlossomSolver solver(g);
    solver.solve();
    MatchingResult out;
    for (int v = 0; v < g.n(); ++v)
        if (solver.match[v] > v) out.edges.emplace_back(v + 1, solver.match[v] + 1);
    std::sort(out.edges.begin(), out.edges.end());
    out.size = static_cast<int>(out.edges.size());
    return out;
}

struct RainbowPick {
    int member;  // 1-based index into the family
    int u, v;    // u < v
};

struct RainbowMatching {
    std::vector<RainbowPick> picks;
};

// Throws unless picks form a complete rainbow matching for f: one pick for
// each member, indices distinct, edges present and pairwise vertex-disjoint.
inline void validate_rainbow(const GraphFamily& f, const RainbowMatching& rm) {
    if (rm.picks.size() != f.members.size())
        throw std::invalid_argument("validate_rainbow: one pick per member required");
    std::vector<char> member_seen(f.members.size() + 1, 0), vertex_used(f.n + 1, 0);
    for (const RainbowPick& p : rm.picks) {
        if (p.member < 1 || p.member > static_cast<int>(f.members.size()))
            throw std::invalid_argument("validate_rainbow: member index out of range");
        if (member_seen[p.member])
            throw std::invalid_argument("validate_rainbow: duplicate member index");
        member_seen[p.member] = 1;
        if (!f.members[p.member - 1].has_edge(p.u, p.v))
            throw std::invalid_argument("validate_rainbow: edge missing from its member");
        if (vertex_used[p.u] || vertex_used[p.v])
            throw std::invalid_argument("validate_rainbow: edges are not vertex-disjoint");
        vertex_used[p.u] = vertex_used[p.v] = 1;
    }
}

// Exact backtracking decision/search. Members are processed by ascending
// edge count (ties by index), edges in lexicographic order, and a branch is
// pruned as soon as some unprocessed member has no edge avoiding the used
// vertices. Determinism: the returned witness is a pure function of f.
inline std::optional<RainbowMatching> find_rainbow(const GraphFamily& f) {
    if (f.n > 64) throw std::invalid_argument("find_rainbow: supported for n <= 64");
    const int k = static_cast<int>(f.members.size());

    struct MemberEdges {
        int index;  // 0-based member
        std::vector<std::pair<int, int>> es;
        std::vector<std::uint64_t> masks;
    };
    std::vector<MemberEdges> ms(k);
    for (int i = 0; i < k; ++i) {
        ms[i].index = i;
        ms[i].es = edges(f.members[i]);
        for (auto [u, v] : ms[i].es)
            ms[i].masks.push_back((std::uint64_t(1) << (u - 1)) | (std::uint64_t(1) << (v - 1)));
    }
    std::stable_sort(ms.begin(), ms.end(),
                     [](const MemberEdges& a, const MemberEdges& b) { return a.es.size() < b.es.size(); });

    std::vector<RainbowPick> picks;
    picks.reserve(k);

    auto feasible = [&](int from, std::uint64_t used) {
        for (int q = from; q < k; ++q) {
            bool any = false;
            for (std::uint64_t m : ms[q].masks)
                if ((m & used) == 0) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int pos, std::uint64_t used) -> bool {
        if (pos == k) return true;
        if (!feasible(pos, used)) return false;
        const MemberEdges& me = ms[pos];
        for (std::size_t j = 0; j < me.es.size(); ++j) {
            if (me.masks[j] & used) continue;
            picks.push_back({me.index + 1, me.es[j].first, me.es[j].second});
            if (self(self, pos + 1, used | me.masks[j])) return true;
            picks.pop_back();
        }
        return false;
    };

    if (!rec(rec, 0, 0)) return std::nullopt;
    std::sort(picks.begin(), picks.end(),
              [](const RainbowPick& a, const RainbowPick& b) { return a.member < b.member; });
    return RainbowMatching{std::move(picks)};
}

struct HallResult {
    // Exactly one of the two is meaningful: a transversal x_i in sets[i]
    // with all x_i distinct, or a violating index set S (0-based) whose
    // union is smaller than |S|.
    std::optional<std::vector<int>> transversal;
    std::vector<int> deficiency;
};

// Augmenting-path bipartite matching (sets vs. vertices), lowest-numbered
// choice first. When augmenting from set i fails, the visited set indices
// form a Hall violator containing i.
inline HallResult hall_bipartite_matching(const std::vector<std::vector<int>>& sets) {
    const int k = static_cast<int>(sets.size());
    int max_vertex = 0;
    for (const auto& s : sets)
        for (int v : s) {
            if (v < 1) throw std::invalid_argument("hall_bipartite_matching: vertices are 1-based");
            max_vertex = std::max(max_vertex, v);
        }
    std::vector<std::vector<int>> sorted(k);
    for (int i = 0; i < k; ++i) {
        sorted[i] = sets[i];
        std::sort(sorted[i].begin(), sorted[i].end());
        sorted[i].erase(std::unique(sorted[i].begin(), sorted[i].end()), sorted[i].end());
    }
    std::vector<int> owner(max_vertex + 1, -1);
    std::vector<char> visited(k, 0);

    auto augment = [&](auto&& self, int i) -> bool {
        visited[i] = 1;
        for (int v : sorted[i]) {
            if (owner[v] == -1) {
                owner[v] = i;
                return true;
            }
        }
        for (int v : sorted[i]) {
            const int j = owner[v];
            if (!visited[j] && self(self, j)) {
                owner[v] = i;
                return true;
            }
        }
        return false;
    };

    for (int i = 0; i < k; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, i)) {
            std::vector<int> deficiency;
            for (int j = 0; j < k; ++j)
                if (visited[j]) deficiency.push_back(j);
            return {std::nullopt, deficiency};
        }
    }
    std::vector<int> transversal(k, 0);
    for (int v = 1; v <= max_vertex; ++v)
        if (owner[v] != -1) transversal[owner[v]] = v;
    return {transversal, {}};
}

namespace detail {

inline std::vector<std::vector<int>> recognized_witnesses(const GraphFamily& f, int m,
                                                          ExtremalKind want,
                                                          const char* what) {
    if (static_cast<int>(f.members.size()) != m + 1)
        throw WrongStructureError(std::string(what) + ": family must have m+1 members");
    std::vector<std::vector<int>> ws;
    ws.reserve(f.members.size());
    for (const Graph& g : f.members) {
        ExtremalRecognition r = recognize_extremal(g, m);  // validates n >= 2m+2
        if (r.kind != want)
            throw WrongStructureError(std::string(what) + ": member lacks the required structure");
        ws.push_back(std::move(r.witness));
    }
    bool all_equal = true;
    for (std::size_t i = 1; i < ws.size() && all_equal; ++i) all_equal = ws[i] == ws[0];
    if (all_equal) throw AllEqualError(std::string(what) + ": all witness sets are equal");
    return ws;
}

}  // namespace detail

// Family of complete split graphs (each member recognized structurally, with
// dominating sets W_i not all equal): pick a Hall transversal x_i in W_i,
// then pair each x_i with a distinct vertex outside the transversal. Every
// x_i has full degree, so the resulting edges always exist.
inline RainbowMatching rainbow_from_split_family(const GraphFamily& f, int m) {
    const auto ws = detail::recognized_witnesses(f, m, ExtremalKind::AMPlus1,
                                                 "rainbow_from_split_family");
    const HallResult hall = hall_bipartite_matching(ws);
    if (!hall.transversal)
        throw std::logic_error("rainbow_from_split_family: transversal must exist for unequal witness sets");
    const std::vector<int>& xs = *hall.transversal;
    std::vector<char> taken(f.n + 1, 0);
    for (int x : xs) taken[x] = 1;
    RainbowMatching rm;
    int y = 1;
    for (int i = 0; i <= m; ++i) {
        while (y <= f.n && taken[y]) ++y;
        if (y > f.n) throw std::logic_error("rainbow_from_split_family: ran out of partner vertices");
        rm.picks.push_back({i + 1, std::min(xs[i], y), std::max(xs[i], y)});
        ++y;
    }
    validate_rainbow(f, rm);
    return rm;
}

// Family of clique-plus-isolated-vertices graphs with clique sets U_i not
// all equal. Reorder so the first processed member's clique is not contained
// in the last one's, start with a vertex unique to the first clique, then
// greedily pick two unused clique vertices per member; the counting bounds
// |U| = 2m+1 and x_1 not in the last clique keep two vertices available
// through the final step.
inline RainbowMatching rainbow_from_clique_family(const GraphFamily& f, int m) {
    const auto us = detail::recognized_witnesses(f, m, ExtremalKind::A1,
                                                 "rainbow_from_clique_family");
    const int k = m + 1;
    int p = -1, q = -1;
    for (int i = 0; i < k && p == -1; ++i)
        for (int j = i + 1; j < k; ++j)
            if (us[i] != us[j]) {
                p = i;
                q = j;
                break;
            }
    if (p == -1) throw std::logic_error("rainbow_from_clique_family: unequal sets expected");

    std::vector<int> order{p};
    for (int i = 0; i < k; ++i)
        if (i != p && i != q) order.push_back(i);
    order.push_back(q);

    std::vector<char> in_q(f.n + 1, 0), used(f.n + 1, 0);
    for (int v : us[q]) in_q[v] = 1;

    RainbowMatching rm;
    // first member: one vertex outside U_q, one other clique vertex
    {
        const std::vector<int>& up = us[p];
        int x1 = -1;
        for (int v : up)
            if (!in_q[v]) {
                x1 = v;
                break;
            }
        if (x1 == -1) {
            // witnesses are same-size sets, so symmetric difference is two-sided
            throw std::logic_error("rainbow_from_clique_family: first clique contained in last");
        }
        int y1 = -1;
        for (int v : up)
            if (v != x1) {
                y1 = v;
                break;
            }
        used[x1] = used[y1] = 1;
        rm.picks.push_back({p + 1, std::min(x1, y1), std::max(x1, y1)});
    }
    for (int r = 1; r < k; ++r) {
        const int i = order[r];
        int a = -1, b = -1;
        for (int v : us[i]) {
            if (used[v]) continue;
            if (a == -1) a = v;
            else {
                b = v;
                break;
            }
        }
        if (b == -1)
            throw std::logic_error("rainbow_from_clique_family: counting guarantee violated");
        used[a] = used[b] = 1;
        rm.picks.push_back({i + 1, a, b});
    }
    std::sort(rm.picks.begin(), rm.picks.end(),
              [](const RainbowPick& a, const RainbowPick& b) { return a.member < b.member; });
    validate_rainbow(f, rm);
    return rm;
}

}  // namespace srm
