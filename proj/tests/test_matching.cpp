#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <srm/graph.hpp>
#include <srm/matching.hpp>

#include "oracles.hpp"

using namespace srm;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge_in_place(u, v);
    return g;
}

Graph random_graph_std(int n, std::mt19937_64& rng, int density_mod = 2) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() % density_mod == 0) g.add_edge_in_place(u, v);
    return g;
}

void require_valid_matching(const Graph& g, const MatchingResult& mr) {
    REQUIRE(mr.edges.size() == static_cast<std::size_t>(mr.size));
    std::set<int> seen;
    for (const auto& [u, v] : mr.edges) {
        REQUIRE(g.has_edge(u, v));
        REQUIRE(seen.insert(u).second);
        REQUIRE(seen.insert(v).second);
    }
}

// complete split graph K_m joined to independent [m+1..n], witness set W
Graph split_member(int n, const std::vector<int>& w) {
    Graph g(n);
    for (int x : w)
        for (int v = 1; v <= n; ++v)
            if (v != x && !g.has_edge(std::min(x, v), std::max(x, v)))
                g.add_edge_in_place(std::min(x, v), std::max(x, v));
    return g;
}

// clique on U plus isolated vertices
Graph clique_member(int n, const std::vector<int>& u) {
    Graph g(n);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            g.add_edge_in_place(std::min(u[i], u[j]), std::max(u[i], u[j]));
    return g;
}

}  // namespace

TEST_CASE("maximum matching on reference graphs") {
    for (int n = 1; n <= 10; ++n) {
        const MatchingResult mr = max_matching(complete(n));
        REQUIRE(mr.size == n / 2);
        require_valid_matching(complete(n), mr);
    }

    Graph c5(5);
    for (int u = 1; u < 5; ++u) c5.add_edge_in_place(u, u + 1);
    c5.add_edge_in_place(5, 1);
    REQUIRE(max_matching(c5).size == 2);

    // blossom case: two triangles joined by a bridge
    Graph bowtie(6);
    bowtie.add_edge_in_place(1, 2);
    bowtie.add_edge_in_place(2, 3);
    bowtie.add_edge_in_place(1, 3);
    bowtie.add_edge_in_place(4, 5);
    bowtie.add_edge_in_place(5, 6);
    bowtie.add_edge_in_place(4, 6);
    bowtie.add_edge_in_place(3, 4);
    REQUIRE(max_matching(bowtie).size == 3);
}

TEST_CASE("extremal graphs have matching number m") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2 * m + 2; n <= 2 * m + 6; ++n)
            for (int i = 1; i <= m + 1; ++i)
                REQUIRE(max_matching(construct_extremal({n, m, i})).size == m);
}

TEST_CASE("matching agrees with the subset-DP oracle") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph_std(n, rng, 2 + static_cast<int>(rng() % 3));
        const MatchingResult mr = max_matching(g);
        REQUIRE(mr.size == oracle::max_matching_dp(g));
        require_valid_matching(g, mr);
    }
}

TEST_CASE("rainbow search on reference families") {
    // k copies of K_n with n >= 2k: greedy disjoint edges exist
    for (int k = 1; k <= 3; ++k) {
        std::vector<Graph> members(k, complete(2 * k));
        REQUIRE(find_rainbow(GraphFamily(2 * k, std::move(members))).has_value());
    }

    // m+1 identical extremal members block every rainbow
    for (int m = 1; m <= 2; ++m) {
        const int n = 2 * m + 3;
        std::vector<Graph> split(m + 1, construct_extremal({n, m, m + 1}));
        REQUIRE_FALSE(find_rainbow(GraphFamily(n, std::move(split))).has_value());
        std::vector<Graph> cliq(m + 1, construct_extremal({n, m, 1}));
        REQUIRE_FALSE(find_rainbow(GraphFamily(n, std::move(cliq))).has_value());
    }

    // two stars with different centers admit a rainbow
    const GraphFamily stars(6, {split_member(6, {1}), split_member(6, {2})});
    const auto rm = find_rainbow(stars);
    REQUIRE(rm.has_value());
    REQUIRE_NOTHROW(validate_rainbow(stars, *rm));

    // an empty member makes every family rainbow-free
    REQUIRE_FALSE(find_rainbow(GraphFamily(4, {Graph(4), complete(4)})).has_value());

    // single-member family: any edge works
    Graph one(3);
    one.add_edge_in_place(2, 3);
    const auto single = find_rainbow(GraphFamily(3, {one}));
    REQUIRE(single.has_value());
    REQUIRE(single->picks.size() == 1);
    REQUIRE(single->picks[0].u == 2);
    REQUIRE(single->picks[0].v == 3);
}

TEST_CASE("rainbow search agrees with the unpruned oracle") {
    std::mt19937_64 rng(8080);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % 2);
        std::vector<Graph> members;
        for (int i = 0; i < k; ++i) members.push_back(random_graph_std(n, rng));
        const GraphFamily f(n, std::move(members));
        const auto rm = find_rainbow(f);
        REQUIRE(rm.has_value() == oracle::rainbow_exists(f));
        if (rm) REQUIRE_NOTHROW(validate_rainbow(f, *rm));
    }
}

TEST_CASE("rainbow witness validation rejects corrupt witnesses") {
    const GraphFamily f(4, {complete(4), complete(4)});
    RainbowMatching rm = *find_rainbow(f);
    RainbowMatching bad = rm;
    bad.picks[1].u = bad.picks[0].u;  // vertex reuse
    bad.picks[1].v = bad.picks[0].v;
    REQUIRE_THROWS_AS(validate_rainbow(f, bad), std::invalid_argument);
    bad = rm;
    bad.picks.pop_back();  // missing member
    REQUIRE_THROWS_AS(validate_rainbow(f, bad), std::invalid_argument);
    bad = rm;
    bad.picks[0].member = 2;  // duplicate member index
    REQUIRE_THROWS_AS(validate_rainbow(f, bad), std::invalid_argument);
}

TEST_CASE("hall transversals and deficiency witnesses") {
    SECTION("satisfiable instance") {
        const HallResult r = hall_bipartite_matching({{1, 2}, {1, 2}, {1, 3}});
        REQUIRE(r.transversal.has_value());
        const std::vector<int>& xs = *r.transversal;
        REQUIRE(xs.size() == 3);
        const std::vector<std::vector<int>> sets{{1, 2}, {1, 2}, {1, 3}};
        std::set<int> distinct;
        for (std::size_t i = 0; i < 3; ++i) {
            REQUIRE(std::count(sets[i].begin(), sets[i].end(), xs[i]) == 1);
            REQUIRE(distinct.insert(xs[i]).second);
        }
    }
    SECTION("pigeonhole failure") {
        const HallResult r = hall_bipartite_matching({{1}, {1}});
        REQUIRE_FALSE(r.transversal.has_value());
        REQUIRE(r.deficiency == std::vector<int>{0, 1});
    }
    SECTION("singleton") {
        const HallResult r = hall_bipartite_matching({{5}});
        REQUIRE(r.transversal.has_value());
        REQUIRE((*r.transversal)[0] == 5);
    }
    SECTION("deficiency witness has small union on random failures") {
        std::mt19937_64 rng(4242);
        int failures = 0;
        while (failures < 60) {
            const int k = 2 + static_cast<int>(rng() % 4);
            const int pool = 1 + static_cast<int>(rng() % k);  // tight pool forces failures
            std::vector<std::vector<int>> sets(k);
            for (auto& s : sets) {
                const int sz = 1 + static_cast<int>(rng() % pool);
                std::set<int> pickset;
                while (static_cast<int>(pickset.size()) < sz)
                    pickset.insert(1 + static_cast<int>(rng() % pool));
                s.assign(pickset.begin(), pickset.end());
            }
            const HallResult r = hall_bipartite_matching(sets);
            if (r.transversal) continue;
            ++failures;
            std::set<int> uni;
            for (int idx : r.deficiency) {
                REQUIRE(idx >= 0);
                REQUIRE(idx < k);
                uni.insert(sets[idx].begin(), sets[idx].end());
            }
            REQUIRE(uni.size() < r.deficiency.size());
        }
    }
    SECTION("vertices below 1 are rejected") {
        REQUIRE_THROWS_AS(hall_bipartite_matching({{0, 2}}), std::invalid_argument);
    }
}

TEST_CASE("split-family constructor") {
    SECTION("worked two-star example") {
        const GraphFamily f(4, {split_member(4, {1}), split_member(4, {2})});
        const RainbowMatching rm = rainbow_from_split_family(f, 1);
        REQUIRE(rm.picks.size() == 2);
        REQUIRE(rm.picks[0].member == 1);
        REQUIRE(rm.picks[0].u == 1);
        REQUIRE(rm.picks[0].v == 3);
        REQUIRE(rm.picks[1].member == 2);
        REQUIRE(rm.picks[1].u == 2);
        REQUIRE(rm.picks[1].v == 4);
    }
    SECTION("identical witness sets are refused") {
        const GraphFamily f(6, {split_member(6, {1, 2}), split_member(6, {1, 2}),
                                split_member(6, {1, 2})});
        REQUIRE_THROWS_AS(rainbow_from_split_family(f, 2), AllEqualError);
    }
    SECTION("non-split members are refused") {
        Graph c4(4);
        for (int u = 1; u < 4; ++u) c4.add_edge_in_place(u, u + 1);
        c4.add_edge_in_place(4, 1);
        REQUIRE_THROWS_AS(rainbow_from_split_family(GraphFamily(4, {c4, c4}), 1),
                          WrongStructureError);
    }
    SECTION("wrong member count is refused") {
        const GraphFamily f(6, {split_member(6, {1, 2}), split_member(6, {1, 3})});
        REQUIRE_THROWS_AS(rainbow_from_split_family(f, 2), WrongStructureError);
    }
    SECTION("random mixed witness sets") {
        std::mt19937_64 rng(11011);
        for (int trial = 0; trial < 300; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 3);
            const int n = 2 * m + 2 + static_cast<int>(rng() % 4);
            std::vector<std::vector<int>> ws;
            std::vector<Graph> members;
            for (int i = 0; i <= m; ++i) {
                std::set<int> w;
                while (static_cast<int>(w.size()) < m)
                    w.insert(1 + static_cast<int>(rng() % n));
                ws.emplace_back(w.begin(), w.end());
                members.push_back(split_member(n, ws.back()));
            }
            bool all_equal = true;
            for (int i = 1; i <= m; ++i) all_equal = all_equal && ws[i] == ws[0];
            const GraphFamily f(n, std::move(members));
            if (all_equal) {
                REQUIRE_THROWS_AS(rainbow_from_split_family(f, m), AllEqualError);
                continue;
            }
            const RainbowMatching rm = rainbow_from_split_family(f, m);
            REQUIRE_NOTHROW(validate_rainbow(f, rm));
            REQUIRE(find_rainbow(f).has_value());
        }
    }
}

TEST_CASE("clique-family constructor") {
    SECTION("worked two-triangle example") {
        const GraphFamily f(4, {clique_member(4, {1, 2, 3}), clique_member(4, {2, 3, 4})});
        const RainbowMatching rm = rainbow_from_clique_family(f, 1);
        REQUIRE(rm.picks.size() == 2);
        REQUIRE(rm.picks[0].member == 1);
        REQUIRE(rm.picks[0].u == 1);
        REQUIRE(rm.picks[0].v == 2);
        REQUIRE(rm.picks[1].member == 2);
        REQUIRE(rm.picks[1].u == 3);
        REQUIRE(rm.picks[1].v == 4);
    }
    SECTION("identical clique sets are refused") {
        const GraphFamily f(5, {clique_member(5, {1, 2, 3}), clique_member(5, {1, 2, 3})});
        REQUIRE_THROWS_AS(rainbow_from_clique_family(f, 1), AllEqualError);
    }
    SECTION("non-clique members are refused") {
        const GraphFamily f(5, {split_member(5, {1}), split_member(5, {2})});
        REQUIRE_THROWS_AS(rainbow_from_clique_family(f, 1), WrongStructureError);
    }
    SECTION("random mixed clique sets") {
        std::mt19937_64 rng(22022);
        for (int trial = 0; trial < 300; ++trial) {
            const int m = 1 + static_cast<int>(rng() % 2);
            const int n = 2 * m + 2 + static_cast<int>(rng() % 4);
            std::vector<std::vector<int>> us;
            std::vector<Graph> members;
            for (int i = 0; i <= m; ++i) {
                std::set<int> u;
                while (static_cast<int>(u.size()) < 2 * m + 1)
                    u.insert(1 + static_cast<int>(rng() % n));
                us.emplace_back(u.begin(), u.end());
                members.push_back(clique_member(n, us.back()));
            }
            bool all_equal = true;
            for (int i = 1; i <= m; ++i) all_equal = all_equal && us[i] == us[0];
            const GraphFamily f(n, std::move(members));
            if (all_equal) {
                REQUIRE_THROWS_AS(rainbow_from_clique_family(f, m), AllEqualError);
                continue;
            }
            const RainbowMatching rm = rainbow_from_clique_family(f, m);
            REQUIRE_NOTHROW(validate_rainbow(f, rm));
            REQUIRE(find_rainbow(f).has_value());
        }
    }
}
