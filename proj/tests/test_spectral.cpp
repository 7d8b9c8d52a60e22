#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <srm/enumeration.hpp>
#include <srm/graph.hpp>
#include <srm/graph6.hpp>
#include <srm/spectral.hpp>

#include "oracles.hpp"

using namespace srm;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge_in_place(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int u = 1; u < n; ++u) g.add_edge_in_place(u, u + 1);
    return g;
}

}  // namespace

TEST_CASE("spectral radius of reference graphs") {
    REQUIRE(spectral_radius(complete(4)).rho == Catch::Approx(3.0).margin(1e-10));
    REQUIRE(spectral_radius(path(3)).rho == Catch::Approx(std::sqrt(2.0)).margin(1e-10));
    REQUIRE(spectral_radius(Graph(7)).rho == 0.0);
    REQUIRE(spectral_radius(Graph(1)).rho == 0.0);

    Graph c5(5);
    for (int u = 1; u < 5; ++u) c5.add_edge_in_place(u, u + 1);
    c5.add_edge_in_place(5, 1);
    REQUIRE(spectral_radius(c5).rho == Catch::Approx(2.0).margin(1e-10));

    Graph star(4);
    for (int v = 2; v <= 4; ++v) star.add_edge_in_place(1, v);
    REQUIRE(spectral_radius(star).rho == Catch::Approx(std::sqrt(3.0)).margin(1e-10));

    // bipartite graphs exercise the +-rho eigenvalue pair
    const Graph k33 = join(Graph(3), Graph(3));
    REQUIRE(spectral_radius(k33).rho == Catch::Approx(3.0).margin(1e-10));
}

TEST_CASE("residual bound and tolerance validation") {
    const SpectralResult s = spectral_radius(complete(6), 1e-12);
    REQUIRE(s.residual <= 1e-12 * std::max(1.0, s.rho));
    REQUIRE(s.iterations > 0);
    REQUIRE_THROWS_AS(spectral_radius(complete(3), 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(spectral_radius(complete(3), -1e-9), std::invalid_argument);
}

TEST_CASE("power iteration agrees with Jacobi on random graphs") {
    std::mt19937_64 rng(98765);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) g.add_edge_in_place(u, v);
        const double iterative = spectral_radius(g).rho;
        const double dense = oracle::jacobi_largest_eigenvalue(g);
        REQUIRE(iterative == Catch::Approx(dense).margin(1e-8));
    }
}

TEST_CASE("split graph closed form") {
    // K_m joined to an independent set: rho = (m-1+sqrt((m-1)^2+4m(n-m)))/2
    REQUIRE(split_graph_rho(5, 1) == Catch::Approx(2.0).margin(1e-12));
    REQUIRE(split_graph_rho(10, 2) == Catch::Approx((1.0 + std::sqrt(65.0)) / 2).margin(1e-12));
    for (int m = 1; m <= 4; ++m)
        for (int n = 2 * m + 2; n <= 2 * m + 8; ++n) {
            const double iterative = spectral_radius(construct_extremal({n, m, m + 1})).rho;
            REQUIRE(split_graph_rho(n, m) == Catch::Approx(iterative).margin(1e-8));
        }
}

TEST_CASE("closed form covers every extremal index") {
    REQUIRE(closed_form_rho_extremal({9, 3, 1}) == 6.0);
    REQUIRE(closed_form_rho_extremal({20, 3, 4}) ==
            Catch::Approx((2.0 + std::sqrt(208.0)) / 2).margin(1e-12));
    REQUIRE(closed_form_rho_extremal({6, 2, 3}) ==
            Catch::Approx((1.0 + std::sqrt(33.0)) / 2).margin(1e-12));
    // interior i goes through the quotient cubic
    REQUIRE(closed_form_rho_extremal({12, 3, 2}) ==
            Catch::Approx(spectral_radius(construct_extremal({12, 3, 2})).rho).margin(1e-8));
    for (int m = 1; m <= 4; ++m)
        for (int n = 2 * m + 2; n <= 2 * m + 7; ++n)
            for (int i = 1; i <= m + 1; ++i) {
                const double closed = closed_form_rho_extremal({n, m, i});
                const double iterative = spectral_radius(construct_extremal({n, m, i})).rho;
                REQUIRE(closed == Catch::Approx(iterative).margin(1e-8));
            }
}

TEST_CASE("threshold takes the max of the two branches") {
    REQUIRE(threshold(7, 2) == 4.0);                          // clique branch
    REQUIRE(threshold(8, 2) == 4.0);                          // branches meet at n=3m+2
    REQUIRE(threshold(9, 2) == Catch::Approx((1.0 + std::sqrt(57.0)) / 2).margin(1e-12));
    REQUIRE(threshold(6, 1) == Catch::Approx(std::sqrt(5.0)).margin(1e-12));
    for (int m = 1; m <= 8; ++m) {
        REQUIRE(threshold(3 * m + 2, m) == 2.0 * m);  // exact, not approximate
        REQUIRE(split_graph_rho(3 * m + 2, m) == 2.0 * m);
    }
    REQUIRE_THROWS_AS(threshold(5, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(threshold(4, 0), std::invalid_argument);
}

TEST_CASE("nonconvergence is reported, not silently truncated") {
    // demanding far more precision than double arithmetic can certify makes
    // the iteration run into its cap; this particular graph's float iterates
    // settle into a limit cycle rather than an exact fixed point
    REQUIRE_THROWS_AS(spectral_radius(graph6_decode("EG~O"), 1e-40), NonConvergenceError);
    // highly symmetric graphs reach residual zero exactly and still converge
    const SpectralResult k5 = spectral_radius(complete(5), 1e-40);
    REQUIRE(k5.rho == 4.0);
    REQUIRE(k5.residual == 0.0);
}

TEST_CASE("edge addition never lowers the spectral radius") {
    SECTION("closing a path into a triangle is strict") {
        const RhoMonotoneCheck c = add_edge_rho_monotone_check(path(3), 1, 3);
        REQUIRE(c.nondecreasing);
        REQUIRE(c.strict);
        REQUIRE(c.rho_after == Catch::Approx(2.0).margin(1e-9));
    }
    SECTION("joining two isolated vertices beside a triangle is not strict") {
        Graph g(5);
        g.add_edge_in_place(1, 2);
        g.add_edge_in_place(1, 3);
        g.add_edge_in_place(2, 3);
        const RhoMonotoneCheck c = add_edge_rho_monotone_check(g, 4, 5);
        REQUIRE(c.nondecreasing);
        REQUIRE_FALSE(c.strict);
        REQUIRE(c.rho_before == Catch::Approx(2.0).margin(1e-9));
        REQUIRE(c.rho_after == Catch::Approx(2.0).margin(1e-9));
    }
    SECTION("adding an outer edge to a star is strict") {
        Graph star(4);
        for (int v = 2; v <= 4; ++v) star.add_edge_in_place(1, v);
        const RhoMonotoneCheck c = add_edge_rho_monotone_check(star, 2, 3);
        REQUIRE(c.strict);
        REQUIRE(c.rho_after > std::sqrt(3.0) + 1e-9);
    }
    SECTION("present edge is rejected") {
        REQUIRE_THROWS_AS(add_edge_rho_monotone_check(complete(3), 1, 2),
                          std::invalid_argument);
    }
    SECTION("random graphs stay monotone") {
        std::mt19937_64 rng(5150);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 6);
            Graph g(n);
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    if (rng() % 3 == 0) g.add_edge_in_place(u, v);
            const int u = 1 + static_cast<int>(rng() % n);
            int v = 1 + static_cast<int>(rng() % n);
            if (u == v || g.has_edge(u, v)) continue;
            REQUIRE(add_edge_rho_monotone_check(g, u, v).nondecreasing);
        }
    }
}

TEST_CASE("perron estimate matches the dominant eigenvector direction") {
    // on K_{1,4} the center carries the largest weight
    Graph star(5);
    for (int v = 2; v <= 5; ++v) star.add_edge_in_place(1, v);
    const SpectralResult s = spectral_radius(star);
    REQUIRE(s.vector[0] == Catch::Approx(1.0));
    for (std::size_t i = 1; i < s.vector.size(); ++i) REQUIRE(s.vector[i] < s.vector[0]);
}
