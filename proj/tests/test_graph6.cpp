#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <srm/graph.hpp>
#include <srm/graph6.hpp>

using namespace srm;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge_in_place(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 encodes known graphs") {
    REQUIRE(graph6_encode(complete(4)) == "C~");
    REQUIRE(graph6_encode(Graph(5)) == "D??");

    Graph k2(2);
    k2.add_edge_in_place(1, 2);
    REQUIRE(graph6_encode(k2) == "A_");

    Graph p3(3);
    p3.add_edge_in_place(1, 2);
    p3.add_edge_in_place(2, 3);
    REQUIRE(graph6_encode(p3) == "Bg");

    Graph c5(5);
    for (int u = 1; u < 5; ++u) c5.add_edge_in_place(u, u + 1);
    c5.add_edge_in_place(5, 1);
    REQUIRE(graph6_encode(c5) == "Dhc");

    Graph star(4);  // K_{1,3} centered at 1
    for (int v = 2; v <= 4; ++v) star.add_edge_in_place(1, v);
    REQUIRE(graph6_encode(star) == "Cs");

    REQUIRE(graph6_encode(construct_extremal({6, 2, 1})) == "E~{?");
    REQUIRE(graph6_encode(construct_extremal({10, 2, 3})) == "I}rEEB?o?");
}

TEST_CASE("graph6 decode inverts encode") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) g.add_edge_in_place(u, v);
        const Graph back = graph6_decode(graph6_encode(g));
        REQUIRE(back.n() == n);
        REQUIRE(graphs_equal(g, back));
    }
}

TEST_CASE("graph6 decode accepts the optional header and trailing newline") {
    REQUIRE(graphs_equal(graph6_decode(">>graph6<<C~"), complete(4)));
    REQUIRE(graphs_equal(graph6_decode("C~\n"), complete(4)));
    REQUIRE(graphs_equal(graph6_decode("C~\r\n"), complete(4)));
}

TEST_CASE("graph6 rejects malformed input") {
    REQUIRE_THROWS_AS(graph6_decode(""), std::invalid_argument);
    REQUIRE_THROWS_AS(graph6_decode("~??"), std::invalid_argument);   // long form
    REQUIRE_THROWS_AS(graph6_decode("C"), std::invalid_argument);     // truncated body
    REQUIRE_THROWS_AS(graph6_decode("C~~"), std::invalid_argument);   // oversized body
    REQUIRE_THROWS_AS(graph6_decode("C!"), std::invalid_argument);    // byte below range
    REQUIRE_THROWS_AS(graph6_decode("B\x7f"), std::invalid_argument); // byte above range
    REQUIRE_THROWS_AS(graph6_decode("BF"), std::invalid_argument);    // nonzero padding bits
    REQUIRE(graphs_equal(graph6_decode("@"), Graph(1)));              // K_1 still decodes
    REQUIRE(graphs_equal(graph6_decode("Bw"), complete(3)));          // zero padding decodes
    // n > 62 on the encoding side
    REQUIRE_THROWS_AS(graph6_encode(Graph(63)), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    Graph g(7);
    g.add_edge_in_place(1, 7);
    g.add_edge_in_place(3, 4);
    const std::string text = edge_list_encode(g);
    const Graph back = edge_list_decode(text);
    REQUIRE(graphs_equal(g, back));
    REQUIRE(text.substr(0, 3) == "n 7");
}

TEST_CASE("edge list rejects malformed input") {
    REQUIRE_THROWS_AS(edge_list_decode(""), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("4\n1 2\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("n 4\n1\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("n 4\n1 2 3\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("n 4\n1 5\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("n 4\n2 2\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(edge_list_decode("n 0\n"), std::invalid_argument);
}

TEST_CASE("auto detection distinguishes the two formats") {
    REQUIRE(graphs_equal(parse_graph_auto("n 4\n1 2\n"), edge_list_decode("n 4\n1 2\n")));
    REQUIRE(graphs_equal(parse_graph_auto("C~"), complete(4)));
    REQUIRE(graphs_equal(parse_graph_auto("  \nC~\n"), complete(4)));
}
