#include <doctest.h>

#include <random>
#include <sstream>

#include "iterforce/graph.hpp"
#include "iterforce/graph_io.hpp"
#include "test_support.hpp"

using namespace iterforce;

TEST_SUITE("graph-core") {

TEST_CASE("from_edges builds the small named shapes") {
    const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.degree(0) == 1);
    CHECK(p3.degree(1) == 2);
    CHECK(p3.degree(2) == 1);

    const Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(c4 == named_graph("c4"));
}

TEST_CASE("from_edges rejects bad input and ignores duplicates") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("from_rows checks symmetry and loops") {
    std::vector<VertexSet> rows(2, VertexSet(2));
    rows[0].insert(1);
    CHECK_THROWS_AS(Graph::from_rows(rows), GraphError);
    rows[1].insert(1);
    CHECK_THROWS_AS(Graph::from_rows(rows), GraphError);
}

TEST_CASE("closed and anti neighbourhoods") {
    const Graph k3 = named_graph("k3");
    const Graph p3 = named_graph("p3");
    const Graph c4 = named_graph("c4");
    CHECK(k3.closed_neighborhood(0) == VertexSet(3, {0, 1, 2}));
    CHECK(p3.closed_neighborhood(0) == VertexSet(3, {0, 1}));
    CHECK(named_graph("k1").closed_neighborhood(0) == VertexSet(1, {0}));
    CHECK(k3.anti_neighborhood(0).empty());
    CHECK(p3.anti_neighborhood(0) == VertexSet(3, {2}));
    CHECK(c4.anti_neighborhood(0) == VertexSet(4, {2}));
    CHECK_THROWS(k3.closed_neighborhood(3));
    CHECK_THROWS(k3.anti_neighborhood(7));
}

TEST_CASE("N[v] and AN[v] partition V; edge count is half the degree sum") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = test_support::random_graph(rng, 1 + rng() % 80, 0.3);
        std::size_t degree_sum = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            const VertexSet closed = g.closed_neighborhood(v);
            const VertexSet anti = g.anti_neighborhood(v);
            CHECK_FALSE(closed.intersects(anti));
            CHECK((closed | anti).count() == g.order());
            degree_sum += g.degree(v);
        }
        CHECK(degree_sum == 2 * g.size());
    }
}

TEST_CASE("named graphs") {
    CHECK(named_graph("K4").size() == 6);
    CHECK(named_graph("p5").size() == 4);
    CHECK(named_graph("c5").size() == 5);
    CHECK(named_graph("star3").order() == 4);
    CHECK(named_graph("star3").degree(0) == 3);
    CHECK(named_graph("empty3").size() == 0);
    CHECK_THROWS_AS(named_graph("c2"), GraphError);
    CHECK_THROWS_AS(named_graph("banana"), GraphError);
}

TEST_CASE("distances and connectivity") {
    const Graph p4 = named_graph("p4");
    CHECK(p4.distances_from(0) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(p4.connected());
    const Graph two = named_graph("empty2");
    CHECK_FALSE(two.connected());
    CHECK(two.distances_from(0)[1] == 2);
}

TEST_CASE("induced subgraph keeps relative order") {
    const Graph c5 = named_graph("c5");
    const Graph sub = c5.induced(VertexSet(5, {0, 1, 2}));
    CHECK(sub == named_graph("p3"));
}

TEST_CASE("graph6 known strings") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(emit_graph6(k2) == "A_");
    const Graph e3 = parse_graph6("B?");
    CHECK(e3.order() == 3);
    CHECK(e3.size() == 0);
    CHECK(emit_graph6(e3) == "B?");
    CHECK(parse_graph6(">>graph6<<A_") == k2);
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6("@").order() == 1);
    CHECK(emit_graph6(named_graph("c4")) == "Cl");
}

TEST_CASE("graph6 rejects malformed text with an offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A__"), ParseError);
    try {
        parse_graph6("A`");  // padding bit set
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
    try {
        parse_graph6("C~\x01");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("graph6 round-trips 100 random labeled graphs, including the long prefix") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = trial < 90 ? rng() % 40 : 60 + rng() % 80;
        const Graph g = test_support::random_graph(rng, n, 0.25);
        const std::string text = emit_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(emit_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("edge list format") {
    const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == named_graph("p4"));
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n2"), ParseError);
}

TEST_CASE("read_graphs detects the format") {
    std::istringstream g6("A_\nB?\n\n");
    CHECK(read_graphs(g6).size() == 2);
    std::istringstream edges("3 2\n0 1 1 2\n");
    const auto got = read_graphs(edges);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == named_graph("p3"));
    CHECK(graph_from_spec("k2") == parse_graph6("A_"));
    CHECK(graph_from_spec("Cl") == named_graph("c4"));
}

TEST_CASE("VertexSet basics") {
    VertexSet s(70, {0, 3, 69});
    CHECK(s.count() == 3);
    CHECK(s.to_string() == "{0,3,69}");
    CHECK(s.complement().count() == 67);
    CHECK(s.first() == 0);
    CHECK(s.next(1) == 3);
    CHECK_THROWS_AS(s.insert(70), std::out_of_range);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(lex_less(VertexSet(5, {0, 4}), VertexSet(5, {1, 2})));
    CHECK_FALSE(lex_less(VertexSet(5, {1, 2}), VertexSet(5, {0, 4})));
    CHECK(VertexSet(5, {1}).is_subset_of(VertexSet(5, {1, 2})));
}

}  // TEST_SUITE
