#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "stepup/base_graph.hpp"

using namespace stepup;

TEST_SUITE_BEGIN("base_graph");

TEST_CASE("construction and edges") {
    BaseGraph g(3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
    g.add_edge(1, 3);
    g.add_edge(3, 2);
    CHECK(g.has_edge(3, 1));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
    g.add_edge(1, 3); // no-op
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(g.degree(3) == 2);
    CHECK(g.degree(1) == 1);

    CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 2), DomainError);
    CHECK_THROWS_AS(g.add_edge(1, 4), DomainError);
    CHECK_THROWS_AS(BaseGraph(0), DomainError);
}

TEST_CASE("complement") {
    CHECK(complement(BaseGraph::complete(5)).edge_count() == 0);
    CHECK(complement(BaseGraph(4)) == BaseGraph::complete(4));
    oracles::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const BaseGraph g = oracles::random_graph(9, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("text format round trip") {
    BaseGraph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 4);
    const std::string text = to_text(g);
    CHECK(text == "n 4\ne 1 2\ne 2 4\n");
    CHECK(graph_from_text(text) == g);
}

TEST_CASE("parser accepts comments and rejects malformed input") {
    CHECK(graph_from_text("# header comment\nn 2\n# mid comment\ne 1 2\n") ==
          BaseGraph::complete(2));
    CHECK_THROWS_AS(graph_from_text("e 1 2\n"), ParseError);            // missing n
    CHECK_THROWS_AS(graph_from_text("n 2\ne 2 1\n"), ParseError);       // i >= j
    CHECK_THROWS_AS(graph_from_text("n 2\ne 1 2\ne 1 2\n"), ParseError); // duplicate
    CHECK_THROWS_AS(graph_from_text("n 2\ne 1 3\n"), ParseError);       // out of range
    CHECK_THROWS_AS(graph_from_text("n 2\nx 1 2\n"), ParseError);       // unknown tag
    CHECK_THROWS_AS(graph_from_text("n 0\n"), ParseError);
}

TEST_SUITE_END();
