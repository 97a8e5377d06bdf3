#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "powgraph/error.hpp"
#include "powgraph/graph.hpp"

using namespace powgraph;

TEST_CASE("ugraph basics") {
    UGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 1);  // loop ignored
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 1));
    CHECK(g.degree(1) == 2);
    CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
    CHECK(g.components() == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}});

    const UGraph sub = g.induced({0, 2, 3});
    CHECK(sub.order() == 3);
    CHECK(sub.edges().empty());

    const UGraph comp = g.complement();
    CHECK(comp.adjacent(0, 2));
    CHECK(!comp.adjacent(0, 1));
    CHECK(comp.degree(3) == 3);
}

TEST_CASE("digraph basics") {
    DiGraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(2, 0);
    CHECK(d.arc(0, 1));
    CHECK(d.arc(1, 0));
    CHECK(!d.arc(0, 2));
    CHECK(d.arc_count() == 3);
    CHECK(d.out_degree(0) == 1);
    CHECK(d.in_degree(0) == 2);
    const UGraph u = d.underlying();
    CHECK(u.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
}

TEST_CASE("file format round trip") {
    UGraph g(3);
    g.add_edge(2, 0);
    g.labels() = {"x", "y with \"quote\"", "z"};
    const std::string text = write_ugraph(g);
    const ParsedGraph back = read_graph(text);
    REQUIRE(!back.directed);
    CHECK(back.ugraph.labels() == g.labels());
    CHECK(back.ugraph.edges() == g.edges());
    CHECK(write_ugraph(back.ugraph) == text);

    DiGraph d(2);
    d.add_arc(1, 0);
    d.labels() = {"e", "t"};
    const std::string dtext = write_digraph(d);
    const ParsedGraph dback = read_graph(dtext);
    REQUIRE(dback.directed);
    CHECK(dback.digraph.arcs() == d.arcs());
    CHECK(write_digraph(dback.digraph) == dtext);

    CHECK_THROWS_AS(read_graph("{broken"), Error);
}

TEST_CASE("dot export") {
    UGraph g(2);
    g.add_edge(0, 1);
    g.labels() = {"a", "b"};
    const std::string dot = to_dot(g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);

    DiGraph d(2);
    d.add_arc(0, 1);
    const std::string ddot = to_dot(d);
    CHECK(ddot.find("digraph") != std::string::npos);
    CHECK(ddot.find("v0 -> v1") != std::string::npos);
}

TEST_CASE("partition block lookup") {
    VertexPartition p;
    p.blocks = {{0, 2}, {1}};
    const auto of = p.block_of(3);
    CHECK(of == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("strip labels") {
    UGraph g(2);
    g.labels() = {"a", "b"};
    g.strip_labels();
    CHECK(g.labels() == std::vector<std::string>{"", ""});
}
