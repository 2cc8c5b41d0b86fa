#include "doctest.h"

#include "vsmp/error.hpp"
#include "vsmp/graph.hpp"

using vsmp::Edge;
using vsmp::Graph;
using vsmp::Layout;
using vsmp::Vertex;

TEST_CASE("graph construction and adjacency") {
    Graph g(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 5);
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 2);
    CHECK(g.max_degree() == 3);
    CHECK(g.neighbors(1) == std::vector<Vertex>{2, 3, 4});
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(2, 4));
}

TEST_CASE("duplicate and reversed edges collapse") {
    Graph g(3, {{1, 2}, {2, 1}, {1, 2}, {2, 3}});
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(2) == 2);
}

TEST_CASE("edges come back sorted with smaller endpoint first") {
    Graph g(4, {{4, 2}, {3, 1}, {2, 1}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}});
}

TEST_CASE("single vertex and edgeless graphs") {
    Graph one(1, {});
    CHECK(one.num_vertices() == 1);
    CHECK(one.num_edges() == 0);
    CHECK(one.max_degree() == 0);
    Graph empty(5, {});
    CHECK(empty.num_edges() == 0);
    CHECK(empty.neighbors(3).empty());
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph(0, {}), vsmp::InvalidParameter);
    CHECK_THROWS_AS(Graph(-2, {}), vsmp::InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), vsmp::InvalidVertex);
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), vsmp::InvalidVertex);
    CHECK_THROWS_AS(Graph(3, {{2, 2}}), vsmp::SelfLoop);
    Graph g(3, {{1, 2}});
    CHECK_THROWS_AS(g.neighbors(4), vsmp::InvalidVertex);
    CHECK_THROWS_AS(g.degree(0), vsmp::InvalidVertex);
    CHECK_THROWS_AS(g.has_edge(1, 9), vsmp::InvalidVertex);
}

TEST_CASE("layout maps positions and vertices both ways") {
    Layout layout({2, 4, 3, 5, 1});
    CHECK(layout.size() == 5);
    CHECK(layout.position_of(2) == 1);
    CHECK(layout.position_of(1) == 5);
    CHECK(layout.vertex_at(1) == 2);
    CHECK(layout.vertex_at(4) == 5);
    CHECK(layout.sequence() == std::vector<Vertex>{2, 4, 3, 5, 1});
}

TEST_CASE("layout rejects non-bijections") {
    CHECK_THROWS_AS(Layout({}), vsmp::NotABijection);
    CHECK_THROWS_AS(Layout({1, 2, 2}), vsmp::NotABijection);
    CHECK_THROWS_AS(Layout({1, 2, 4}), vsmp::NotABijection);
    CHECK_THROWS_AS(Layout({0, 1}), vsmp::NotABijection);
}

TEST_CASE("layout accessor bounds") {
    Layout layout({1, 2, 3});
    CHECK_THROWS_AS(layout.position_of(4), vsmp::InvalidVertex);
    CHECK_THROWS_AS(layout.position_of(0), vsmp::InvalidVertex);
    CHECK_THROWS_AS(layout.vertex_at(0), vsmp::InvalidPosition);
    CHECK_THROWS_AS(layout.vertex_at(4), vsmp::InvalidPosition);
}
