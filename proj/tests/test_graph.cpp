#include "fixtures.hpp"

#include "groot/graph.hpp"

#include <doctest.h>

using namespace groot;

TEST_CASE("graph stores symmetric sorted adjacency") {
  const Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}, {1, 0}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(g.neighbors(2) == std::vector<Vertex>{0});
  CHECK(g.adjacent(3, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("graph rejects self-loops and out-of-range vertices") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
  const Graph g(2);
  CHECK_THROWS_AS(g.neighbors(2), GraphError);
  CHECK_THROWS_AS(g.adjacent(0, 5), GraphError);
}

TEST_CASE("graph ordering compares order then edge list") {
  CHECK(Graph(2) < Graph(3));
  CHECK(Graph::from_edges(3, {{0, 2}}) > Graph::from_edges(3, {{0, 1}}));
  CHECK(fixtures::cycle(5) == fixtures::cycle(5));
}

TEST_CASE("relabeling renames endpoints") {
  const Graph p = fixtures::path(3);  // 0-1-2
  const Graph q = p.relabeled(std::vector<Vertex>{1, 0, 2});
  CHECK(q == Graph::from_edges(3, {{1, 0}, {0, 2}}));
}

TEST_CASE("girth values order with infinity on top") {
  CHECK(Girth::finite(5) < Girth::finite(6));
  CHECK(Girth::infinite() > Girth::finite(1000));
  CHECK(Girth::infinite() == Girth::infinite());
  CHECK(Girth::infinite().at_least(6));
  CHECK_FALSE(Girth::finite(5).at_least(6));
  CHECK(Girth::infinite().to_string() == "inf");
  CHECK_THROWS_AS(Girth::finite(2), GraphError);
  CHECK_THROWS_AS(Girth::infinite().value(), std::logic_error);
}

TEST_CASE("vertex maps") {
  CHECK_THROWS_AS(VertexMap({0, 0, 1}), GraphError);
  CHECK_THROWS_AS(VertexMap({0, 3, 1}), GraphError);

  const VertexMap f({0, 2, 1, 3, 5, 4});
  CHECK(f.is_involution());
  CHECK(f.cycle_notation() == "(1 2)(4 5)");
  CHECK(VertexMap::identity(4).cycle_notation() == "()");

  const VertexMap rot({1, 2, 0});
  CHECK_FALSE(rot.is_involution());
  CHECK(rot.compose(rot.inverse()).is_identity());
  CHECK(rot.compose(rot) == VertexMap({2, 0, 1}));
  CHECK(rot.cycle_notation() == "(0 1 2)");

  const Graph c = fixtures::cycle(3);
  CHECK(rot.is_isomorphism(c, c));
  CHECK_FALSE(VertexMap::identity(3).is_isomorphism(fixtures::path(3), c));
}

TEST_CASE("set helpers") {
  const VertexSet s = make_set(6, {5, 0, 1});
  CHECK(members(s) == std::vector<Vertex>{0, 1, 5});
  CHECK_THROWS_AS(make_set(3, {3}), GraphError);
}
