#include "fixtures.hpp"

#include "groot/enumerate.hpp"
#include "groot/isomorphism.hpp"

#include <doctest.h>

using namespace groot;
using namespace fixtures;

TEST_CASE("isomorphism examples") {
  CHECK_FALSE(are_isomorphic(cycle(5), star(5)).has_value());

  const Graph p = petersen();
  const auto self = are_isomorphic(p, p);
  REQUIRE(self);
  CHECK(self->is_isomorphism(p, p));

  // 0-2-4-1-3-5-0 is another 6-cycle.
  const Graph other = Graph::from_edges(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  const auto m = are_isomorphic(cycle(6), other);
  REQUIRE(m);
  CHECK(m->is_isomorphism(cycle(6), other));

  CHECK_FALSE(are_isomorphic(cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK_FALSE(are_isomorphic(Graph(3), Graph(4)));
  CHECK(are_isomorphic(Graph(0), Graph(0)));
}

TEST_CASE("isomorphism agrees with the permutation oracle on every pair up to six vertices") {
  std::mt19937 rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto classes = enumerate_graphs(SearchConstraints{n, Girth::finite(3), 0, false});
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        const Graph shuffled = b.relabeled(random_permutation(rng, n));
        const auto witness = are_isomorphic(a, shuffled);
        REQUIRE(witness.has_value() == isomorphic_oracle(a, shuffled));
        if (witness) CHECK(witness->is_isomorphism(a, shuffled));
      }
    }
  }
}

TEST_CASE("isomorphism finds witnesses for relabelled regular graphs") {
  // Colour refinement cannot split vertex-transitive graphs, so these lean on
  // the backtracking.
  std::mt19937 rng(5);
  for (const Graph& g : {petersen(), cycle(12), complete(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Graph h = g.relabeled(random_permutation(rng, g.order()));
      const auto m = are_isomorphic(g, h);
      REQUIRE(m);
      CHECK(m->is_isomorphism(g, h));
    }
  }
  // Two disjoint 5-cycles versus C10: same degrees, not isomorphic.
  GraphBuilder two(10);
  for (Vertex v = 0; v < 5; ++v) {
    two.add_edge(v, (v + 1) % 5);
    two.add_edge(5 + v, 5 + (v + 1) % 5);
  }
  CHECK_FALSE(are_isomorphic(two.build(), cycle(10)));
}
