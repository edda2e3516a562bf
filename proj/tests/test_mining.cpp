#include "fixtures.hpp"

#include "groot/isomorphism.hpp"
#include "groot/metrics.hpp"
#include "groot/mining.hpp"

#include <doctest.h>

using namespace groot;
using namespace fixtures;

namespace {

bool is_pentagon_star(const SameSquarePair& p) {
  const bool forward = are_isomorphic(p.first, cycle(5)) && are_isomorphic(p.second, star(5));
  const bool backward = are_isomorphic(p.first, star(5)) && are_isomorphic(p.second, cycle(5));
  return forward || backward;
}

}  // namespace

TEST_CASE("certify a same-square pair") {
  const auto pair = certify_same_square_pair(cycle(5), star(5));
  REQUIRE(pair);
  CHECK(pair->square == complete(5));
  CHECK(pair->evidence == NonIsomorphismEvidence::DegreeSequence);
  CHECK(pair->square_witness.is_isomorphism(power(cycle(5), 2), power(star(5), 2)));
  CHECK(pair->first_girth == Girth::finite(5));
  CHECK(pair->second_girth.is_infinite());

  CHECK_FALSE(certify_same_square_pair(cycle(6), cycle(6)));
  CHECK_FALSE(certify_same_square_pair(cycle(6), path(6)));
}

TEST_CASE("evidence names the cheapest sufficient argument") {
  std::size_t exhaustive = 0;
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const auto& p : find_same_square_pairs({n, Girth::finite(3), 1, true})) {
      const bool same_degrees = degree_sequence(p.first) == degree_sequence(p.second);
      CHECK((p.evidence == NonIsomorphismEvidence::ExhaustiveSearch) == same_degrees);
      if (same_degrees) ++exhaustive;
    }
  }
  CHECK(exhaustive > 0);
}

TEST_CASE("the pentagon and the star are found at girth five") {
  const auto pairs = find_same_square_pairs({5, Girth::finite(5), 1, true});
  REQUIRE(pairs.size() == 1);
  CHECK(is_pentagon_star(pairs.front()));
  CHECK(pairs.front().square == complete(5));
}

TEST_CASE("no same-square pairs of girth at least six") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(find_same_square_pairs({n, Girth::finite(6), 1, true}).empty());
  }
}

TEST_CASE("every reported pair is certified") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const auto& p : find_same_square_pairs({n, Girth::finite(4), 1, true})) {
      CHECK(p.square_witness.is_isomorphism(power(p.first, 2), power(p.second, 2)));
      CHECK_FALSE(are_isomorphic(p.first, p.second));
      CHECK(isomorphic_oracle(power(p.first, 2), power(p.second, 2)));
      CHECK_FALSE(isomorphic_oracle(p.first, p.second));
    }
  }
}

TEST_CASE("resumed mining reports only pairs completed after the checkpoint") {
  const SearchConstraints c{7, Girth::finite(4), 1, true};
  const auto all = find_same_square_pairs(c);
  REQUIRE_FALSE(all.empty());
  const auto graphs = enumerate_graphs(c);
  const std::size_t cut = graphs.size() / 2;

  std::vector<SameSquarePair> later;
  std::size_t processed = 0;
  find_same_square_pairs(
      c, [&](const SameSquarePair& p) { later.push_back(p); }, graphs[cut],
      [&](const Graph&) { ++processed; });
  CHECK(processed == graphs.size() - cut - 1);

  std::size_t expected = 0;
  for (const auto& p : all) {
    const auto pos = std::find(graphs.begin(), graphs.end(), p.second) - graphs.begin();
    if (static_cast<std::size_t>(pos) > cut) ++expected;
  }
  CHECK(later.size() == expected);
  CHECK_THROWS_AS(find_same_square_pairs(c, [](const SameSquarePair&) {}, cycle(7).relabeled(std::vector<Vertex>{6, 5, 4, 3, 2, 1, 0})),
                  GraphError);
}

TEST_CASE("trees with complete higher powers") {
  const auto r3n4 = complete_power_tree_pairs(3, 4);
  REQUIRE(r3n4.size() == 1);
  const auto& p = r3n4.front();
  const bool p4_star = (are_isomorphic(p.first, path(4)) && are_isomorphic(p.second, star(4))) ||
                       (are_isomorphic(p.first, star(4)) && are_isomorphic(p.second, path(4)));
  CHECK(p4_star);
  CHECK(p.power == complete(4));

  CHECK(complete_power_tree_pairs(3, 3).empty());

  const auto r4n5 = complete_power_tree_pairs(4, 5);
  bool has_p5_star = false;
  for (const auto& q : r4n5) {
    has_p5_star = has_p5_star ||
                  (are_isomorphic(q.first, path(5)) && are_isomorphic(q.second, star(5))) ||
                  (are_isomorphic(q.first, star(5)) && are_isomorphic(q.second, path(5)));
  }
  CHECK(has_p5_star);
  CHECK(r4n5.size() == 3);  // all three trees on 5 vertices have diameter <= 4

  CHECK_THROWS_AS(complete_power_tree_pairs(2, 5), GraphError);
}
