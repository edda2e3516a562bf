#include "groot/mining.hpp"

#include "groot/isomorphism.hpp"
#include "groot/metrics.hpp"

#include <algorithm>
#include <map>

namespace groot {
namespace {

// Cheap isomorphism invariant of a square: its degree sequence and the sorted
// per-vertex triangle counts.
using SquareKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

SquareKey square_key(const Graph& sq) {
  std::vector<std::size_t> triangles(sq.order(), 0);
  for (Vertex v = 0; v < sq.order(); ++v) {
    std::size_t twice = 0;
    for (Vertex u : sq.neighbors(v)) twice += (sq.neighbor_set(u) & sq.neighbor_set(v)).count();
    triangles[v] = twice / 2;
  }
  std::sort(triangles.begin(), triangles.end());
  return {degree_sequence(sq), std::move(triangles)};
}

Graph complete_graph(std::size_t n) {
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) builder.add_edge(u, v);
  }
  return builder.build();
}

struct Seen {
  Graph graph;
  Graph square;
};

}  // namespace

std::optional<SameSquarePair> certify_same_square_pair(const Graph& a, const Graph& b) {
  Graph sa = square(a);
  const Graph sb = square(b);
  auto witness = are_isomorphic(sa, sb);
  if (!witness) return std::nullopt;

  NonIsomorphismEvidence evidence = NonIsomorphismEvidence::DegreeSequence;
  if (degree_sequence(a) == degree_sequence(b)) {
    if (are_isomorphic(a, b)) return std::nullopt;
    evidence = NonIsomorphismEvidence::ExhaustiveSearch;
  }
  return SameSquarePair{a, b, std::move(sa), std::move(*witness), evidence, girth(a), girth(b)};
}

void find_same_square_pairs(const SearchConstraints& c, const PairVisitor& on_pair,
                            const std::optional<Graph>& resume_after,
                            const std::function<void(const Graph&)>& on_graph) {
  std::map<SquareKey, std::vector<Seen>> buckets;
  bool reporting = !resume_after.has_value();

  enumerate_graphs(c, [&](const Graph& g) {
    Graph sq = square(g);
    auto& bucket = buckets[square_key(sq)];
    if (reporting) {
      for (const Seen& earlier : bucket) {
        // Distinct enumeration outputs are never isomorphic, so only the
        // squares need testing here.
        if (!are_isomorphic(earlier.square, sq)) continue;
        if (auto pair = certify_same_square_pair(earlier.graph, g)) on_pair(*pair);
      }
      if (on_graph) on_graph(g);
    } else if (g == *resume_after) {
      reporting = true;
    }
    bucket.push_back({g, std::move(sq)});
    return true;
  });

  if (!reporting) throw GraphError("resume point was not produced by this enumeration");
}

std::vector<SameSquarePair> find_same_square_pairs(const SearchConstraints& c) {
  std::vector<SameSquarePair> out;
  find_same_square_pairs(c, [&](const SameSquarePair& p) { out.push_back(p); });
  return out;
}

std::vector<TreePowerPair> complete_power_tree_pairs(std::size_t r, std::size_t n) {
  if (r < 3) throw GraphError("complete_power_tree_pairs requires r >= 3");
  const Graph complete = complete_graph(n);

  std::vector<Graph> trees;
  enumerate_graphs(SearchConstraints{n, Girth::infinite(), 0, true}, [&](const Graph& t) {
    if (power(t, r) == complete) trees.push_back(t);
    return true;
  });

  std::vector<TreePowerPair> out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (are_isomorphic(trees[i], trees[j])) {
        throw std::logic_error("enumeration produced two isomorphic trees");
      }
      out.push_back({trees[i], trees[j], complete});
    }
  }
  return out;
}

}  // namespace groot
