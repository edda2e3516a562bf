#pragma once

// Named graphs and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's algorithms: distances come from
// Floyd-Warshall, girth from per-edge deletion, isomorphism from trying every
// permutation.

#include "groot/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace fixtures {

using groot::Edge;
using groot::Graph;
using groot::GraphBuilder;
using groot::Vertex;

inline Graph cycle(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

/// Star with centre `centre` on n vertices.
inline Graph star(std::size_t n, Vertex centre = 0) {
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v != centre) b.add_edge(centre, v);
  }
  return b.build();
}

inline Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

inline Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

/// C6 squared, written out by hand: everything except the antipodal pairs.
inline Graph octahedron() {
  GraphBuilder b(6);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (v != u + 3) b.add_edge(u, v);
    }
  }
  return b.build();
}

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

inline std::vector<std::vector<std::size_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline Graph power_oracle(const Graph& h, std::size_t r) {
  const auto d = floyd_warshall(h);
  GraphBuilder b(h.order());
  for (Vertex u = 0; u < h.order(); ++u)
    for (Vertex v = u + 1; v < h.order(); ++v)
      if (d[u][v] <= r) b.add_edge(u, v);
  return b.build();
}

/// Shortest cycle through an edge uv is dist(u, v) in g - uv, plus one.
inline std::optional<std::size_t> girth_oracle(const Graph& g) {
  std::optional<std::size_t> best;
  const auto edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (i != k) rest.push_back(edges[i]);
    const auto d = floyd_warshall(Graph::from_edges(g.order(), rest));
    const std::size_t len = d[edges[k].first][edges[k].second];
    if (len < kInf && (!best || len + 1 < *best)) best = len + 1;
  }
  return best;
}

inline bool isomorphic_oracle(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto edges = a.edges();
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    const bool all = std::all_of(edges.begin(), edges.end(),
                                 [&](const Edge& e) { return b.adjacent(perm[e.first], perm[e.second]); });
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

/// Random labelled tree via a random attachment order, then shuffled.
inline Graph random_tree(std::mt19937& rng, std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return b.build().relabeled(perm);
}

inline std::vector<Vertex> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace fixtures
