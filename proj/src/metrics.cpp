#include "groot/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace groot {

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet set = g.neighbor_set(v);
  set.set(v);
  return set;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  dist.at(source) = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  if (u >= g.order()) throw GraphError("vertex " + std::to_string(u) + " out of range");
  return distances_from(g, u)[v];
}

Graph power(const Graph& h, std::size_t r) {
  if (r == 0) throw GraphError("graph power requires r >= 1");
  const std::size_t n = h.order();
  GraphBuilder builder(n);
  for (Vertex source = 0; source < n; ++source) {
    // Ball of radius r grown by frontier unions.
    VertexSet reached = closed_neighborhood(h, source);
    VertexSet frontier = h.neighbor_set(source);
    for (std::size_t step = 1; step < r && frontier.any(); ++step) {
      VertexSet next(n);
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v)) {
        next |= h.neighbor_set(v);
      }
      next -= reached;
      reached |= next;
      frontier = std::move(next);
    }
    for (auto v = reached.find_next(source); v != VertexSet::npos; v = reached.find_next(v)) {
      builder.add_edge(source, v);
    }
  }
  return builder.build();
}

Girth girth(const Graph& g) {
  // BFS from every root; a non-tree edge xy closes a walk of length
  // d(x) + d(y) + 1 through the root, and the minimum over all roots is
  // attained by a shortest cycle.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.order();
  std::size_t best = kNone;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (best != kNone && 2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kNone) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == kNone ? Girth::infinite() : Girth::finite(best);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  const auto dist = distances_from(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

bool is_maximal_clique(const Graph& g, const VertexSet& set) {
  if (set.size() != g.order()) throw GraphError("vertex set size does not match graph order");
  VertexSet common(g.order());
  common.set();
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
    if (!(set - closed_neighborhood(g, v)).none()) return false;
    common &= g.neighbor_set(v);
  }
  // Any vertex adjacent to every member would extend the clique.
  return (common - set).none();
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq(g.order());
  for (Vertex v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

}  // namespace groot
