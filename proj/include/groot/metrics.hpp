#pragma once

#include "groot/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace groot {

/// N[v]: v together with its neighbours.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// BFS distance; nullopt when v is unreachable from u.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// Distances from `source` to every vertex; nullopt entries are unreachable.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

/// r-th power: u != v adjacent iff their distance is at most r. Accepts
/// disconnected input. Throws GraphError for r == 0.
Graph power(const Graph& h, std::size_t r);

inline Graph square(const Graph& h) { return power(h, 2); }

Girth girth(const Graph& g);

/// True for n <= 1, including the empty graph.
bool is_connected(const Graph& g);

/// Pairwise adjacent and not extendable by any vertex outside the set.
bool is_maximal_clique(const Graph& g, const VertexSet& set);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace groot
