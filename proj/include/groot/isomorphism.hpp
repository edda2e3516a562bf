#pragma once

#include "groot/graph.hpp"

#include <optional>

namespace groot {

/// Finds a witness m with uv ∈ E(a) ⟺ m(u)m(v) ∈ E(b), or nullopt when the
/// graphs are not isomorphic. Backtracking over colour-refined candidate
/// classes; intended for small graphs (n <= 16 or so).
std::optional<VertexMap> are_isomorphic(const Graph& a, const Graph& b);

}  // namespace groot
