#pragma once

#include "groot/graph.hpp"

#include <cstddef>
#include <vector>

namespace groot {

struct BruteForceOptions {
  /// Inputs above this order are rejected unless the bound is raised.
  std::size_t max_order = 10;
};

/// Every edge subset h of E(g) with h² = g and girth(h) >= girth_min, found
/// by backtracking over the edges of g. Sorted by edge list.
/// Throws GraphError on disconnected input or when g exceeds max_order.
std::vector<Graph> brute_force_roots(const Graph& g, std::size_t girth_min,
                                     const BruteForceOptions& options = {});

}  // namespace groot
