#pragma once

#include "groot/enumerate.hpp"
#include "groot/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace groot {

enum class NonIsomorphismEvidence {
  DegreeSequence,
  ExhaustiveSearch,
};

/// Two non-isomorphic graphs with isomorphic squares.
struct SameSquarePair {
  Graph first;
  Graph second;
  Graph square;              // square of `first`
  VertexMap square_witness;  // maps square(first) onto square(second)
  NonIsomorphismEvidence evidence;
  Girth first_girth;
  Girth second_girth;
};

/// Checks an arbitrary pair. Returns nullopt unless the squares are
/// isomorphic and the graphs themselves are not.
std::optional<SameSquarePair> certify_same_square_pair(const Graph& a, const Graph& b);

using PairVisitor = std::function<void(const SameSquarePair&)>;

/**
 * Enumerates the graphs meeting `c`, buckets them by an invariant of their
 * squares and reports every non-isomorphic pair with isomorphic squares.
 *
 * With `resume_after`, graphs up to the checkpoint are only re-bucketed and
 * just the pairs whose later member comes after it are reported.
 * `on_graph` sees every graph processed after the checkpoint.
 */
void find_same_square_pairs(const SearchConstraints& c, const PairVisitor& on_pair,
                            const std::optional<Graph>& resume_after = std::nullopt,
                            const std::function<void(const Graph&)>& on_graph = {});

std::vector<SameSquarePair> find_same_square_pairs(const SearchConstraints& c);

struct TreePowerPair {
  Graph first;
  Graph second;
  Graph power;  // the common r-th power, always K_n
};

/// All pairs of non-isomorphic trees on n vertices whose r-th powers are both
/// complete. Throws GraphError for r < 3.
std::vector<TreePowerPair> complete_power_tree_pairs(std::size_t r, std::size_t n);

}  // namespace groot
