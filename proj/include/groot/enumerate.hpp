#pragma once

#include "groot/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace groot {

struct SearchConstraints {
  std::size_t n = 1;
  Girth girth_min = Girth::finite(3);
  std::size_t min_degree = 0;
  bool connected = true;

  /// Throws GraphError if n == 0 or if a finite girth bound is below 3.
  void validate() const;

  /// Stable text form, e.g. "n=9 girth_min=5 min_degree=2 connected=1".
  std::string signature() const;

  bool satisfied_by(const Graph& g) const;
};

/// Largest order enumerate_graphs accepts.
inline constexpr std::size_t kMaxEnumerationOrder = 32;

/// Return false to stop the enumeration early.
using GraphVisitor = std::function<bool(const Graph&)>;

/**
 * Visits one representative per isomorphism class of graphs meeting `c`.
 *
 * Orderly generation: a graph is kept only when its upper-triangle code
 * (graph6 bit order) is the lexicographic maximum over all relabelings, and
 * children are formed by adding an edge after the last one set. Girth is
 * hereditary under edge deletion, so it prunes the tree; degree and
 * connectivity only filter what is visited. The visiting order is fixed.
 *
 * `resume_after` must be a canonical representative previously visited under
 * the same constraints; visiting restarts right after it.
 */
void enumerate_graphs(const SearchConstraints& c, const GraphVisitor& visit,
                      const std::optional<Graph>& resume_after = std::nullopt);

std::vector<Graph> enumerate_graphs(const SearchConstraints& c);

/// Same sequence as enumerate_graphs, with the generation tree split at a
/// fixed depth and the pieces processed on `threads` workers.
std::vector<Graph> enumerate_graphs_parallel(const SearchConstraints& c, std::size_t threads);

/// True iff g is its own canonical representative under the enumeration order.
bool is_canonical(const Graph& g);

/// Resume point for an interrupted enumeration.
struct Checkpoint {
  Graph last;
  std::string signature;

  std::string to_line() const;
  /// Throws std::runtime_error on malformed input.
  static Checkpoint from_line(const std::string& line);
};

}  // namespace groot
