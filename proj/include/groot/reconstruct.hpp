#pragma once

#include "groot/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace groot {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Three distinct vertices asserted to form the path u-v-w in a root.
struct SeedPath {
  Vertex u;
  Vertex v;
  Vertex w;

  /// Throws GraphError if any two coincide.
  SeedPath(Vertex u, Vertex v, Vertex w);

  SeedPath reversed() const { return {w, v, u}; }
  friend bool operator==(const SeedPath&, const SeedPath&) = default;
};

enum class ContradictionStage {
  NeighborhoodClash,
  EdgeOutsideSquare,
  UnresolvedVertex,
  SquareMismatch,
  GirthViolation,
  DisconnectedInput,
};

std::string_view to_string(ContradictionStage stage);

struct Contradiction {
  ContradictionStage stage;
  std::string detail;
};

/// Either the root containing the seed path, or why none exists.
class ReconstructionOutcome {
 public:
  static ReconstructionOutcome root(Graph h) { return ReconstructionOutcome{std::move(h)}; }
  static ReconstructionOutcome contradiction(ContradictionStage stage, std::string detail) {
    return ReconstructionOutcome{Contradiction{stage, std::move(detail)}};
  }

  bool has_root() const { return std::holds_alternative<Graph>(value_); }
  const Graph& root() const { return std::get<Graph>(value_); }
  const Contradiction& contradiction() const { return std::get<Contradiction>(value_); }

 private:
  explicit ReconstructionOutcome(std::variant<Graph, Contradiction> v) : value_(std::move(v)) {}
  std::variant<Graph, Contradiction> value_;
};

// Consequences of girth >= 6 for H and its square G. Both throw
// PreconditionError when girth(h) < 6.

/// No two vertices at distance exactly 3 in h are adjacent in h².
bool obs_star_holds(const Graph& h);

/// For every edge uv of h: N_G[u] ∩ N_G[v] = N_h[u] ∪ N_h[v].
bool obs_doublestar_holds(const Graph& h);

/// Closed root neighbourhood of x, given that x-y-z is a path in a girth >= 6
/// root of g: ((N_G[x] ∩ N_G[y]) \ N_G[z]) ∪ {x, y}.
VertexSet neighborhood_from_path(const Graph& g, Vertex x, Vertex y, Vertex z);

/// Closed root neighbourhood of the unique neighbour of leaf y: N_G[y].
VertexSet neighborhood_from_leaf(const Graph& g, Vertex y);

/// Recomputes the whole root from one path u-v-w by propagating
/// neighbourhoods outwards, then verifies the candidate.
ReconstructionOutcome reconstruct_from_seed(const Graph& g, const SeedPath& seed);

/// All distinct roots h with h² = g and girth(h) >= girth_min, sorted by edge
/// list. For girth_min < 6 this delegates to brute_force_roots.
/// Throws GraphError when g is disconnected.
std::vector<Graph> enumerate_roots(const Graph& g, std::size_t girth_min = 6);

}  // namespace groot
