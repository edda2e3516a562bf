#pragma once

#include "groot/graph.hpp"
#include "groot/reconstruct.hpp"

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace groot {

/// X[v] = { u : uv is an edge of both roots }.
class CommonEdgeMap {
 public:
  /// Throws GraphError on mismatched vertex counts.
  CommonEdgeMap(const Graph& h1, const Graph& h2);

  std::size_t order() const { return sets_.size(); }
  const std::vector<Vertex>& at(Vertex v) const { return sets_.at(v); }
  std::size_t count(Vertex v) const { return at(v).size(); }

 private:
  std::vector<std::vector<Vertex>> sets_;
};

inline CommonEdgeMap common_edge_map(const Graph& h1, const Graph& h2) { return {h1, h2}; }

/// Some u-v-w that is a path in both graphs, if any.
std::optional<SeedPath> shared_path(const Graph& h1, const Graph& h2);

class RootPairError : public PreconditionError {
 public:
  enum class Reason {
    OrderMismatch,
    SquareMismatch,
    GirthBelowSix,
    Disconnected,
    SharedPathPresent,
  };

  RootPairError(Reason reason, const std::string& what) : PreconditionError(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Raised when a checked construction fails on inputs that satisfied every
/// precondition. Reaching it would mean two distinct girth>=6 roots share a path.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The involution: v is fixed when X[v] is empty, else sent to its single
/// common neighbour. Requires |X[v]| <= 1 for every v.
VertexMap involution_from(const CommonEdgeMap& x);

// Both predicates require h1² = h2² = g, girth >= 6 for both roots and no
// shared path; violations throw RootPairError.

/// uv ∈ E(h1), |X[v]| = 1, u != f(v)  ⟹  |X[u]| = 0.
bool check_property_A(const Graph& h1, const Graph& h2, const Graph& g);
/// uv ∈ E(h1), |X[v]| = 0  ⟹  |X[u]| = 1.
bool check_property_B(const Graph& h1, const Graph& h2, const Graph& g);

struct EqualRoots {};

struct Involution {
  VertexMap map;
  bool verified = false;
};

using IsomorphismReport = std::variant<EqualRoots, Involution>;

/// Builds and verifies the isomorphism between two girth >= 6 roots of g.
/// Throws RootPairError on precondition violations and InternalInconsistency
/// if verification fails.
IsomorphismReport build_isomorphism(const Graph& h1, const Graph& h2, const Graph& g);

}  // namespace groot
