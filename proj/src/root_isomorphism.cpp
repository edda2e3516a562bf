#include "groot/root_isomorphism.hpp"

#include "groot/metrics.hpp"

#include <cassert>

namespace groot {
namespace {

using Reason = RootPairError::Reason;

void require_same_order(const Graph& h1, const Graph& h2) {
  if (h1.order() != h2.order()) {
    throw RootPairError(Reason::OrderMismatch, "roots have different vertex counts");
  }
}

void require_roots_of(const Graph& h1, const Graph& h2, const Graph& g) {
  require_same_order(h1, h2);
  if (g.order() != h1.order() || square(h1) != g || square(h2) != g) {
    throw RootPairError(Reason::SquareMismatch, "both roots must square to the given graph");
  }
  if (!girth(h1).at_least(6) || !girth(h2).at_least(6)) {
    throw RootPairError(Reason::GirthBelowSix, "both roots must have girth at least 6");
  }
}

void require_no_shared_path(const Graph& h1, const Graph& h2) {
  if (auto p = shared_path(h1, h2)) {
    throw RootPairError(Reason::SharedPathPresent,
                        "roots share the path " + std::to_string(p->u) + "-" +
                            std::to_string(p->v) + "-" + std::to_string(p->w));
  }
}

// Runs `holds(u, v)` over both orientations of every edge of h1.
template <typename Pred>
bool for_all_arcs(const Graph& h1, Pred holds) {
  for (const auto& [a, b] : h1.edges()) {
    if (!holds(a, b) || !holds(b, a)) return false;
  }
  return true;
}

}  // namespace

CommonEdgeMap::CommonEdgeMap(const Graph& h1, const Graph& h2) {
  if (h1.order() != h2.order()) throw GraphError("roots have different vertex counts");
  sets_.resize(h1.order());
  for (Vertex v = 0; v < h1.order(); ++v) {
    sets_[v] = members(h1.neighbor_set(v) & h2.neighbor_set(v));
  }
}

std::optional<SeedPath> shared_path(const Graph& h1, const Graph& h2) {
  const CommonEdgeMap x(h1, h2);
  for (Vertex v = 0; v < x.order(); ++v) {
    if (x.count(v) >= 2) return SeedPath(x.at(v)[0], v, x.at(v)[1]);
  }
  return std::nullopt;
}

VertexMap involution_from(const CommonEdgeMap& x) {
  std::vector<Vertex> image(x.order());
  for (Vertex v = 0; v < x.order(); ++v) {
    if (x.count(v) > 1) {
      throw PreconditionError("vertex " + std::to_string(v) + " has several common neighbours");
    }
    image[v] = x.count(v) == 0 ? v : x.at(v).front();
  }
  return VertexMap(std::move(image));
}

bool check_property_A(const Graph& h1, const Graph& h2, const Graph& g) {
  require_roots_of(h1, h2, g);
  require_no_shared_path(h1, h2);
  const CommonEdgeMap x(h1, h2);
  const VertexMap f = involution_from(x);
  return for_all_arcs(h1, [&](Vertex u, Vertex v) {
    return !(x.count(v) == 1 && u != f(v)) || x.count(u) == 0;
  });
}

bool check_property_B(const Graph& h1, const Graph& h2, const Graph& g) {
  require_roots_of(h1, h2, g);
  require_no_shared_path(h1, h2);
  const CommonEdgeMap x(h1, h2);
  return for_all_arcs(h1, [&](Vertex u, Vertex v) { return x.count(v) != 0 || x.count(u) == 1; });
}

IsomorphismReport build_isomorphism(const Graph& h1, const Graph& h2, const Graph& g) {
  require_roots_of(h1, h2, g);
  if (!is_connected(h1) || !is_connected(h2)) {
    throw RootPairError(Reason::Disconnected, "both roots must be connected");
  }

  if (auto p = shared_path(h1, h2)) {
    if (h1 != h2) {
      throw InternalInconsistency("roots share a path but have different edge sets");
    }
    return EqualRoots{};
  }

  const CommonEdgeMap x(h1, h2);
  // Two common neighbours of v would already be a shared path through v.
  for (Vertex v = 0; v < x.order(); ++v) assert(x.count(v) <= 1);
  const VertexMap f = involution_from(x);

  if (!f.is_involution()) throw InternalInconsistency("common-edge map is not an involution");
  if (!f.is_isomorphism(h1, h2)) {
    throw InternalInconsistency("involution does not map the first root onto the second");
  }
  if (!f.inverse().is_isomorphism(h2, h1)) {
    throw InternalInconsistency("inverse involution does not map the second root onto the first");
  }
  return Involution{f, true};
}

}  // namespace groot
