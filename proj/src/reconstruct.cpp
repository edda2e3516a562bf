#include "groot/reconstruct.hpp"

#include "groot/metrics.hpp"
#include "groot/oracle.hpp"

#include <algorithm>
#include <deque>

namespace groot {
namespace {

void require_girth_six(const Graph& h) {
  if (!girth(h).at_least(6)) {
    throw PreconditionError("graph has girth " + girth(h).to_string() + ", at least 6 required");
  }
}

std::string vertex_list(const VertexSet& set) {
  std::string out = "{";
  for (Vertex v : members(set)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  }
  return out + "}";
}

// Closed root neighbourhoods as they become known, with the clash checks
// run at assignment time.
class Propagation {
 public:
  explicit Propagation(const Graph& g) : g_(g), known_(g.order()) {}

  std::optional<Contradiction> assign(Vertex x, VertexSet nb) {
    const VertexSet square_nb = closed_neighborhood(g_, x);
    if (!nb.is_subset_of(square_nb)) {
      return Contradiction{ContradictionStage::EdgeOutsideSquare,
                           "neighbourhood " + vertex_list(nb) + " of vertex " +
                               std::to_string(x) + " leaves its square neighbourhood " +
                               vertex_list(square_nb)};
    }
    for (Vertex t = 0; t < known_.size(); ++t) {
      if (t == x || !known_[t]) continue;
      if (nb.test(t) != known_[t]->test(x)) {
        return Contradiction{ContradictionStage::NeighborhoodClash,
                             "vertices " + std::to_string(x) + " and " + std::to_string(t) +
                                 " disagree on their adjacency"};
      }
    }
    known_[x] = std::move(nb);
    queue_.push_back(x);
    return std::nullopt;
  }

  bool resolved(Vertex v) const { return known_[v].has_value(); }
  const VertexSet& at(Vertex v) const { return *known_[v]; }

  std::optional<Vertex> next() {
    if (queue_.empty()) return std::nullopt;
    const Vertex y = queue_.front();
    queue_.pop_front();
    return y;
  }

 private:
  const Graph& g_;
  std::vector<std::optional<VertexSet>> known_;
  std::deque<Vertex> queue_;
};

// Smallest member of `set` other than the excluded vertices.
std::optional<Vertex> other_member(const VertexSet& set, Vertex skip1, Vertex skip2) {
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
    if (v != skip1 && v != skip2) return v;
  }
  return std::nullopt;
}

}  // namespace

SeedPath::SeedPath(Vertex u_, Vertex v_, Vertex w_) : u(u_), v(v_), w(w_) {
  if (u == v || v == w || u == w) throw GraphError("seed path vertices must be distinct");
}

std::string_view to_string(ContradictionStage stage) {
  switch (stage) {
    case ContradictionStage::NeighborhoodClash: return "NeighborhoodClash";
    case ContradictionStage::EdgeOutsideSquare: return "EdgeOutsideSquare";
    case ContradictionStage::UnresolvedVertex: return "UnresolvedVertex";
    case ContradictionStage::SquareMismatch: return "SquareMismatch";
    case ContradictionStage::GirthViolation: return "GirthViolation";
    case ContradictionStage::DisconnectedInput: return "DisconnectedInput";
  }
  return "Unknown";
}

bool obs_star_holds(const Graph& h) {
  require_girth_six(h);
  const Graph g = square(h);
  for (Vertex u = 0; u < h.order(); ++u) {
    const auto dist = distances_from(h, u);
    for (Vertex v = 0; v < h.order(); ++v) {
      if (dist[v] == 3 && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool obs_doublestar_holds(const Graph& h) {
  require_girth_six(h);
  const Graph g = square(h);
  for (const auto& [u, v] : h.edges()) {
    const VertexSet lhs = closed_neighborhood(g, u) & closed_neighborhood(g, v);
    const VertexSet rhs = closed_neighborhood(h, u) | closed_neighborhood(h, v);
    if (lhs != rhs) return false;
  }
  return true;
}

VertexSet neighborhood_from_path(const Graph& g, Vertex x, Vertex y, Vertex z) {
  if (x == y || y == z || x == z) throw GraphError("path vertices must be distinct");
  VertexSet nb = (closed_neighborhood(g, x) & closed_neighborhood(g, y)) - closed_neighborhood(g, z);
  nb.set(x);
  nb.set(y);
  return nb;
}

VertexSet neighborhood_from_leaf(const Graph& g, Vertex y) { return closed_neighborhood(g, y); }

ReconstructionOutcome reconstruct_from_seed(const Graph& g, const SeedPath& seed) {
  using Stage = ContradictionStage;
  const auto [u, v, w] = seed;
  const std::size_t n = g.order();
  if (u >= n || v >= n || w >= n) throw GraphError("seed vertex out of range");
  if (!is_connected(g)) {
    return ReconstructionOutcome::contradiction(Stage::DisconnectedInput, "square is disconnected");
  }
  if (!g.adjacent(u, v) || !g.adjacent(v, w)) {
    return ReconstructionOutcome::contradiction(Stage::EdgeOutsideSquare,
                                                "a seed edge is not an edge of the square");
  }
  if (!g.adjacent(u, w)) {
    return ReconstructionOutcome::contradiction(
        Stage::SquareMismatch, "seed endpoints are at distance 2 but not adjacent in the square");
  }

  Propagation prop(g);
  auto fail = [](const Contradiction& c) {
    return ReconstructionOutcome::contradiction(c.stage, c.detail);
  };

  // Endpoints first, then the middle vertex through whichever endpoint has a
  // second neighbour; if neither does, u is a leaf hanging off v.
  if (auto c = prop.assign(u, neighborhood_from_path(g, u, v, w))) return fail(*c);
  if (auto c = prop.assign(w, neighborhood_from_path(g, w, v, u))) return fail(*c);
  VertexSet middle;
  if (auto a = other_member(prop.at(u), u, v)) {
    middle = neighborhood_from_path(g, v, u, *a);
  } else if (auto b = other_member(prop.at(w), w, v)) {
    middle = neighborhood_from_path(g, v, w, *b);
  } else {
    middle = neighborhood_from_leaf(g, u);
  }
  if (auto c = prop.assign(v, std::move(middle))) return fail(*c);

  while (auto y = prop.next()) {
    const VertexSet around = prop.at(*y);
    for (auto x = around.find_first(); x != VertexSet::npos; x = around.find_next(x)) {
      if (x == *y || prop.resolved(x)) continue;
      VertexSet nb = [&] {
        if (auto z = other_member(around, x, *y)) return neighborhood_from_path(g, x, *y, *z);
        return neighborhood_from_leaf(g, *y);
      }();
      if (auto c = prop.assign(x, std::move(nb))) return fail(*c);
    }
  }

  GraphBuilder builder(n);
  for (Vertex x = 0; x < n; ++x) {
    if (!prop.resolved(x)) {
      return ReconstructionOutcome::contradiction(
          Stage::UnresolvedVertex,
          "vertex " + std::to_string(x) + " is not reachable from the seed in the candidate root");
    }
    for (Vertex t : members(prop.at(x))) {
      if (t != x) builder.add_edge(x, t);
    }
  }
  Graph h = builder.build();
  if (square(h) != g) {
    return ReconstructionOutcome::contradiction(Stage::SquareMismatch,
                                                "square of the candidate root differs from input");
  }
  if (const Girth gh = girth(h); !gh.at_least(6)) {
    return ReconstructionOutcome::contradiction(Stage::GirthViolation,
                                                "candidate root has girth " + gh.to_string());
  }
  return ReconstructionOutcome::root(std::move(h));
}

std::vector<Graph> enumerate_roots(const Graph& g, std::size_t girth_min) {
  if (girth_min < 6) return brute_force_roots(g, girth_min);
  if (!is_connected(g)) throw GraphError("enumerate_roots requires a connected graph");

  const std::size_t n = g.order();
  std::vector<Graph> roots;
  if (n <= 2) {
    // K0, K1 and K2 are their own unique roots.
    roots.push_back(g);
    return roots;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& around = g.neighbors(v);
    for (std::size_t i = 0; i < around.size(); ++i) {
      for (std::size_t j = i + 1; j < around.size(); ++j) {
        const Vertex a = around[i];
        const Vertex b = around[j];
        if (!g.adjacent(a, b)) continue;
        auto outcome = reconstruct_from_seed(g, SeedPath(a, v, b));
        if (outcome.has_root() && girth(outcome.root()).at_least(girth_min)) {
          roots.push_back(outcome.root());
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace groot
