#include "groot/isomorphism.hpp"

#include "groot/metrics.hpp"

#include <algorithm>
#include <map>

namespace groot {
namespace {

// Colour refinement run on the disjoint union of both graphs so colour ids
// are comparable across them. Starts from degrees; each round a vertex's new
// colour is (old colour, sorted neighbour colours), which subsumes the
// neighbour-degree multiset after the first round.
std::vector<std::size_t> refine_union(const Graph& a, const Graph& b) {
  const std::size_t na = a.order();
  const std::size_t total = na + b.order();
  auto neighbors = [&](std::size_t x) -> const std::vector<Vertex>& {
    return x < na ? a.neighbors(x) : b.neighbors(x - na);
  };
  auto offset = [&](std::size_t x) { return x < na ? std::size_t{0} : na; };

  std::vector<std::size_t> colour(total);
  for (std::size_t x = 0; x < total; ++x) colour[x] = neighbors(x).size();
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    std::vector<std::size_t> next(total);
    for (std::size_t x = 0; x < total; ++x) {
      std::vector<std::size_t> around;
      for (Vertex y : neighbors(x)) around.push_back(colour[y + offset(x)]);
      std::sort(around.begin(), around.end());
      auto [it, inserted] = ids.try_emplace({colour[x], std::move(around)}, ids.size());
      next[x] = it->second;
    }
    // Ids are assigned in first-seen order, which is not label invariant;
    // re-key by the sorted signature order instead.
    std::vector<std::size_t> rank(ids.size());
    std::size_t r = 0;
    for (const auto& [key, id] : ids) rank[id] = r++;
    for (auto& c : next) c = rank[c];
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

struct Matcher {
  const Graph& a;
  const Graph& b;
  std::vector<std::size_t> colour_a;
  std::vector<std::size_t> colour_b;
  std::vector<Vertex> order;
  std::vector<Vertex> image;
  std::vector<bool> used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex x = order[depth];
    for (Vertex y = 0; y < b.order(); ++y) {
      if (used[y] || colour_b[y] != colour_a[x]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex p = order[k];
        consistent = a.adjacent(x, p) == b.adjacent(y, image[p]);
      }
      if (!consistent) continue;
      image[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexMap> are_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;

  const auto colour = refine_union(a, b);
  Matcher m{a, b, {}, {}, {}, std::vector<Vertex>(n), std::vector<bool>(n, false)};
  m.colour_a.assign(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  m.colour_b.assign(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  {
    auto ca = m.colour_a;
    auto cb = m.colour_b;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  std::vector<std::size_t> class_size(2 * n + 1, 0);
  for (auto c : m.colour_a) ++class_size[c];

  // Match the most constrained vertex next: most already-placed neighbours,
  // then smallest colour class.
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> placed_neighbours(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || placed_neighbours[v] > placed_neighbours[best] ||
          (placed_neighbours[v] == placed_neighbours[best] &&
           class_size[m.colour_a[v]] < class_size[m.colour_a[best]])) {
        best = v;
      }
    }
    placed[best] = true;
    m.order.push_back(best);
    for (Vertex w : a.neighbors(best)) ++placed_neighbours[w];
  }

  if (!m.extend(0)) return std::nullopt;
  return VertexMap(std::move(m.image));
}

}  // namespace groot
