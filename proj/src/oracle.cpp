#include "groot/oracle.hpp"

#include "groot/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace groot {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

class RootSearch {
 public:
  RootSearch(const Graph& g, std::size_t girth_min)
      : g_(g), girth_min_(girth_min), edges_(g.edges()), square_(g.order()),
        included_(g.order(), 0), possible_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) square_[v] |= bit(w);
      possible_[v] = square_[v];
    }
  }

  std::vector<Graph> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // True if b lies within distance girth_min - 2 of a in the partial root,
  // i.e. adding ab would close a cycle shorter than girth_min.
  bool closes_short_cycle(Vertex a, Vertex b) const {
    if (girth_min_ <= 3) return false;
    Mask ball = bit(a);
    Mask frontier = bit(a);
    for (std::size_t step = 0; step + 2 < girth_min_ && frontier; ++step) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= included_[std::countr_zero(f)];
      frontier = next & ~ball;
      ball |= next;
    }
    return (ball & bit(b)) != 0;
  }

  // Adding ab puts a's root neighbours within distance 2 of b and vice versa;
  // all of those pairs must be square edges.
  bool stays_inside_square(Vertex a, Vertex b) const {
    return (included_[a] & ~square_[b] & ~bit(b)) == 0 &&
           (included_[b] & ~square_[a] & ~bit(a)) == 0;
  }

  bool coverable(Vertex x) const {
    for (Mask rest = square_[x]; rest; rest &= rest - 1) {
      const Vertex y = static_cast<Vertex>(std::countr_zero(rest));
      if (!(possible_[x] & bit(y)) && !(possible_[x] & possible_[y])) return false;
    }
    return true;
  }

  void search(std::size_t k) {
    if (k == edges_.size()) {
      record();
      return;
    }
    const auto [a, b] = edges_[k];

    if (!closes_short_cycle(a, b) && stays_inside_square(a, b)) {
      included_[a] |= bit(b);
      included_[b] |= bit(a);
      search(k + 1);
      included_[a] &= ~bit(b);
      included_[b] &= ~bit(a);
    }

    possible_[a] &= ~bit(b);
    possible_[b] &= ~bit(a);
    if (coverable(a) && coverable(b)) search(k + 1);
    possible_[a] |= bit(b);
    possible_[b] |= bit(a);
  }

  void record() {
    GraphBuilder builder(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) {
      for (Mask m = included_[v]; m; m &= m - 1) {
        const auto w = static_cast<Vertex>(std::countr_zero(m));
        if (v < w) builder.add_edge(v, w);
      }
    }
    Graph h = builder.build();
    if (square(h) == g_ && girth(h).at_least(girth_min_)) found_.push_back(std::move(h));
  }

  const Graph& g_;
  std::size_t girth_min_;
  std::vector<Edge> edges_;
  std::vector<Mask> square_;
  std::vector<Mask> included_;
  std::vector<Mask> possible_;
  std::vector<Graph> found_;
};

}  // namespace

std::vector<Graph> brute_force_roots(const Graph& g, std::size_t girth_min,
                                     const BruteForceOptions& options) {
  if (!is_connected(g)) throw GraphError("brute_force_roots requires a connected graph");
  if (g.order() > options.max_order) {
    throw GraphError("graph of order " + std::to_string(g.order()) +
                     " exceeds the brute-force bound " + std::to_string(options.max_order));
  }
  if (g.order() > 64) throw GraphError("brute_force_roots supports at most 64 vertices");
  return RootSearch(g, girth_min).run();
}

}  // namespace groot
