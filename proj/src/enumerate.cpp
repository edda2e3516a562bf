#include "groot/enumerate.hpp"

#include "groot/graph6.hpp"
#include "groot/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace groot {
namespace {

using Row = std::uint32_t;

Row bit(std::size_t v) { return Row{1} << v; }

struct Slot {
  std::size_t i;
  std::size_t j;
};

// Pair positions in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Slot> code_slots(std::size_t n) {
  std::vector<Slot> slots;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) slots.push_back({i, j});
  }
  return slots;
}

std::size_t slot_of(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

// Decides whether some relabeling yields a lexicographically larger code.
// Labels are assigned in order; once labels 0..j are fixed, column j of the
// permuted code is known, so branches are cut as soon as they fall behind.
class CanonicityTest {
 public:
  CanonicityTest(const Row* rows, std::size_t n) : rows_(rows), n_(n) {
    for (std::size_t x = 0; x < n; ++x) {
      twins_[x] = 0;
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y && (rows[x] & ~bit(y)) == (rows[y] & ~bit(x))) twins_[x] |= bit(y);
      }
    }
  }

  bool canonical() { return !beaten(0); }

 private:
  bool adj(std::size_t a, std::size_t b) const { return (rows_[a] >> b) & 1U; }

  bool beaten(std::size_t j) {
    if (j == n_) return false;
    Row tried = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      if (used_ & bit(x)) continue;
      // Swapping x with an untried-equivalent twin is an automorphism fixing
      // every label placed so far, so its subtree is a copy.
      if (twins_[x] & tried) continue;
      tried |= bit(x);
      int cmp = 0;
      for (std::size_t i = 0; i < j && cmp == 0; ++i) {
        const bool permuted = adj(sigma_[i], x);
        const bool original = adj(i, j);
        if (permuted != original) cmp = permuted ? 1 : -1;
      }
      if (cmp > 0) return true;
      if (cmp < 0) continue;
      sigma_[j] = x;
      used_ |= bit(x);
      const bool found = beaten(j + 1);
      used_ &= ~bit(x);
      if (found) return true;
    }
    return false;
  }

  const Row* rows_;
  std::size_t n_;
  Row twins_[kMaxEnumerationOrder] = {};
  std::size_t sigma_[kMaxEnumerationOrder] = {};
  Row used_ = 0;
};

class Generator {
 public:
  explicit Generator(const SearchConstraints& c)
      : c_(c), slots_(code_slots(c.n)), rows_(c.n, 0) {}

  // Calls `emit(p)` for every canonical child formed by setting slot p, with
  // the child's edge in place. Slots below `first` are skipped. Returns false
  // once `emit` does.
  template <typename Emit>
  bool grow(std::ptrdiff_t last, Emit&& emit, std::size_t first = 0) {
    for (std::size_t p = std::max(static_cast<std::size_t>(last + 1), first); p < slots_.size();
         ++p) {
      const auto [i, j] = slots_[p];
      if (!girth_allows(i, j)) continue;
      rows_[i] |= bit(j);
      rows_[j] |= bit(i);
      bool keep_going = true;
      if (CanonicityTest(rows_.data(), c_.n).canonical()) {
        keep_going = emit(static_cast<std::ptrdiff_t>(p));
      }
      rows_[i] &= ~bit(j);
      rows_[j] &= ~bit(i);
      if (!keep_going) return false;
    }
    return true;
  }

  // Plain depth-first walk of the subtree below the current node.
  bool walk(std::ptrdiff_t last, const GraphVisitor& visit) {
    return grow(last, [&](std::ptrdiff_t p) {
      if (!offer(visit)) return false;
      return walk(p, visit);
    });
  }

  bool offer(const GraphVisitor& visit) const {
    const Graph g = current();
    return !c_.satisfied_by(g) || visit(g);
  }

  Graph current() const {
    GraphBuilder builder(c_.n);
    for (std::size_t v = 0; v < c_.n; ++v) {
      for (Row m = rows_[v]; m; m &= m - 1) {
        const auto w = static_cast<std::size_t>(std::countr_zero(m));
        if (v < w) builder.add_edge(v, w);
      }
    }
    return builder.build();
  }

  std::vector<Row>& rows() { return rows_; }
  const std::vector<Slot>& slots() const { return slots_; }

 private:
  // Adding ij closes a cycle of length dist(i, j) + 1.
  bool girth_allows(std::size_t i, std::size_t j) const {
    if (!c_.girth_min.is_infinite() && c_.girth_min.value() <= 3) return true;
    const std::size_t radius =
        c_.girth_min.is_infinite() ? c_.n : c_.girth_min.value() - 2;
    Row ball = bit(i);
    Row frontier = bit(i);
    for (std::size_t step = 0; step < radius && frontier; ++step) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
      frontier = next & ~ball;
      ball |= next;
    }
    return (ball & bit(j)) == 0;
  }

  const SearchConstraints& c_;
  std::vector<Slot> slots_;
  std::vector<Row> rows_;
};

std::vector<Row> rows_of(const Graph& g) {
  std::vector<Row> rows(g.order(), 0);
  for (const auto& [u, v] : g.edges()) {
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  return rows;
}

}  // namespace

void SearchConstraints::validate() const {
  if (n == 0) throw GraphError("search constraints need n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw GraphError("enumeration supports at most " + std::to_string(kMaxEnumerationOrder) +
                     " vertices");
  }
}

std::string SearchConstraints::signature() const {
  return "n=" + std::to_string(n) + " girth_min=" + girth_min.to_string() +
         " min_degree=" + std::to_string(min_degree) + " connected=" + (connected ? "1" : "0");
}

bool SearchConstraints::satisfied_by(const Graph& g) const {
  if (g.order() != n) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < min_degree) return false;
  }
  if (connected && !is_connected(g)) return false;
  return girth(g) >= girth_min;
}

bool is_canonical(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) throw GraphError("graph too large for canonicity test");
  const auto rows = rows_of(g);
  return CanonicityTest(rows.data(), g.order()).canonical();
}

void enumerate_graphs(const SearchConstraints& c, const GraphVisitor& visit,
                      const std::optional<Graph>& resume_after) {
  c.validate();
  Generator gen(c);
  if (!resume_after) {
    if (gen.offer(visit)) gen.walk(-1, visit);
    return;
  }

  const Graph& mark = *resume_after;
  if (mark.order() != c.n || !is_canonical(mark) || girth(mark) < c.girth_min) {
    throw GraphError("resume point is not a node of this enumeration");
  }
  // The generation parent of a graph is the graph minus its last edge in code
  // order, so the mark's ancestors are the prefixes of its sorted slots.
  std::vector<std::size_t> chain;
  for (const auto& [u, v] : mark.edges()) chain.push_back(slot_of(u, v));
  std::sort(chain.begin(), chain.end());

  // Descend along the chain without visiting, then finish every subtree that
  // comes later in depth-first order.
  std::function<bool(std::ptrdiff_t, std::span<const std::size_t>)> resume =
      [&](std::ptrdiff_t last, std::span<const std::size_t> rest) -> bool {
    if (rest.empty()) return gen.walk(last, visit);
    const std::size_t target = rest.front();
    return gen.grow(
        last,
        [&](std::ptrdiff_t p) {
          if (static_cast<std::size_t>(p) == target) return resume(p, rest.subspan(1));
          if (!gen.offer(visit)) return false;
          return gen.walk(p, visit);
        },
        target);
  };
  resume(-1, chain);
}

std::vector<Graph> enumerate_graphs(const SearchConstraints& c) {
  std::vector<Graph> out;
  enumerate_graphs(c, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<Graph> enumerate_graphs_parallel(const SearchConstraints& c, std::size_t threads) {
  c.validate();
  constexpr std::size_t kSplitDepth = 3;

  // Segments in depth-first order: shallow nodes are visited inline, nodes at
  // the split depth become independent subtrees.
  struct Segment {
    std::vector<Row> rows;
    std::ptrdiff_t last;
    bool subtree;
    std::vector<Graph> found;
  };
  std::vector<Segment> segments;
  Generator gen(c);
  auto shallow = [&](auto&& self, std::ptrdiff_t last, std::size_t depth) -> void {
    segments.push_back({gen.rows(), last, false, {}});
    if (depth == kSplitDepth) {
      segments.back().subtree = true;
      return;
    }
    gen.grow(last, [&](std::ptrdiff_t p) {
      self(self, p, depth + 1);
      return true;
    });
  };
  shallow(shallow, -1, 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < segments.size(); k = next++) {
      Segment& s = segments[k];
      Generator local(c);
      local.rows() = s.rows;
      auto collect = [&](const Graph& g) {
        s.found.push_back(g);
        return true;
      };
      local.offer(collect);
      if (s.subtree) local.walk(s.last, collect);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(threads, 1); ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<Graph> out;
  for (auto& s : segments) {
    std::move(s.found.begin(), s.found.end(), std::back_inserter(out));
  }
  return out;
}

std::string Checkpoint::to_line() const { return emit_graph6(last) + " " + signature; }

Checkpoint Checkpoint::from_line(const std::string& line) {
  const auto space = line.find(' ');
  if (space == std::string::npos || space == 0) {
    throw std::runtime_error("checkpoint line must be '<graph6> <signature>'");
  }
  return Checkpoint{parse_graph6(line.substr(0, space)), line.substr(space + 1)};
}

}  // namespace groot
