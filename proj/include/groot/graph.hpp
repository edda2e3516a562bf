#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groot {

using Vertex = std::size_t;

/// Bitset over the vertex indices of one graph. Sets taken from the same
/// graph always share a size, so the boost binary operators apply directly.
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Unordered edge stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

VertexSet make_set(std::size_t n, std::initializer_list<Vertex> members);
VertexSet make_set(std::size_t n, std::span<const Vertex> members);
std::vector<Vertex> members(const VertexSet& set);

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is open (a vertex is never its own neighbour) and kept twice:
 * as sorted neighbour lists for iteration and as bitset rows for the set
 * algebra used by the reconstruction formulas. Values are immutable once
 * built; use GraphBuilder or from_edges to create them.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws GraphError on self-loops or out-of-range endpoints. Duplicate
  /// edges are merged.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges);

  std::size_t order() const { return lists_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const;
  const VertexSet& neighbor_set(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Same graph with vertex v renamed to image[v].
  Graph relabeled(std::span<const Vertex> image) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.lists_ == b.lists_;
  }

  /// Orders graphs by vertex count, then lexicographically by edge list.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> lists_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t order() const { return rows_.size(); }

  Graph build() const;

 private:
  std::vector<VertexSet> rows_;
};

/// Shortest cycle length, or Infinite for forests.
class Girth {
 public:
  static Girth infinite() { return Girth{}; }
  static Girth finite(std::size_t length);

  bool is_infinite() const { return !length_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::size_t value() const;

  bool at_least(std::size_t bound) const { return is_infinite() || *length_ >= bound; }

  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;
  friend std::strong_ordering operator<=>(const Girth& a, const Girth& b);

 private:
  Girth() = default;
  std::optional<std::size_t> length_;
};

/// A permutation of 0..n-1. Used both for isomorphism witnesses and for the
/// involution pairing two square roots.
class VertexMap {
 public:
  VertexMap() = default;
  /// Throws GraphError unless `image` is a permutation.
  explicit VertexMap(std::vector<Vertex> image);

  static VertexMap identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  const std::vector<Vertex>& image() const { return image_; }

  VertexMap inverse() const;
  /// (this ∘ inner)(v) = this(inner(v)).
  VertexMap compose(const VertexMap& inner) const;

  bool is_identity() const;
  bool is_involution() const;

  /// True iff uv ∈ E(from) ⟺ m(u)m(v) ∈ E(to).
  bool is_isomorphism(const Graph& from, const Graph& to) const;

  /// Cycle notation skipping fixed points, e.g. "(1 2)(4 5)"; "()" for the
  /// identity.
  std::string cycle_notation() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Vertex> image_;
};

}  // namespace groot
