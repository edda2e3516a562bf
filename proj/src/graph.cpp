#include "groot/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace groot {

VertexSet make_set(std::size_t n, std::initializer_list<Vertex> members) {
  return make_set(n, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet make_set(std::size_t n, std::span<const Vertex> members) {
  VertexSet set(n);
  for (Vertex v : members) {
    if (v >= n) throw GraphError("vertex " + std::to_string(v) + " out of range");
    set.set(v);
  }
  return set;
}

std::vector<Vertex> members(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

Graph::Graph(std::size_t order) : lists_(order), rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder builder(order);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return builder.build();
}

Graph Graph::from_edges(std::size_t order, std::initializer_list<Edge> edges) {
  return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return lists_[v];
}

const VertexSet& Graph::neighbor_set(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].test(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : lists_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != order()) throw GraphError("relabeling has wrong length");
  GraphBuilder builder(order());
  for (const auto& [u, v] : edges()) builder.add_edge(image[u], image[v]);
  return builder.build();
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  const auto ea = a.edges();
  const auto eb = b.edges();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

// ---------------------------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t order) : rows_(order, VertexSet(order)) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for graph of order " + std::to_string(order()));
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return u < order() && v < order() && rows_[u].test(v);
}

Graph GraphBuilder::build() const {
  Graph g(order());
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < order(); ++v) {
    g.rows_[v] = rows_[v];
    g.lists_[v] = members(rows_[v]);
    degree_sum += g.lists_[v].size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

// ---------------------------------------------------------------------------

Girth Girth::finite(std::size_t length) {
  if (length < 3) throw GraphError("a finite girth is at least 3");
  Girth g;
  g.length_ = length;
  return g;
}

std::size_t Girth::value() const {
  if (!length_) throw std::logic_error("girth is infinite");
  return *length_;
}

std::string Girth::to_string() const {
  return length_ ? std::to_string(*length_) : std::string("inf");
}

std::strong_ordering operator<=>(const Girth& a, const Girth& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.length_ <=> *b.length_;
}

// ---------------------------------------------------------------------------

VertexMap::VertexMap(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Vertex v : image_) {
    if (v >= image_.size() || seen[v]) throw GraphError("vertex map is not a permutation");
    seen[v] = true;
  }
}

VertexMap VertexMap::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  return VertexMap(std::move(image));
}

VertexMap VertexMap::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return VertexMap(std::move(inv));
}

VertexMap VertexMap::compose(const VertexMap& inner) const {
  if (inner.size() != size()) throw GraphError("composing maps of different sizes");
  std::vector<Vertex> out(size());
  for (Vertex v = 0; v < size(); ++v) out[v] = image_[inner.image_[v]];
  return VertexMap(std::move(out));
}

bool VertexMap::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

bool VertexMap::is_involution() const {
  for (Vertex v = 0; v < image_.size(); ++v) {
    if (image_[image_[v]] != v) return false;
  }
  return true;
}

bool VertexMap::is_isomorphism(const Graph& from, const Graph& to) const {
  if (from.order() != size() || to.order() != size()) return false;
  if (from.edge_count() != to.edge_count()) return false;
  // Equal edge counts plus edge preservation make the induced edge map a bijection.
  for (const auto& [u, v] : from.edges()) {
    if (!to.adjacent(image_[u], image_[v])) return false;
  }
  return true;
}

std::string VertexMap::cycle_notation() const {
  std::ostringstream out;
  std::vector<bool> done(image_.size(), false);
  bool any = false;
  for (Vertex start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    any = true;
    out << '(';
    Vertex v = start;
    bool first = true;
    while (!done[v]) {
      done[v] = true;
      if (!first) out << ' ';
      out << v;
      first = false;
      v = image_[v];
    }
    out << ')';
  }
  return any ? out.str() : std::string("()");
}

}  // namespace groot
