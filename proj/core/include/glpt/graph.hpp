#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glpt/bitset.hpp"

namespace glpt {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 512), stored
/// as one neighbour bitset per vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on loops, out-of-range endpoints or n outside
  /// [0, 512]. Repeated edges are merged.
  Graph(int n, std::span<const Edge> edges, std::string label = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string label = {})
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(label)) {}

  /// Adopts adjacency rows; verifies symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> adj, std::string label = {});

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbors(v).count(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).test(v); }
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  VertexSet vertices() const { return VertexSet::prefix(order()); }
  int max_degree() const;
  int min_degree() const;

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, renumbered in ascending order of old id.
  /// When `old_ids` is given it receives new id -> old id.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* old_ids = nullptr) const;
  Graph complement() const;

  /// Vertices reachable from v using only vertices of `within` (v included
  /// even if it is not in `within`).
  VertexSet component_of(Vertex v, const VertexSet& within) const;
  VertexSet component_of(Vertex v) const { return component_of(v, vertices()); }
  std::vector<VertexSet> components(const VertexSet& within) const;
  bool is_connected() const;
  bool is_regular() const { return order() == 0 || max_degree() == min_degree(); }

  /// True iff `set` induces a complete graph.
  bool is_clique(const VertexSet& set) const;
  bool is_independent(const VertexSet& set) const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
  int edge_count_ = 0;
  std::string label_;
};

}  // namespace glpt
