#include "glpt/graph.hpp"

#include <algorithm>
#include <string>

#include "glpt/errors.hpp"

namespace glpt {

Graph::Graph(int n, std::span<const Edge> edges, std::string label) : label_(std::move(label)) {
  if (n < 0 || n > kMaxVertices)
    throw DomainError("vertex count " + std::to_string(n) + " outside [0, 512]");
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
  }
  for (const auto& row : adj_) edge_count_ += row.count();
  edge_count_ /= 2;
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj, std::string label) {
  const int n = static_cast<int>(adj.size());
  if (n > kMaxVertices) throw DomainError("vertex count " + std::to_string(n) + " exceeds 512");
  const VertexSet all = VertexSet::prefix(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const auto& row = adj[static_cast<std::size_t>(v)];
    if (row.test(v)) throw DomainError("loop at vertex " + std::to_string(v));
    if (!row.is_subset_of(all)) throw DomainError("neighbour id out of range");
    for (int u : row)
      if (!adj[static_cast<std::size_t>(u)].test(v))
        throw DomainError("asymmetric adjacency between " + std::to_string(u) + " and " +
                          std::to_string(v));
    degree_sum += row.count();
  }
  Graph g;
  g.adj_ = std::move(adj);
  g.edge_count_ = degree_sum / 2;
  g.label_ = std::move(label);
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& row : adj_) best = std::max(best, row.count());
  return best;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int best = order();
  for (const auto& row : adj_) best = std::min(best, row.count());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* old_ids) const {
  std::vector<Vertex> ids;
  std::vector<int> new_id(static_cast<std::size_t>(order()), -1);
  for (int v : keep) {
    if (v >= order()) break;
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(ids.size());
    ids.push_back(v);
  }
  std::vector<VertexSet> adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (int u : neighbors(ids[i]) & keep) adj[i].set(new_id[static_cast<std::size_t>(u)]);
  Graph g = from_adjacency(std::move(adj));
  if (old_ids) *old_ids = std::move(ids);
  return g;
}

Graph Graph::complement() const {
  const VertexSet all = vertices();
  std::vector<VertexSet> adj(adj_.size());
  for (int v = 0; v < order(); ++v) {
    adj[static_cast<std::size_t>(v)] = all - neighbors(v);
    adj[static_cast<std::size_t>(v)].reset(v);
  }
  return from_adjacency(std::move(adj), label_.empty() ? label_ : label_ + "-complement");
}

VertexSet Graph::component_of(Vertex v, const VertexSet& within) const {
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (frontier.any()) {
    VertexSet next;
    for (int u : frontier) next |= neighbors(u);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet left = within & vertices();
  while (left.any()) {
    VertexSet c = component_of(left.first(), within);
    left -= c;
    out.push_back(c);
  }
  return out;
}

bool Graph::is_connected() const {
  if (order() == 0) return false;
  return component_of(0).count() == order();
}

bool Graph::is_clique(const VertexSet& set) const {
  for (int v : set) {
    VertexSet rest = set;
    rest.reset(v);
    if (!rest.is_subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_independent(const VertexSet& set) const {
  for (int v : set)
    if (neighbors(v).intersects(set)) return false;
  return true;
}

Graph Graph::with_label(std::string label) const {
  Graph g = *this;
  g.label_ = std::move(label);
  return g;
}

}  // namespace glpt
