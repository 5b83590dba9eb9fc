#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glpt/graph.hpp"

namespace glpt {

/// Simple path stored in canonical orientation: the lexicographically
/// smaller of its vertex sequence and the reversal.
class Path {
 public:
  Path() = default;

  /// Validates against the host (distinct vertices, consecutive ones
  /// adjacent, non-empty); throws IntegrityError otherwise.
  static Path make(const Graph& g, std::vector<Vertex> verts);

  const std::vector<Vertex>& vertices() const { return verts_; }
  int order() const { return static_cast<int>(verts_.size()); }
  int length() const { return order() - 1; }
  Vertex front() const { return verts_.front(); }
  Vertex back() const { return verts_.back(); }
  bool is_end(Vertex v) const { return !verts_.empty() && (front() == v || back() == v); }
  VertexSet vertex_set() const { return VertexSet::of(verts_); }
  bool contains(Vertex v) const { return vertex_set().test(v); }

  /// Vertex sequence starting at `end`, which must be an endpoint.
  std::vector<Vertex> oriented_from(Vertex end) const;

  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> verts_;
};

/// Checks the path invariants for an oriented vertex sequence.
bool is_path(const Graph& g, std::span<const Vertex> verts);

/// Endpoint constraints: none (fiber), start only (x-fiber) or both
/// (xy-fiber). A query with only `end` is treated as an x-fiber from `end`.
struct FiberQuery {
  std::optional<Vertex> start;
  std::optional<Vertex> end;

  static FiberQuery any() { return {}; }
  static FiberQuery from(Vertex x) { return {x, std::nullopt}; }
  static FiberQuery between(Vertex x, Vertex y) { return {x, y}; }
};

struct SearchLimits {
  std::size_t max_paths = 1'000'000;
};

/// Maximum number of vertices over paths meeting the query. Throws
/// DomainError when g is disconnected or an endpoint is invalid.
int longest_path_order(const Graph& g, const FiberQuery& q = {});

/// Every longest path under the query, canonical orientation, sorted.
/// Throws ResourceError when more than limits.max_paths exist.
std::vector<Path> enumerate_longest_paths(const Graph& g, const FiberQuery& q = {},
                                          SearchLimits limits = {});

/// First longest path met by the ascending-id search under the query.
Path fiber(const Graph& g, const FiberQuery& q = {});

enum class HamiltonKind { path, cycle };

struct HamiltonResult {
  bool found = false;
  std::vector<Vertex> witness;  // cycle witnesses omit the closing repeat
};

/// Cycle queries need n >= 3 (smaller graphs report false).
HamiltonResult hamiltonian(const Graph& g, HamiltonKind kind);

// Routes below work on G[allowed] with no connectivity requirement; the
// answer is the best over all components. Queried endpoints must be allowed.

/// Held-Karp subset DP route when |allowed| <= 24, pruned search otherwise.
int longest_order_within(const Graph& g, const VertexSet& allowed, const FiberQuery& q = {});

/// Subset DP over ends; throws DomainError when |allowed| > 24.
int held_karp_order(const Graph& g, const VertexSet& allowed, const FiberQuery& q = {});

/// Depth-first search with reachability and block-tree pruning.
int search_order(const Graph& g, const VertexSet& allowed, const FiberQuery& q = {});

/// First path (ascending-id search order) of exactly `order` vertices, oriented
/// from the query's start when one is given.
std::optional<std::vector<Vertex>> find_path_of_order(const Graph& g, const VertexSet& allowed,
                                                      int order, const FiberQuery& q = {});

/// All paths of exactly `order` vertices in G[allowed], canonical and sorted.
std::vector<Path> enumerate_paths_of_order(const Graph& g, const VertexSet& allowed, int order,
                                           const FiberQuery& q = {}, SearchLimits limits = {});

}  // namespace glpt
