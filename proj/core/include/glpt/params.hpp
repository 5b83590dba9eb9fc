#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "glpt/graph.hpp"

namespace glpt {

/// Maximum independent set by branch-and-bound on cliques of the complement,
/// bounded by greedy sequential colouring (vertices taken in descending
/// degree order).
VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Vertex connectivity via Menger: minimum over non-adjacent pairs of the
/// number of internally disjoint paths. K_n gives n-1, disconnected graphs
/// give 0. Throws DomainError for n < 2.
int connectivity(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths, s and t
/// non-adjacent; stops counting once `limit` is reached.
int disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit);

struct InfiniteGirth {
  friend bool operator==(InfiniteGirth, InfiniteGirth) = default;
};

/// Shortest cycle length, or InfiniteGirth for forests.
class Girth {
 public:
  static Girth infinite() { return Girth(InfiniteGirth{}); }
  static Girth finite(int length) { return Girth(length); }

  bool is_infinite() const { return std::holds_alternative<InfiniteGirth>(value_); }
  /// Throws std::bad_variant_access when infinite.
  int length() const { return std::get<int>(value_); }
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(length()); }

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  explicit Girth(std::variant<int, InfiniteGirth> v) : value_(v) {}
  std::variant<int, InfiniteGirth> value_;
};

Girth girth(const Graph& g);

/// Blocks (maximal 2-connected subgraphs, bridges as 2-vertex blocks,
/// an isolated vertex as a 1-vertex block) and the cut vertices joining them.
struct BlockCutTree {
  std::vector<VertexSet> blocks;  // sorted lexicographically
  VertexSet cut_vertices;
  std::vector<std::pair<Vertex, int>> incidence;  // (cut vertex, block id)

  /// Id of the block containing edge uv, or -1 when uv is not an edge.
  int block_of_edge(const Graph& g, Vertex u, Vertex v) const;
  /// Edge count of block b in its host.
  int edge_count(const Graph& g, int b) const;
};

/// Throws DomainError when g is disconnected.
BlockCutTree block_cut_tree(const Graph& g);

struct HallMatching {
  std::vector<Edge> edges;  // (s, t) with s in S, t in T
};

/// Witness that no matching saturates S: |N(subset) ∩ T| < |subset|.
struct HallViolator {
  VertexSet subset;
  VertexSet neighborhood;
};

using HallOutcome = std::variant<HallMatching, HallViolator>;

/// Matching of the induced (S, T)-bigraph saturating S, or a Hall violator.
/// Throws DomainError when S and T overlap.
HallOutcome hall_matching(const Graph& g, const VertexSet& s, const VertexSet& t);

struct ParamReport {
  int alpha = 0;
  int kappa = 0;
  int delta_max = 0;
  int delta_min = 0;
  Girth girth = Girth::infinite();
};

/// kappa is 0 for a single vertex (no k >= 1 satisfies |V| > k).
ParamReport param_report(const Graph& g);

}  // namespace glpt
