#pragma once

#include <vector>

#include "glpt/graph.hpp"
#include "glpt/longest_path.hpp"

namespace glpt {

/// Vertices lying on every longest path. Computed by deletion: v qualifies
/// iff G - v has no path of the longest order. Throws DomainError when g is
/// disconnected.
VertexSet gallai_vertices(const Graph& g);

struct LptResult {
  int lpt = 0;
  VertexSet witness;  // lexicographically least minimum transversal
};

/// Minimum number of vertices meeting every longest path, with the
/// lexicographically least optimal witness. Throws ResourceError when the
/// longest-path family exceeds limits.max_paths.
LptResult lpt_exact(const Graph& g, SearchLimits limits = {});

/// Minimum hitting set of an explicit family over vertices; exposed for
/// testing. Empty family gives 0.
LptResult minimum_hitting_set(const std::vector<VertexSet>& family);

/// Ids (into block_cut_tree(g).blocks) of blocks containing an edge of
/// every longest path.
std::vector<int> special_blocks(const Graph& g, SearchLimits limits = {});

struct TransversalReport {
  VertexSet gallai;
  int lpt = 0;
  VertexSet witness;
  std::vector<int> special_blocks;
};

TransversalReport transversal_report(const Graph& g, SearchLimits limits = {});

}  // namespace glpt
