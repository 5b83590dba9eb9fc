#pragma once

#include <optional>
#include <vector>

#include "glpt/graph.hpp"

namespace glpt {

/// Occurrence of H as an induced subgraph of G: entry i is the image of
/// H-vertex i. std::nullopt means G is H-free.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h);

inline bool is_free_of(const Graph& g, const Graph& h) { return !find_induced(g, h).has_value(); }

/// Acyclic with maximum degree at most 2.
bool is_linear_forest(const Graph& h);

}  // namespace glpt
