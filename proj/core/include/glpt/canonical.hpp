#pragma once

#include <cstdint>
#include <vector>

#include "glpt/graph.hpp"

namespace glpt {

/// Isomorphism-invariant code of a graph with at most 11 vertices: the
/// largest upper-triangle bit string (column-major, first pair in the top
/// bit) over relabelings that respect an equitable colour refinement.
/// Throws DomainError for larger graphs.
std::uint64_t canonical_code(const Graph& g);

/// The labelling that attains canonical_code: entry p is the vertex placed
/// at position p.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// Rebuilds the graph with n vertices from a canonical code.
Graph graph_from_code(int n, std::uint64_t code);

}  // namespace glpt
