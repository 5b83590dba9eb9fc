#pragma once

#include <string_view>
#include <vector>

#include "glpt/graph.hpp"

namespace glpt {

// Every builder checks its own postconditions (vertex counts, degree audit,
// girth where stated) and throws IntegrityError if one fails. Parameter
// violations throw DomainError.

/// "petersen": outer cycle 0-4, spokes i~i+5, inner pentagram 5+i~5+(i+2)%5.
/// "g0": Petersen minus vertex 0, survivors renumbered 1..9 -> 0..8, with
/// pendant vertices 9, 10, 11 on the former neighbours 0, 3, 4.
Graph canonical_graph(std::string_view name);

/// Pendant vertices of g0.
inline constexpr Vertex kG0Pendants[] = {9, 10, 11};

/// g0 with each pendant edge replaced by a path of length q and every other
/// edge by a path of length p. Subdivision vertices are appended edge by
/// edge (ascending edge order), each chain running from the smaller end.
/// Requires p >= 1 and q > 15p.
Graph g1(int p, int q);

/// g1(p, q) with every cubic vertex w replaced by a triangle. w keeps its id
/// for the edge to its smallest neighbour; two new ids (appended in
/// ascending order of w) take the other two edges in ascending order.
Graph g2(int p, int q);

/// Star K_{1,k+2} with the centre blown up to a k-clique S = 0..k-1 and leaf
/// i (0 <= i < k+2) to a t-clique X_i = k+i*t .. k+(i+1)*t-1. The first k
/// vertices of X_i form Y_i, completely joined to S. Requires 1 <= k <= t.
Graph star_blowup(int k, int t);

/// Two copies of K_{k+1} minus an edge and one copy of K_{k+1} minus a
/// matching on k-4 vertices (copies at offsets 0, k+1, 2k+2, the missing
/// edges being {0,1}, {0,1} and {0,1},{2,3},...), plus apex 3k+3 joined to
/// the k vertices of degree k-1. Requires even k >= 6.
Graph ham_reg(int k);

/// K_{t,t+2} with parts A = 0..t-1 and B = t..2t+1, optionally minus the
/// matching {i, t+i}.
Graph bipartite_gadget(int t, bool minus_matching);

/// Disjoint union of paths with the given orders, laid out consecutively.
Graph linear_forest(const std::vector<int>& orders);

/// Distinct component-order multisets (each sorted descending) of induced
/// linear forests on m vertices; the list is sorted descending.
std::vector<std::vector<int>> enumerate_induced_linear_forests(const Graph& g, int m);

}  // namespace glpt
