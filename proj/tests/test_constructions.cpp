#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "doctest.h"
#include "glpt/constructions.hpp"
#include "glpt/errors.hpp"
#include "glpt/induced.hpp"
#include "glpt/longest_path.hpp"
#include "glpt/params.hpp"
#include "glpt/transversal.hpp"
#include "oracles.hpp"

using namespace glpt;

namespace {

int leaves(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == 1;
  return count;
}

// Component-order multisets of induced linear forests on m vertices, by
// trying every m-subset.
std::set<std::vector<int>, std::greater<>> linear_forest_shapes(const Graph& g, int m) {
  std::set<std::vector<int>, std::greater<>> out;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    VertexSet keep;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) keep.set(v);
    const Graph h = g.induced(keep);
    const auto comps = h.components(h.vertices());
    if (h.max_degree() > 2 || h.size() != h.order() - static_cast<int>(comps.size())) continue;
    std::vector<int> orders;
    for (const auto& c : comps) orders.push_back(c.count());
    std::sort(orders.rbegin(), orders.rend());
    out.insert(orders);
  }
  return out;
}

}  // namespace

TEST_CASE("Petersen graph") {
  const Graph g = canonical_graph("petersen");
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  CHECK(g.is_regular());
  CHECK(g.max_degree() == 3);
  CHECK(oracle::girth(g) == 5);
  CHECK_THROWS_AS(canonical_graph("heawood"), DomainError);
}

TEST_CASE("g0") {
  const Graph g = canonical_graph("g0");
  CHECK(g.order() == 12);
  CHECK(g.size() == 15);
  CHECK(leaves(g) == 3);
  for (Vertex r : kG0Pendants) CHECK(g.degree(r) == 1);
  CHECK(oracle::girth(g) == 5);
  CHECK(independence_number(g) == 6);
  CHECK(connectivity(g) == 1);
  CHECK(longest_path_order(g) == 10);
}

TEST_CASE("subdivided g0 and its triangle blow-up") {
  const Graph a = g1(1, 16);
  CHECK(a.order() == 57);
  CHECK(leaves(a) == 3);
  CHECK(a.max_degree() == 3);
  CHECK(girth(a).length() == 5);
  CHECK(a.is_connected());
  const Graph b = g2(1, 16);
  CHECK(b.order() == 75);
  CHECK(b.max_degree() == 3);
  CHECK(b.is_connected());
  CHECK(is_free_of(b, Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(g1(2, 31).order() == 12 + 12 * 1 + 3 * 30);
  CHECK_THROWS_AS(g1(1, 15), DomainError);
  CHECK_THROWS_AS(g1(0, 16), DomainError);
  CHECK_THROWS_AS(g2(1, 15), DomainError);
}

TEST_CASE("star blow-up") {
  for (int k = 1; k <= 3; ++k)
    for (int t = k; t <= k + 2; ++t) {
      const Graph g = star_blowup(k, t);
      CHECK(g.order() == k + (k + 2) * t);
      CHECK(connectivity(g) == k);
      // k + 3 cliques cover V(G); one vertex outside Y_i per X_i plus S reach it when t > k.
      CHECK(independence_number(g) == (t > k ? k + 3 : k + 2));
      CHECK(g.max_degree() == std::max((k - 1) + (k + 2) * k, (t - 1) + k));
    }
  CHECK(gallai_vertices(star_blowup(1, 4)) == VertexSet::single(0));
  CHECK(gallai_vertices(star_blowup(2, 3)) == VertexSet::prefix(2));
  CHECK_THROWS_AS(star_blowup(3, 2), DomainError);
  CHECK_THROWS_AS(star_blowup(0, 2), DomainError);
}

TEST_CASE("regular graph without a Hamiltonian path") {
  const Graph g = ham_reg(6);
  CHECK(g.order() == 22);
  CHECK(g.is_regular());
  CHECK(g.max_degree() == 6);
  CHECK(g.is_connected());
  CHECK(independence_number(g) == 6);
  CHECK_FALSE(hamiltonian(g, HamiltonKind::path).found);
  const Graph h = ham_reg(8);
  CHECK(h.is_regular());
  CHECK(h.max_degree() == 8);
  CHECK_THROWS_AS(ham_reg(7), DomainError);
  CHECK_THROWS_AS(ham_reg(4), DomainError);
}

TEST_CASE("bipartite gadgets") {
  for (int t = 2; t <= 4; ++t) {
    const Graph full = bipartite_gadget(t, false);
    CHECK(full.max_degree() == t + 2);
    CHECK(is_free_of(full, linear_forest({3, 1})));
    CHECK(gallai_vertices(full) == VertexSet::prefix(t));
    const Graph minus = bipartite_gadget(t, true);
    CHECK(minus.max_degree() == t + 1);
    CHECK(is_free_of(minus, linear_forest({2, 1, 1})));
    CHECK(longest_path_order(minus) == minus.order() - 1);
    CHECK(gallai_vertices(minus) == VertexSet::prefix(t));
  }
}

TEST_CASE("linear forests") {
  const Graph f = linear_forest({3, 1, 2});
  CHECK(f.order() == 6);
  CHECK(f.size() == 3);
  CHECK(is_linear_forest(f));
  CHECK(f.components(f.vertices()).size() == 3);
  CHECK_THROWS_AS(linear_forest({2, 0}), DomainError);
}

TEST_CASE("induced linear forests of g0") {
  const Graph g = canonical_graph("g0");
  const auto nine = enumerate_induced_linear_forests(g, 9);
  CHECK(nine == std::vector<std::vector<int>>{{7, 1, 1}, {3, 3, 3}});
  CHECK(enumerate_induced_linear_forests(g, 10).empty());
  for (int m = 1; m <= 10; ++m) {
    const auto shapes = linear_forest_shapes(g, m);
    CHECK(enumerate_induced_linear_forests(g, m) == std::vector<std::vector<int>>(shapes.begin(), shapes.end()));
  }
}
