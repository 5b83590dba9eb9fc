#include <algorithm>
#include <random>

#include "doctest.h"
#include "glpt/constructions.hpp"
#include "glpt/errors.hpp"
#include "glpt/harness.hpp"
#include "glpt/longest_path.hpp"
#include "oracles.hpp"
#include "suites.hpp"

using namespace glpt;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

std::vector<std::vector<Vertex>> as_lists(const std::vector<Path>& paths) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : paths) out.push_back(p.vertices());
  return out;
}

// Longest order among oracle paths meeting the endpoint constraints.
int oracle_order(const std::vector<std::vector<Vertex>>& all, std::optional<Vertex> x, std::optional<Vertex> y) {
  int best = 0;
  for (const auto& p : all) {
    const Vertex a = p.front(), b = p.back();
    const bool ok = (!x && !y) || (x && !y && (a == *x || b == *x)) ||
                    (x && y && ((a == *x && b == *y) || (a == *y && b == *x)));
    if (ok) best = std::max(best, static_cast<int>(p.size()));
  }
  return best;
}

std::vector<Graph> mixed_graphs() {
  std::vector<Graph> out = oracle::corpus("gen:6");
  std::mt19937 rng(23);
  for (int i = 0; i < 150; ++i) out.push_back(oracle::random_graph(rng, 7 + i % 4, 0.22 + 0.02 * (i % 6), true));
  return out;
}

}  // namespace

TEST_CASE("longest path order examples") {
  for (int n = 1; n <= 9; ++n) CHECK(longest_path_order(complete(n)) == n);
  CHECK(longest_path_order(canonical_graph("g0")) == 10);
  CHECK(longest_path_order(star_blowup(1, 3)) == 7);
  CHECK_THROWS_AS(longest_path_order(Graph(2, {})), DomainError);
  CHECK_THROWS_AS(longest_path_order(path_graph(3), FiberQuery::from(3)), DomainError);
}

TEST_CASE("enumeration examples") {
  const auto p = enumerate_longest_paths(path_graph(6));
  REQUIRE(p.size() == 1);
  CHECK(p[0].vertices() == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(enumerate_longest_paths(cycle(5)).size() == 5);

  const Graph g0 = canonical_graph("g0");
  const VertexSet pendants = VertexSet::of(std::vector<int>(std::begin(kG0Pendants), std::end(kG0Pendants)));
  const auto family = enumerate_longest_paths(g0);
  CHECK(family.size() == 42);
  for (const Path& path : family) {
    const VertexSet missed = g0.vertices() - path.vertex_set();
    CHECK(missed.count() == 2);
    CHECK(missed.intersects(pendants));
  }
  CHECK_THROWS_AS(enumerate_longest_paths(complete(6), {}, SearchLimits{10}), ResourceError);
}

TEST_CASE("fiber examples") {
  CHECK(fiber(path_graph(5), FiberQuery::from(0)).order() == 5);
  CHECK(fiber(path_graph(5), FiberQuery::from(2)).order() == 3);
  CHECK(fiber(cycle(5), FiberQuery::between(0, 1)).order() == 5);
  const Graph g0 = canonical_graph("g0");
  const Path f = fiber(g0, FiberQuery::from(kG0Pendants[0]));
  CHECK(f.order() == 10);
  CHECK(f.is_end(kG0Pendants[0]));
  const auto walk = f.oriented_from(kG0Pendants[0]);
  CHECK(walk.front() == kG0Pendants[0]);
  CHECK(suite::walk_is_path(g0, walk));
}

TEST_CASE("Hamiltonian examples") {
  const Graph petersen = canonical_graph("petersen");
  CHECK_FALSE(hamiltonian(petersen, HamiltonKind::cycle).found);
  const auto hp = hamiltonian(petersen, HamiltonKind::path);
  REQUIRE(hp.found);
  CHECK(suite::walk_is_path(petersen, hp.witness));
  CHECK(hp.witness.size() == 10);
  const auto k4 = hamiltonian(complete(4), HamiltonKind::cycle);
  REQUIRE(k4.found);
  CHECK(suite::walk_is_path(complete(4), k4.witness));
  CHECK_FALSE(hamiltonian(ham_reg(6), HamiltonKind::path).found);
  CHECK_FALSE(hamiltonian(complete(2), HamiltonKind::cycle).found);
}

TEST_CASE("Hamiltonian queries agree with permutation search") {
  for (const Graph& g : oracle::corpus("gen:7")) {
    const auto p = hamiltonian(g, HamiltonKind::path);
    const auto c = hamiltonian(g, HamiltonKind::cycle);
    CHECK(p.found == oracle::hamiltonian_path(g));
    CHECK(c.found == oracle::hamiltonian_cycle(g));
    if (p.found) CHECK((suite::walk_is_path(g, p.witness) && static_cast<int>(p.witness.size()) == g.order()));
    if (c.found) CHECK(g.adjacent(c.witness.front(), c.witness.back()));
  }
}

TEST_CASE("longest paths and fibers agree with the all-paths oracle") {
  for (const Graph& g : mixed_graphs()) {
    const auto all = oracle::all_paths(g);
    const auto expected = oracle::longest_paths(g);
    CHECK(longest_path_order(g) == static_cast<int>(expected.front().size()));
    CHECK(as_lists(enumerate_longest_paths(g)) == expected);
    const int n = g.order();
    for (Vertex x = 0; x < n; ++x) {
      const int from = longest_path_order(g, FiberQuery::from(x));
      CHECK(from == oracle_order(all, x, std::nullopt));
      CHECK(fiber(g, FiberQuery::from(x)).order() == from);
      for (Vertex y = x + 1; y < n; ++y) {
        const int between = longest_path_order(g, FiberQuery::between(x, y));
        CHECK(between == oracle_order(all, x, y));
        CHECK(between <= from);
      }
    }
  }
}

TEST_CASE("paths of a fixed order agree with the oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.3, false);
    const auto all = oracle::all_paths(g);
    for (int order = 1; order <= 8; ++order) {
      std::vector<std::vector<Vertex>> expected;
      for (const auto& p : all)
        if (static_cast<int>(p.size()) == order) expected.push_back(p);
      CHECK(as_lists(enumerate_paths_of_order(g, g.vertices(), order)) == expected);
      const auto first = find_path_of_order(g, g.vertices(), order);
      CHECK(first.has_value() == !expected.empty());
      if (first) CHECK(suite::walk_is_path(g, *first));
    }
  }
}

TEST_CASE("subset DP and pruned search agree") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 10 + trial % 21;
    const Graph g = oracle::random_graph(rng, n, 2.6 / n + 0.1 * (trial % 3), false);
    VertexSet allowed;
    for (int v = 0; v < n; ++v)
      if (allowed.count() < 24 && rng() % 4 != 0) allowed.set(v);
    const auto ids = allowed.to_vector();
    const Vertex x = ids[rng() % ids.size()];
    const Vertex y = ids[rng() % ids.size()];
    CHECK(held_karp_order(g, allowed) == search_order(g, allowed));
    CHECK(held_karp_order(g, allowed, FiberQuery::from(x)) == search_order(g, allowed, FiberQuery::from(x)));
    if (x != y)
      CHECK(held_karp_order(g, allowed, FiberQuery::between(x, y)) ==
            search_order(g, allowed, FiberQuery::between(x, y)));
  }
  CHECK_THROWS_AS(held_karp_order(complete(25), complete(25).vertices()), DomainError);
}

TEST_CASE("any two longest paths share a vertex") {
  // Two disjoint paths of order L need 2L <= n vertices.
  std::size_t checked = 0;
  auto check = [&](const Graph& g) {
    const int len = longest_path_order(g);
    if (2 * len > g.order()) return;
    ++checked;
    const auto family = enumerate_longest_paths(g);
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j)
        CHECK(family[i].vertex_set().intersects(family[j].vertex_set()));
  };
  for (const Graph& g : oracle::corpus("gen:8")) check(g);
  for (const auto& item : ingest(GLPT_CORPUS_DIR "/connected9.g6", true)) check(item.graph);
  CHECK(checked > 0);
}
