#include "glpt/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "glpt/errors.hpp"
#include "glpt/params.hpp"

namespace glpt {
namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw IntegrityError("construction postcondition failed: " + what);
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
  for (int u = first; u < first + count; ++u)
    for (int v = u + 1; v < first + count; ++v) edges.emplace_back(u, v);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  Graph g(10, e, "petersen");
  ensure(g.size() == 15 && g.is_regular() && g.max_degree() == 3, "petersen is cubic with 15 edges");
  return g;
}

Graph g0() {
  const Graph p = petersen();
  VertexSet keep = p.vertices();
  keep.reset(0);
  std::vector<Edge> e = p.induced(keep).edges();
  int pendant = 9;
  for (int nb : p.neighbors(0)) e.emplace_back(nb - 1, pendant++);
  Graph g(12, e, "g0");
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  ensure(g.size() == 15 && leaves == 3 && g.max_degree() == 3, "g0 has 15 edges and 3 leaves");
  return g;
}

void check_subdivision(int p, int q) {
  if (p < 1) throw DomainError("p must be at least 1");
  if (q <= 15 * p) throw DomainError("q must exceed 15p");
}

std::string params_label(const char* name, int a, int b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Graph canonical_graph(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "g0") return g0();
  throw DomainError("unknown canonical graph '" + std::string(name) + "'");
}

Graph g1(int p, int q) {
  check_subdivision(p, q);
  const Graph base = g0();
  const VertexSet pendants = VertexSet::of(kG0Pendants);
  std::vector<Edge> e;
  int next = base.order();
  for (auto [u, v] : base.edges()) {
    const int len = pendants.test(u) || pendants.test(v) ? q : p;
    int prev = u;
    for (int i = 1; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  Graph g(next, e, params_label("g1", p, q));
  ensure(g.order() == 12 + 12 * (p - 1) + 3 * (q - 1), "g1 vertex count");
  ensure(g.max_degree() == 3 && g.is_connected(), "g1 is connected and subcubic");
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  ensure(leaves == 3, "g1 has 3 leaves");
  const Girth gi = girth(g);
  ensure(!gi.is_infinite() && gi.length() == 5 * p, "g1 girth is 5p");
  return g;
}

Graph g2(int p, int q) {
  const Graph base = g1(p, q);
  const int n = base.order();
  std::vector<int> cubic;
  for (int v = 0; v < n; ++v)
    if (base.degree(v) == 3) cubic.push_back(v);
  // port[v][j]: vertex of T_v receiving the edge to v's j-th smallest neighbour.
  std::vector<std::vector<int>> port(static_cast<std::size_t>(n));
  int next = n;
  std::vector<Edge> e;
  for (int w : cubic) {
    port[w] = {w, next, next + 1};
    e.emplace_back(w, next);
    e.emplace_back(w, next + 1);
    e.emplace_back(next, next + 1);
    next += 2;
  }
  auto endpoint = [&](int v, int other) {
    if (port[v].empty()) return v;
    const auto nbrs = base.neighbors(v).to_vector();
    const auto j = std::find(nbrs.begin(), nbrs.end(), other) - nbrs.begin();
    return port[v][static_cast<std::size_t>(j)];
  };
  for (auto [u, v] : base.edges()) e.emplace_back(endpoint(u, v), endpoint(v, u));
  Graph g(next, e, params_label("g2", p, q));
  ensure(g.order() == n + 2 * static_cast<int>(cubic.size()), "g2 vertex count");
  ensure(g.max_degree() == 3 && g.is_connected(), "g2 is connected and subcubic");
  for (int w : cubic) ensure(g.is_clique(VertexSet::of(port[w])), "each T_w is a triangle");
  // Claw-free: every cubic vertex has an edge among its neighbours.
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) ensure(!g.is_independent(g.neighbors(v)), "g2 is claw-free");
  return g;
}

Graph star_blowup(int k, int t) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (t < k) throw DomainError("t must be at least k");
  const int n = k + (k + 2) * t;
  std::vector<Edge> e;
  add_clique(e, 0, k);
  for (int i = 0; i < k + 2; ++i) {
    const int base = k + i * t;
    add_clique(e, base, t);
    for (int s = 0; s < k; ++s)
      for (int y = base; y < base + k; ++y) e.emplace_back(s, y);
  }
  Graph g(n, e, params_label("star_blowup", k, t));
  for (int s = 0; s < k; ++s) ensure(g.degree(s) == k * (k + 2) + (k - 1), "hub degree");
  ensure(g.is_connected(), "star_blowup is connected");
  return g;
}

Graph ham_reg(int k) {
  if (k < 6 || k % 2 != 0) throw DomainError("k must be even and at least 6");
  const int copy = k + 1;
  const int apex = 3 * copy;
  std::vector<Edge> e;
  for (int c = 0; c < 3; ++c) {
    const int base = c * copy;
    const int missing = c < 2 ? 1 : (k - 4) / 2;
    for (int u = 0; u < copy; ++u)
      for (int v = u + 1; v < copy; ++v) {
        const bool removed = u % 2 == 0 && v == u + 1 && u / 2 < missing;
        if (!removed) e.emplace_back(base + u, base + v);
      }
  }
  Graph partial(apex, e);
  for (int v = 0; v < apex; ++v)
    if (partial.degree(v) == k - 1) e.emplace_back(v, apex);
  Graph g(apex + 1, e, "ham_reg(" + std::to_string(k) + ")");
  ensure(g.degree(apex) == k, "apex degree");
  ensure(g.is_regular() && g.max_degree() == k, "ham_reg is k-regular");
  ensure(g.is_connected(), "ham_reg is connected");
  return g;
}

Graph bipartite_gadget(int t, bool minus_matching) {
  if (t < 1) throw DomainError("t must be at least 1");
  std::vector<Edge> e;
  for (int a = 0; a < t; ++a)
    for (int b = t; b < 2 * t + 2; ++b)
      if (!minus_matching || b != t + a) e.emplace_back(a, b);
  Graph g(2 * t + 2, e, std::string(minus_matching ? "K_t,t+2-M" : "K_t,t+2") + "(" + std::to_string(t) + ")");
  ensure(g.size() == t * (t + 2) - (minus_matching ? t : 0), "gadget edge count");
  return g;
}

Graph linear_forest(const std::vector<int>& orders) {
  std::vector<Edge> e;
  int base = 0;
  for (int len : orders) {
    if (len < 1) throw DomainError("path orders must be positive");
    for (int i = 1; i < len; ++i) e.emplace_back(base + i - 1, base + i);
    base += len;
  }
  Graph g(base, e);
  ensure(g.size() == base - static_cast<int>(orders.size()), "linear forest edge count");
  return g;
}

std::vector<std::vector<int>> enumerate_induced_linear_forests(const Graph& g, int m) {
  if (m < 0 || m > g.order()) throw DomainError("forest order out of range");
  const int n = g.order();
  std::set<std::vector<int>, std::greater<>> shapes;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), -1);  // component label of chosen vertices
  VertexSet chosen;

  std::function<void(int, int)> walk = [&](int v, int picked) {
    if (picked == m) {
      std::vector<int> sizes;
      for (const auto& c : g.components(chosen)) sizes.push_back(c.count());
      std::sort(sizes.rbegin(), sizes.rend());
      shapes.insert(sizes);
      return;
    }
    if (n - v < m - picked) return;
    // Include v when it keeps the chosen set acyclic with degrees <= 2.
    const VertexSet nb = g.neighbors(v) & chosen;
    bool ok = nb.count() <= 2;
    if (ok)
      for (int u : nb) ok = ok && deg[u] < 2;
    if (ok && nb.count() == 2) ok = comp[nb.first()] != comp[nb.last()];
    if (ok) {
      const std::vector<int> saved = comp;
      chosen.set(v);
      comp[v] = v;
      for (int u : nb) {
        ++deg[u];
        const int from = comp[u];
        for (int w : chosen)
          if (comp[w] == from) comp[w] = v;
      }
      deg[v] = nb.count();
      walk(v + 1, picked + 1);
      for (int u : nb) --deg[u];
      deg[v] = 0;
      chosen.reset(v);
      comp = saved;
    }
    walk(v + 1, picked);
  };
  walk(0, 0);
  return {shapes.begin(), shapes.end()};
}

}  // namespace glpt
