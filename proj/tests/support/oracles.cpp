#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "glpt/harness.hpp"

namespace glpt::oracle {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

// Number of components of the graph restricted to alive vertices.
int component_count(const Matrix& m, const std::vector<bool>& alive) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (alive[v] && !seen[v] && m[u][v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
  }
  return count;
}

bool connected_avoiding(const Matrix& m, int a, int b, int avoid) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == b) return true;
    for (int v = 0; v < n; ++v)
      if (v != avoid && !seen[v] && m[u][v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return false;
}

std::vector<int> canonical(std::vector<int> p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return std::min(p, r);
}

}  // namespace

std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + (bits[i + b] == '1');
    out += static_cast<char>(value + 63);
  }
  return out;
}

int independence_number(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && m[u][v]) ok = false;
    if (ok) best = size;
  }
  return best;
}

int connectivity(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int removed = std::popcount(mask);
    if (removed >= best || n - removed < 2) continue;
    std::vector<bool> alive(n);
    for (int v = 0; v < n; ++v) alive[v] = !(mask >> v & 1);
    if (component_count(m, alive) > 1) best = removed;
  }
  return best;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (const auto& [a, b] : g.edges()) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[a] = 0;
    q.push(a);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (!g.adjacent(u, v) || dist[v] >= 0) continue;
        if (u == a && v == b) continue;
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
    if (dist[b] > 0 && (best == 0 || dist[b] + 1 < best)) best = dist[b] + 1;
  }
  return best;
}

Blocks blocks(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  const auto edges = g.edges();
  const int e = static_cast<int>(edges.size());
  std::vector<int> parent(e);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      int w = -1, p = -1, q = -1;
      if (a == c) w = a, p = b, q = d;
      else if (a == d) w = a, p = b, q = c;
      else if (b == c) w = b, p = a, q = d;
      else if (b == d) w = b, p = a, q = c;
      if (w >= 0 && connected_avoiding(m, p, q, w)) parent[find(i)] = find(j);
    }
  Blocks out;
  std::vector<std::set<int>> classes(e);
  for (int i = 0; i < e; ++i) {
    classes[find(i)].insert(edges[i].first);
    classes[find(i)].insert(edges[i].second);
  }
  for (const auto& c : classes)
    if (!c.empty()) out.blocks.emplace_back(c.begin(), c.end());
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) out.blocks.push_back({v});
  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<bool> alive(n, true);
  const int base = component_count(m, alive);
  for (int v = 0; v < n; ++v) {
    alive[v] = false;
    if (component_count(m, alive) > base) out.cut_vertices.push_back(v);
    alive[v] = true;
  }
  return out;
}

std::vector<std::vector<Vertex>> all_paths(const Graph& g) {
  const int n = g.order();
  std::set<std::vector<int>> found;
  std::vector<int> walk;
  std::vector<bool> used(n, false);
  std::function<void()> extend = [&] {
    found.insert(canonical(walk));
    for (int v = 0; v < n; ++v) {
      if (used[v] || !g.adjacent(walk.back(), v)) continue;
      used[v] = true;
      walk.push_back(v);
      extend();
      walk.pop_back();
      used[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    walk = {s};
    extend();
    used[s] = false;
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Vertex>> longest_paths(const Graph& g) {
  auto paths = all_paths(g);
  std::size_t best = 0;
  for (const auto& p : paths) best = std::max(best, p.size());
  std::erase_if(paths, [&](const auto& p) { return p.size() != best; });
  return paths;
}

bool hamiltonian_path(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  if (perm.empty()) return false;
  do {
    bool ok = true;
    for (std::size_t i = 1; i < perm.size() && ok; ++i) ok = g.adjacent(perm[i - 1], perm[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Fix vertex 0 first; rotations add nothing.
  do {
    bool ok = g.adjacent(perm[n - 1], perm[0]);
    for (int i = 1; i < n && ok; ++i) ok = g.adjacent(perm[i - 1], perm[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

bool contains_induced(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (k > n) return false;
  std::vector<int> image;
  std::vector<bool> used(n, false);
  std::function<bool()> place = [&] {
    if (static_cast<int>(image.size()) == k) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (h.adjacent(i, j) != g.adjacent(image[i], image[j])) return false;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image.push_back(v);
      const bool hit = place();
      image.pop_back();
      used[v] = false;
      if (hit) return true;
    }
    return false;
  };
  return place();
}

int min_hitting_set(const std::vector<std::vector<Vertex>>& family, int n) {
  for (int size = 0; size <= n; ++size)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      bool hits = true;
      for (const auto& member : family) {
        bool met = false;
        for (int v : member) met = met || (mask >> v & 1);
        if (!met) {
          hits = false;
          break;
        }
      }
      if (hits) return size;
    }
  return -1;
}

int max_matching(const Graph& g, const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
  std::vector<bool> used(t.size(), false);
  std::function<int(std::size_t)> best = [&](std::size_t i) -> int {
    if (i == s.size()) return 0;
    int result = best(i + 1);
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (used[j] || !g.adjacent(s[i], t[j])) continue;
      used[j] = true;
      result = std::max(result, 1 + best(i + 1));
      used[j] = false;
    }
    return result;
  };
  return best(0);
}

int connected_class_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  std::vector<int> perm(n);
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Matrix adj(n, std::vector<bool>(n, false));
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) adj[pairs[e].first][pairs[e].second] = adj[pairs[e].second][pairs[e].first] = true;
    if (component_count(adj, std::vector<bool>(n, true)) != 1) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t least = ~0u;
    do {
      std::uint32_t code = 0;
      for (int e = 0; e < m; ++e)
        if (adj[perm[pairs[e].first]][perm[pairs[e].second]]) code |= 1u << e;
      least = std::min(least, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(least);
  }
  return static_cast<int>(classes.size());
}

Graph random_graph(std::mt19937& rng, int n, double p, bool connected) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (!connected || g.is_connected()) return g;
  }
}

std::vector<Graph> corpus(const std::string& spec) {
  std::vector<Graph> out;
  const CorpusSource src = open_corpus(spec, true);
  while (auto item = src()) out.push_back(std::move(item->graph));
  return out;
}

}  // namespace glpt::oracle
