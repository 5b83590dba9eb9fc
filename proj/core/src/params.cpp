#include "glpt/params.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "glpt/errors.hpp"

namespace glpt {
namespace {

// Maximum clique with greedy-colouring bound over bitset rows.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  VertexSet run() {
    expand(VertexSet::prefix(static_cast<int>(adj_.size())));
    return best_;
  }

 private:
  void expand(VertexSet cand) {
    std::vector<int> order;
    std::vector<int> colour;
    VertexSet uncoloured = cand;
    int k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        q -= adj_[static_cast<std::size_t>(v)];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur_size_ + colour[i] <= best_size_) return;
      const int v = order[i];
      cur_.set(v);
      ++cur_size_;
      const VertexSet next = cand & adj_[static_cast<std::size_t>(v)];
      if (next.none()) {
        if (cur_size_ > best_size_) {
          best_ = cur_;
          best_size_ = cur_size_;
        }
      } else {
        expand(next);
      }
      cur_.reset(v);
      --cur_size_;
      cand.reset(v);
    }
  }

  std::vector<VertexSet> adj_;
  VertexSet cur_;
  VertexSet best_;
  int cur_size_ = 0;
  int best_size_ = 0;
};

// Unit-capacity residual network with split vertices (v_in = 2v, v_out = 2v+1).
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : head_(static_cast<std::size_t>(2 * g.order()), -1) {
    for (int v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v);
      add_arc(2 * v + 1, 2 * u);
    }
  }

  int run(int source, int sink, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source};
      via[static_cast<std::size_t>(source)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(sink)] == -1) break;
      for (int x = sink; x != source;) {
        const int a = via[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to) {
    arcs_.push_back({to, 1, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
  const int n = g.order();
  if (n == 0) return {};
  const Graph comp = g.complement();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return comp.degree(a) > comp.degree(b); });
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int u : comp.neighbors(perm[static_cast<std::size_t>(i)]))
      adj[static_cast<std::size_t>(i)].set(pos[static_cast<std::size_t>(u)]);
  const VertexSet found = CliqueSearch(std::move(adj)).run();
  VertexSet out;
  for (int i : found) out.set(perm[static_cast<std::size_t>(i)]);
  return out;
}

int independence_number(const Graph& g) { return maximum_independent_set(g).count(); }

int disjoint_paths(const Graph& g, Vertex s, Vertex t, int limit) {
  if (s == t || g.adjacent(s, t)) throw DomainError("disjoint_paths needs distinct non-adjacent ends");
  return SplitFlow(g).run(2 * s + 1, 2 * t, limit);
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw DomainError("connectivity needs at least 2 vertices");
  if (!g.is_connected()) return 0;
  if (g.size() == n * (n - 1) / 2) return n - 1;
  int best = g.min_degree();
  // Some vertex among the first best+1 lies outside a minimum separator, and
  // the separated side it misses contains a later vertex.
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, disjoint_paths(g, i, j, best));
    }
  }
  return best;
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      if (best != -1 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  return best == -1 ? Girth::infinite() : Girth::finite(best);
}

int BlockCutTree::block_of_edge(const Graph& g, Vertex u, Vertex v) const {
  if (!g.adjacent(u, v)) return -1;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].test(u) && blocks[b].test(v)) return static_cast<int>(b);
  return -1;
}

int BlockCutTree::edge_count(const Graph& g, int b) const {
  const VertexSet& blk = blocks[static_cast<std::size_t>(b)];
  int twice = 0;
  for (int v : blk) twice += (g.neighbors(v) & blk).count();
  return twice / 2;
}

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.order();
  if (n == 0 || !g.is_connected()) throw DomainError("block_cut_tree needs a connected graph");
  BlockCutTree out;
  if (n == 1) {
    out.blocks.push_back(VertexSet::single(0));
    return out;
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> cursor(static_cast<std::size_t>(n), -1);  // last neighbour tried
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> vstack;
  std::vector<int> call{0};
  int clock = 0;
  int root_children = 0;
  disc[0] = low[0] = clock++;
  vstack.push_back(0);
  while (!call.empty()) {
    const int v = call.back();
    const int w = g.neighbors(v).next(cursor[static_cast<std::size_t>(v)]);
    if (w != -1) {
      cursor[static_cast<std::size_t>(v)] = w;
      if (disc[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = v;
        disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = clock++;
        vstack.push_back(w);
        call.push_back(w);
      } else if (w != parent[static_cast<std::size_t>(v)]) {
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
      continue;
    }
    call.pop_back();
    const int p = parent[static_cast<std::size_t>(v)];
    if (p == -1) continue;
    low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
      VertexSet block = VertexSet::single(p);
      while (true) {
        const int x = vstack.back();
        vstack.pop_back();
        block.set(x);
        if (x == v) break;
      }
      out.blocks.push_back(block);
      if (p == 0)
        ++root_children;
      else
        out.cut_vertices.set(p);
    }
  }
  if (root_children >= 2) out.cut_vertices.set(0);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  for (int c : out.cut_vertices)
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
      if (out.blocks[b].test(c)) out.incidence.emplace_back(c, static_cast<int>(b));
  return out;
}

HallOutcome hall_matching(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.intersects(t)) throw DomainError("hall_matching needs disjoint S and T");
  std::vector<int> mate_of_t(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> mate_of_s(static_cast<std::size_t>(g.order()), -1);

  VertexSet visited;
  // Kuhn augmenting search; `visited` collects the T-side of the alternating tree.
  auto augment = [&](auto&& self, int x) -> bool {
    for (int y : g.neighbors(x) & t) {
      if (visited.test(y)) continue;
      visited.set(y);
      const int m = mate_of_t[static_cast<std::size_t>(y)];
      if (m == -1 || self(self, m)) {
        mate_of_t[static_cast<std::size_t>(y)] = x;
        mate_of_s[static_cast<std::size_t>(x)] = y;
        return true;
      }
    }
    return false;
  };

  for (int x : s) {
    visited.clear();
    if (augment(augment, x)) continue;
    HallViolator witness;
    witness.subset.set(x);
    for (int y : visited) witness.subset.set(mate_of_t[static_cast<std::size_t>(y)]);
    witness.neighborhood = visited;
    return witness;
  }
  HallMatching m;
  for (int x : s) m.edges.emplace_back(x, mate_of_s[static_cast<std::size_t>(x)]);
  return m;
}

ParamReport param_report(const Graph& g) {
  ParamReport r;
  r.alpha = independence_number(g);
  r.kappa = g.order() < 2 ? 0 : connectivity(g);
  r.delta_max = g.max_degree();
  r.delta_min = g.min_degree();
  r.girth = girth(g);
  return r;
}

}  // namespace glpt
