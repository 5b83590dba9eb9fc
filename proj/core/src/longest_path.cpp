#include "glpt/longest_path.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "glpt/errors.hpp"

namespace glpt {
namespace {

constexpr int kHeldKarpMax = 24;
// Below this many reachable vertices the block-tree bound costs more than it saves.
constexpr int kBlockBoundMin = 16;

FiberQuery normalized(FiberQuery q) {
  if (!q.start && q.end) std::swap(q.start, q.end);
  return q;
}

void check_query(const Graph& g, const VertexSet& allowed, const FiberQuery& q) {
  for (const auto& v : {q.start, q.end}) {
    if (!v) continue;
    if (!g.contains(*v)) throw DomainError("endpoint " + std::to_string(*v) + " is not a vertex");
    if (!allowed.test(*v)) throw DomainError("endpoint " + std::to_string(*v) + " is excluded");
  }
  if (q.start && q.end && *q.start == *q.end) throw DomainError("xy-query needs distinct endpoints");
}

std::vector<Vertex> canonical(std::vector<Vertex> verts) {
  if (verts.size() >= 2 && verts.back() < verts.front()) std::reverse(verts.begin(), verts.end());
  return verts;
}

template <std::size_t W>
class PathEngine {
 public:
  using Bits = BasicBitset<W>;

  PathEngine(const Graph& g, const VertexSet& allowed, int end)
      : n_(g.order()), allowed_(allowed.resized<W>()), end_(end) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v : allowed) adj_[v] = g.neighbors(v).resized<W>() & allowed_;
    stamp_.assign(n_, 0);
    disc_.assign(n_, 0);
    low_.assign(n_, 0);
    cursor_.assign(n_, -1);
    parent_.assign(n_, -1);
    beyond_.assign(n_, 0);
    chain_.assign(n_, -1);
  }

  int maximize(const Bits& starts) {
    best_ = 0;
    for (int s : starts) {
      const Bits comp = flood(s, allowed_);
      if (end_ >= 0 && !comp.test(end_)) continue;
      ceiling_ = comp.count();
      if (ceiling_ <= best_) continue;
      done_ = false;  // a filled component must not stop the next one
      path_.assign(1, s);
      grow_max(s, Bits::single(s));
      if (best_ == allowed_.count()) break;
    }
    return best_;
  }

  // Calls visit(path) for each path of exactly `target` vertices; stops when
  // visit returns false.
  template <class Visit>
  void visit(const Bits& starts, int target, Visit&& visit) {
    stop_ = false;
    for (int s : starts) {
      path_.assign(1, s);
      grow_exact(s, Bits::single(s), target, visit);
      if (stop_) return;
    }
  }

 private:
  Bits flood(int from, const Bits& region) const {
    Bits seen = Bits::single(from);
    Bits frontier = seen;
    while (frontier.any()) {
      Bits next;
      for (int u : frontier) next |= adj_[u];
      next &= region;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Most vertices a path starting at head can still cover (head included),
  // staying out of `visited`; 0 when a required end is unreachable.
  int upper_bound(int head, const Bits& visited) {
    Bits region = allowed_ - visited;
    region.set(head);
    const Bits reach = flood(head, region);
    if (end_ >= 0 && !reach.test(end_)) return 0;
    const int cnt = reach.count();
    if (cnt < kBlockBoundMin) return cnt;
    return block_bound(head, reach);
  }

  // Block-cutpoint bound rooted at head. A path entering a block can leave
  // it only once, through one cut vertex, so the best it can do is the
  // heaviest root-to-leaf chain of blocks. For a fixed end, only the chain
  // towards the end counts.
  int block_bound(int head, const Bits& region) {
    ++epoch_;
    int clock = 0;
    auto seen = [&](int v) { return stamp_[v] == epoch_; };
    auto open = [&](int v, int p) {
      stamp_[v] = epoch_;
      disc_[v] = low_[v] = clock++;
      cursor_[v] = -1;
      parent_[v] = p;
      beyond_[v] = 0;
      chain_[v] = v == end_ ? 0 : -1;
      vstack_.push_back(v);
      call_.push_back(v);
    };
    vstack_.clear();
    call_.clear();
    open(head, -1);
    while (!call_.empty()) {
      const int v = call_.back();
      const int w = (adj_[v] & region).next(cursor_[v]);
      if (w != -1) {
        cursor_[v] = w;
        if (!seen(w))
          open(w, v);
        else if (w != parent_[v])
          low_[v] = std::min(low_[v], disc_[w]);
        continue;
      }
      call_.pop_back();
      const int p = parent_[v];
      if (p == -1) continue;
      low_[p] = std::min(low_[p], low_[v]);
      if (low_[v] < disc_[p]) continue;
      int size = 1;
      int deepest = 0;
      int chain = -1;
      while (true) {
        const int x = vstack_.back();
        vstack_.pop_back();
        ++size;
        deepest = std::max(deepest, beyond_[x]);
        if (chain_[x] >= 0) chain = chain_[x];
        if (x == v) break;
      }
      beyond_[p] = std::max(beyond_[p], size - 1 + deepest);
      if (chain >= 0) chain_[p] = size - 1 + chain;
    }
    if (end_ >= 0) return chain_[head] >= 0 ? 1 + chain_[head] : 0;
    return 1 + beyond_[head];
  }

  void grow_max(int head, Bits visited) {
    const int len = static_cast<int>(path_.size());
    if (end_ < 0 || head == end_) {
      if (len > best_) best_ = len;
      if (best_ >= ceiling_) {
        done_ = true;
        return;
      }
    }
    if (head == end_) return;
    const Bits cand = adj_[head] - visited;
    if (cand.none()) return;
    if (len - 1 + upper_bound(head, visited) <= best_) return;
    for (int v : cand) {
      visited.set(v);
      path_.push_back(v);
      grow_max(v, visited);
      path_.pop_back();
      visited.reset(v);
      if (done_) return;
    }
  }

  template <class Visit>
  void grow_exact(int head, Bits visited, int target, Visit& visit) {
    const int len = static_cast<int>(path_.size());
    if (len == target) {
      if ((end_ < 0 || head == end_) && !visit(path_)) stop_ = true;
      return;
    }
    if (head == end_) return;
    const Bits cand = adj_[head] - visited;
    if (cand.none()) return;
    if (len - 1 + upper_bound(head, visited) < target) return;
    for (int v : cand) {
      visited.set(v);
      path_.push_back(v);
      grow_exact(v, visited, target, visit);
      path_.pop_back();
      visited.reset(v);
      if (stop_) return;
    }
  }

  int n_;
  std::vector<Bits> adj_;
  Bits allowed_;
  int end_;

  std::vector<int> path_;
  int best_ = 0;
  int ceiling_ = 0;
  bool done_ = false;
  bool stop_ = false;

  // block_bound scratch, reused across calls via epoch stamps
  unsigned epoch_ = 0;
  std::vector<unsigned> stamp_;
  std::vector<int> disc_, low_, cursor_, parent_, beyond_, chain_;
  std::vector<int> vstack_, call_;
};

// Runs f(engine, starts) with the narrowest bitset that holds the graph.
template <class F>
decltype(auto) with_engine(const Graph& g, const VertexSet& allowed, const FiberQuery& q, F&& f) {
  const int end = q.end ? *q.end : -1;
  auto starts_for = [&](auto tag) {
    using Bits = BasicBitset<decltype(tag)::value>;
    return q.start ? Bits::single(*q.start) : allowed.resized<decltype(tag)::value>();
  };
  if (g.order() <= 64) {
    PathEngine<1> e(g, allowed, end);
    return f(e, starts_for(std::integral_constant<std::size_t, 1>{}));
  }
  if (g.order() <= 128) {
    PathEngine<2> e(g, allowed, end);
    return f(e, starts_for(std::integral_constant<std::size_t, 2>{}));
  }
  PathEngine<kMaxVertices / 64> e(g, allowed, end);
  return f(e, starts_for(std::integral_constant<std::size_t, kMaxVertices / 64>{}));
}

// Held-Karp tables: ends[mask] holds every v such that some path covers
// exactly `mask` and ends at v. Vertices are renumbered to 0..m-1.
struct SubsetTable {
  std::vector<int> ids;  // compact id -> vertex
  std::vector<std::uint32_t> nbr;
  std::vector<std::uint32_t> ends;

  SubsetTable(const Graph& g, const VertexSet& allowed, std::optional<Vertex> start) {
    ids = allowed.to_vector();
    const int m = static_cast<int>(ids.size());
    if (m > kHeldKarpMax) throw DomainError("subset DP limited to 24 vertices");
    std::vector<int> compact(g.order(), -1);
    for (int i = 0; i < m; ++i) compact[ids[i]] = i;
    nbr.assign(m, 0);
    for (int i = 0; i < m; ++i)
      for (int u : g.neighbors(ids[i]) & allowed) nbr[i] |= std::uint32_t{1} << compact[u];
    ends.assign(std::size_t{1} << m, 0);
    if (start) {
      const int s = compact[*start];
      ends[std::uint32_t{1} << s] = std::uint32_t{1} << s;
    } else {
      for (int i = 0; i < m; ++i) ends[std::uint32_t{1} << i] = std::uint32_t{1} << i;
    }
    const std::uint32_t full = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      std::uint32_t e = ends[mask];
      while (e) {
        const int v = std::countr_zero(e);
        e &= e - 1;
        std::uint32_t ext = nbr[v] & ~mask;
        while (ext) {
          const std::uint32_t bit = ext & (~ext + 1);
          ext ^= bit;
          ends[mask | bit] |= bit;
        }
      }
    }
  }

  int compact_of(Vertex v) const {
    return static_cast<int>(std::find(ids.begin(), ids.end(), v) - ids.begin());
  }

  // Walks back from (mask, end) to an oriented vertex sequence.
  std::vector<Vertex> rebuild(std::uint32_t mask, int end) const {
    std::vector<Vertex> rev;
    int v = end;
    while (true) {
      rev.push_back(ids[v]);
      const std::uint32_t prev = mask & ~(std::uint32_t{1} << v);
      if (prev == 0) break;
      const std::uint32_t cand = ends[prev] & nbr[v];
      v = std::countr_zero(cand);
      mask = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
};

}  // namespace

Path Path::make(const Graph& g, std::vector<Vertex> verts) {
  if (!is_path(g, verts)) throw IntegrityError("vertex sequence is not a path of the host graph");
  Path p;
  p.verts_ = canonical(std::move(verts));
  return p;
}

std::vector<Vertex> Path::oriented_from(Vertex end) const {
  if (!is_end(end)) throw DomainError("vertex " + std::to_string(end) + " is not an end of the path");
  std::vector<Vertex> out = verts_;
  if (out.front() != end) std::reverse(out.begin(), out.end());
  return out;
}

bool is_path(const Graph& g, std::span<const Vertex> verts) {
  if (verts.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vertex v = verts[i];
    if (!g.contains(v) || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.adjacent(verts[i - 1], v)) return false;
  }
  return true;
}

int held_karp_order(const Graph& g, const VertexSet& allowed, const FiberQuery& query) {
  const FiberQuery q = normalized(query);
  check_query(g, allowed, q);
  if (allowed.none()) return 0;
  const SubsetTable t(g, allowed, q.start);
  const std::uint32_t want = q.end ? std::uint32_t{1} << t.compact_of(*q.end) : ~std::uint32_t{0};
  int best = 0;
  for (std::size_t mask = 1; mask < t.ends.size(); ++mask)
    if (t.ends[mask] & want) best = std::max(best, std::popcount(static_cast<std::uint32_t>(mask)));
  return best;
}

int search_order(const Graph& g, const VertexSet& allowed, const FiberQuery& query) {
  const FiberQuery q = normalized(query);
  check_query(g, allowed, q);
  if (allowed.none()) return 0;
  return with_engine(g, allowed, q, [](auto& engine, const auto& starts) { return engine.maximize(starts); });
}

int longest_order_within(const Graph& g, const VertexSet& allowed, const FiberQuery& q) {
  if ((allowed & g.vertices()).count() <= kHeldKarpMax) return held_karp_order(g, allowed & g.vertices(), q);
  return search_order(g, allowed & g.vertices(), q);
}

std::optional<std::vector<Vertex>> find_path_of_order(const Graph& g, const VertexSet& allowed,
                                                      int order, const FiberQuery& query) {
  const FiberQuery q = normalized(query);
  check_query(g, allowed, q);
  if (order < 1 || allowed.none()) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  with_engine(g, allowed, q, [&](auto& engine, const auto& starts) {
    engine.visit(starts, order, [&](const std::vector<int>& p) {
      found = p;
      return false;
    });
    return 0;
  });
  return found;
}

std::vector<Path> enumerate_paths_of_order(const Graph& g, const VertexSet& allowed, int order,
                                           const FiberQuery& query, SearchLimits limits) {
  const FiberQuery q = normalized(query);
  check_query(g, allowed, q);
  std::vector<Path> out;
  if (order < 1 || allowed.none()) return out;
  std::vector<std::vector<Vertex>> raw;
  const bool dedupe_orientation = !q.start;
  with_engine(g, allowed, q, [&](auto& engine, const auto& starts) {
    engine.visit(starts, order, [&](const std::vector<int>& p) {
      if (dedupe_orientation && p.size() >= 2 && p.back() < p.front()) return true;
      if (raw.size() >= limits.max_paths)
        throw ResourceError("more than " + std::to_string(limits.max_paths) + " longest paths");
      raw.push_back(canonical(p));
      return true;
    });
    return 0;
  });
  std::sort(raw.begin(), raw.end());
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(Path::make(g, std::move(r)));
  return out;
}

int longest_path_order(const Graph& g, const FiberQuery& q) {
  if (!g.is_connected()) throw DomainError("longest-path queries need a connected graph");
  return longest_order_within(g, g.vertices(), q);
}

std::vector<Path> enumerate_longest_paths(const Graph& g, const FiberQuery& q, SearchLimits limits) {
  const int best = longest_path_order(g, q);
  return enumerate_paths_of_order(g, g.vertices(), best, q, limits);
}

Path fiber(const Graph& g, const FiberQuery& q) {
  const int best = longest_path_order(g, q);
  auto found = find_path_of_order(g, g.vertices(), best, q);
  if (!found) throw IntegrityError("no path attains the computed longest order");
  return Path::make(g, std::move(*found));
}

HamiltonResult hamiltonian(const Graph& g, HamiltonKind kind) {
  const int n = g.order();
  HamiltonResult r;
  if (n == 0 || !g.is_connected()) return r;
  if (kind == HamiltonKind::cycle) {
    if (n < 3 || g.min_degree() < 2) return r;
    if (n <= kHeldKarpMax) {
      const SubsetTable t(g, g.vertices(), Vertex{0});
      const std::uint32_t full = (std::uint32_t{1} << n) - 1;
      const std::uint32_t closing = t.ends[full] & t.nbr[0];
      if (closing) {
        r.found = true;
        r.witness = t.rebuild(full, std::countr_zero(closing));
      }
      return r;
    }
    // Fix vertex 0 as start; close through its largest neighbour.
    const int close = g.neighbors(0).last();
    auto found = find_path_of_order(g, g.vertices(), n, FiberQuery::between(0, close));
    if (!found) {
      for (int y : g.neighbors(0)) {
        if (y == close) continue;
        found = find_path_of_order(g, g.vertices(), n, FiberQuery::between(0, y));
        if (found) break;
      }
    }
    if (found) {
      r.found = true;
      r.witness = std::move(*found);
    }
    return r;
  }
  int leaves = 0;
  for (int v = 0; v < n; ++v) leaves += g.degree(v) <= 1 ? 1 : 0;
  if (n > 1 && leaves > 2) return r;
  if (n <= kHeldKarpMax) {
    const SubsetTable t(g, g.vertices(), std::nullopt);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    if (t.ends[full]) {
      r.found = true;
      r.witness = t.rebuild(full, std::countr_zero(t.ends[full]));
    }
    return r;
  }
  auto found = find_path_of_order(g, g.vertices(), n);
  if (found) {
    r.found = true;
    r.witness = std::move(*found);
  }
  return r;
}

}  // namespace glpt
