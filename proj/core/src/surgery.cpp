#include "glpt/surgery.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "glpt/errors.hpp"
#include "glpt/params.hpp"

namespace glpt {
namespace {

// Shortest path inside comp from a vertex of `from` to a vertex of `to`,
// both restricted to comp; ties go to smaller ids. Empty if none.
std::vector<Vertex> path_within(const Graph& g, const VertexSet& comp, const VertexSet& from,
                                const VertexSet& to) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<int> queue;
  for (int v : from & comp) {
    parent[v] = -1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (to.test(v)) {
      std::vector<Vertex> out;
      for (int u = v; u != -1; u = parent[u]) out.push_back(u);
      std::reverse(out.begin(), out.end());
      return out;
    }
    for (int u : g.neighbors(v) & comp)
      if (parent[u] == -2) {
        parent[u] = v;
        queue.push_back(u);
      }
  }
  return {};
}

// Spanning path of a complete component from z to z2, the rest ascending.
std::vector<Vertex> spanning(const VertexSet& comp, Vertex z, Vertex z2) {
  std::vector<Vertex> out{z};
  for (int v : comp)
    if (v != z && v != z2) out.push_back(v);
  if (z2 != z) out.push_back(z2);
  return out;
}

// Distinct H-neighbours of two attachment points, via the bigraph matching.
std::optional<std::pair<Vertex, Vertex>> matched_pair(const Graph& g, const VertexSet& comp, Vertex s1,
                                                      Vertex s2) {
  VertexSet pair = VertexSet::single(s1);
  pair.set(s2);
  const HallOutcome out = hall_matching(g, pair, comp);
  const auto* m = std::get_if<HallMatching>(&out);
  if (!m) return std::nullopt;
  Vertex z1 = -1, z2 = -1;
  for (auto [s, z] : m->edges) (s == s1 ? z1 : z2) = z;
  return std::make_pair(z1, z2);
}

Vertex smallest_neighbor_in(const Graph& g, Vertex v, const VertexSet& comp) {
  return (g.neighbors(v) & comp).first();
}

AugmentationPlan make_plan(PlanKind kind, std::string clause, const AttachmentContext& ctx, int a, int b,
                           int c, int d, std::vector<Vertex> p1, std::vector<Vertex> p2 = {}) {
  AugmentationPlan plan;
  plan.kind = kind;
  plan.clause = std::move(clause);
  plan.host = ctx.walk;
  plan.a = a;
  plan.b = b;
  plan.c = c;
  plan.d = d;
  plan.patch1 = std::move(p1);
  plan.patch2 = std::move(p2);
  return plan;
}

}  // namespace

VertexSet AttachmentContext::attach_set() const {
  VertexSet out;
  for (int pos : attach) out.set(walk[static_cast<std::size_t>(pos)]);
  return out;
}

int AttachmentContext::position(Vertex v) const {
  const auto it = std::find(walk.begin(), walk.end(), v);
  return it == walk.end() ? -1 : static_cast<int>(it - walk.begin());
}

int AttachmentContext::segment_of(int pos) const {
  for (int i = 0; i < static_cast<int>(segments.size()); ++i)
    if (pos >= segments[i].first && pos < segments[i].second) return i;
  return -1;
}

AttachmentContext attachment_context(const Graph& g, std::span<const Vertex> walk, Vertex seed) {
  if (!is_path(g, walk)) throw IntegrityError("walk is not a path of the host graph");
  if (!g.contains(seed)) throw DomainError("seed " + std::to_string(seed) + " is not a vertex");
  const VertexSet on_path = VertexSet::of(walk);
  if (on_path.test(seed)) throw DomainError("seed " + std::to_string(seed) + " lies on the path");
  AttachmentContext ctx;
  ctx.walk.assign(walk.begin(), walk.end());
  ctx.comp = g.component_of(seed, g.vertices() - on_path);
  ctx.t = ctx.comp.count();
  VertexSet touch;
  for (int v : ctx.comp) touch |= g.neighbors(v);
  const int len = static_cast<int>(walk.size());
  for (int i = 0; i < len; ++i)
    if (touch.test(walk[static_cast<std::size_t>(i)])) ctx.attach.push_back(i);
  int start = 0;
  for (int pos : ctx.attach) {
    ctx.segments.emplace_back(start, pos);
    start = pos + 1;
  }
  ctx.segments.emplace_back(start, len);
  return ctx;
}

AttachmentContext attachment_context(const Graph& g, const Path& p, Vertex seed) {
  return attachment_context(g, p.vertices(), seed);
}

int rank(const AttachmentContext& ctx, Vertex w) {
  const int pos = ctx.position(w);
  if (pos < 0) throw DomainError("vertex " + std::to_string(w) + " is not on the path");
  const int seg = ctx.segment_of(pos);
  if (seg < 0) throw DomainError("vertex " + std::to_string(w) + " is an attachment point");
  return seg == 0 ? pos : pos - ctx.attach[static_cast<std::size_t>(seg - 1)] - 1;
}

std::string to_string(PlanKind kind) {
  switch (kind) {
    case PlanKind::interior_splice: return "interior-splice";
    case PlanKind::exterior_splice: return "exterior-splice";
    case PlanKind::detour: return "detour";
    case PlanKind::y_rebuild: return "y-rebuild";
  }
  return "?";
}

bool hall_condition_holds(const Graph& g, const AttachmentContext& ctx) {
  const int k = ctx.k();
  const int m = std::min(k, ctx.t);
  if (m == 0) return true;
  // Matching every m-subset covers every smaller subset too.
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[i] = i;
  long long budget = 1'000'000;
  while (true) {
    if (--budget < 0) throw ResourceError("too many attachment subsets to check the matching condition");
    VertexSet sub;
    for (int i : pick) sub.set(ctx.s(i));
    if (std::holds_alternative<HallViolator>(hall_matching(g, sub, ctx.comp))) return false;
    int i = m - 1;
    while (i >= 0 && pick[i] == k - m + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::optional<AugmentationPlan> find_augmentation(const Graph& g, const AttachmentContext& ctx) {
  const int k = ctx.k();
  const int len = static_cast<int>(ctx.walk.size());
  const auto& w = ctx.walk;
  auto nb_h = [&](int pos) { return g.neighbors(w[pos]) & ctx.comp; };

  // Consecutive attachment points: insert an H-path between them.
  for (int i = 0; i + 1 < k; ++i) {
    const int p = ctx.attach[i], q = ctx.attach[i + 1];
    if (q != p + 1) continue;
    auto patch = path_within(g, ctx.comp, nb_h(p), nb_h(q));
    return make_plan(PlanKind::interior_splice, "attach-pair-1", ctx, q, q, 0, 0, std::move(patch));
  }
  // Successors of two attachment points adjacent: detour through H.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int p = ctx.attach[i], q = ctx.attach[j];
      if (q == p + 1 || q + 1 >= len || !g.adjacent(w[p + 1], w[q + 1])) continue;
      auto patch = path_within(g, ctx.comp, nb_h(p), nb_h(q));
      return make_plan(PlanKind::detour, "attach-pair-2", ctx, p, p + 1, q, q + 1, std::move(patch));
    }
  // Predecessors of two attachment points adjacent.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int p = ctx.attach[i], q = ctx.attach[j];
      if (q == p + 1 || p == 0 || !g.adjacent(w[p - 1], w[q - 1])) continue;
      auto patch = path_within(g, ctx.comp, nb_h(p), nb_h(q));
      return make_plan(PlanKind::detour, "attach-pair-3", ctx, p - 1, p, q - 1, q, {}, std::move(patch));
    }

  if (k == 0 || !g.is_clique(ctx.comp) || !hall_condition_holds(g, ctx)) return std::nullopt;
  const int first = ctx.attach.front(), last = ctx.attach.back();

  // An end of P is an attachment point: extend by a spanning path of H.
  if (first == 0) {
    const Vertex z = smallest_neighbor_in(g, w[0], ctx.comp);
    std::vector<Vertex> patch;
    for (int v : ctx.comp)
      if (v != z) patch.push_back(v);
    patch.push_back(z);
    return make_plan(PlanKind::exterior_splice, "minihammer-1", ctx, 0, 0, 0, 0, std::move(patch));
  }
  if (last == len - 1) {
    const Vertex z = smallest_neighbor_in(g, w[last], ctx.comp);
    std::vector<Vertex> patch{z};
    for (int v : ctx.comp)
      if (v != z) patch.push_back(v);
    return make_plan(PlanKind::exterior_splice, "minihammer-1", ctx, len, len, 0, 0, std::move(patch));
  }

  // A non-empty segment shorter than t is replaced by a spanning path of H.
  for (int i = 0; i <= k; ++i) {
    const auto [lo, hi] = ctx.segments[i];
    const int size = hi - lo;
    if (size < 1 || size >= ctx.t) continue;
    if (i == 0) {
      const Vertex z = smallest_neighbor_in(g, ctx.s(0), ctx.comp);
      std::vector<Vertex> patch;
      for (int v : ctx.comp)
        if (v != z) patch.push_back(v);
      patch.push_back(z);
      return make_plan(PlanKind::exterior_splice, "minihammer-2", ctx, lo, hi, 0, 0, std::move(patch));
    }
    if (i == k) {
      const Vertex z = smallest_neighbor_in(g, ctx.s(k - 1), ctx.comp);
      std::vector<Vertex> patch{z};
      for (int v : ctx.comp)
        if (v != z) patch.push_back(v);
      return make_plan(PlanKind::exterior_splice, "minihammer-2", ctx, lo, hi, 0, 0, std::move(patch));
    }
    const auto zz = matched_pair(g, ctx.comp, ctx.s(i - 1), ctx.s(i));
    if (!zz) continue;
    return make_plan(PlanKind::interior_splice, "minihammer-2", ctx, lo, hi, 0, 0,
                     spanning(ctx.comp, zz->first, zz->second));
  }

  // Low-rank cross edges. Ranks within W_i are position offsets.
  auto rank_at = [&](int pos, int seg) { return seg == 0 ? pos : pos - ctx.attach[seg - 1] - 1; };
  for (int pw = 0; pw < len; ++pw) {
    const int si = ctx.segment_of(pw);
    if (si <= 0) continue;
    for (int pv = pw + 1; pv < len; ++pv) {
      const int sj = ctx.segment_of(pv);
      if (sj <= si || rank_at(pw, si) + rank_at(pv, sj) >= ctx.t || !g.adjacent(w[pw], w[pv])) continue;
      const int a = ctx.attach[si - 1], c = ctx.attach[sj - 1];
      std::vector<Vertex> patch;
      if (ctx.t == 1) {
        patch = {ctx.comp.first()};
      } else {
        const auto zz = matched_pair(g, ctx.comp, w[a], w[c]);
        if (!zz) continue;
        patch = spanning(ctx.comp, zz->first, zz->second);
      }
      return make_plan(PlanKind::detour, "minihammer-3", ctx, a, pw, c, pv, std::move(patch));
    }
  }
  for (int pw = ctx.segments[0].first; pw < ctx.segments[0].second; ++pw)
    for (int pv = pw + 1; pv < len; ++pv) {
      const int sj = ctx.segment_of(pv);
      if (sj <= 0 || rank_at(pw, 0) + rank_at(pv, sj) >= ctx.t || !g.adjacent(w[pw], w[pv])) continue;
      const int c = ctx.attach[sj - 1];
      const Vertex z = smallest_neighbor_in(g, w[c], ctx.comp);
      std::vector<Vertex> patch{z};
      for (int v : ctx.comp)
        if (v != z) patch.push_back(v);
      return make_plan(PlanKind::y_rebuild, "minihammer-4", ctx, 0, pw, c, pv, std::move(patch));
    }
  return std::nullopt;
}

std::vector<Vertex> apply_plan_walk(const Graph& g, const AugmentationPlan& plan) {
  const auto& h = plan.host;
  const int len = static_cast<int>(h.size());
  auto in_range = [&](int i) { return i >= 0 && i <= len; };
  std::vector<Vertex> out;
  switch (plan.kind) {
    case PlanKind::interior_splice:
    case PlanKind::exterior_splice:
      if (!in_range(plan.a) || !in_range(plan.b) || plan.a > plan.b) throw IntegrityError("bad splice interval");
      out.assign(h.begin(), h.begin() + plan.a);
      out.insert(out.end(), plan.patch1.begin(), plan.patch1.end());
      out.insert(out.end(), h.begin() + plan.b, h.end());
      break;
    case PlanKind::detour:
      if (!(0 <= plan.a && plan.a < plan.b && plan.b < plan.c && plan.c < plan.d && plan.d < len))
        throw IntegrityError("detour positions must satisfy a < b < c < d on the host");
      out.assign(h.begin(), h.begin() + plan.a + 1);
      out.insert(out.end(), plan.patch1.begin(), plan.patch1.end());
      for (int i = plan.c; i >= plan.b; --i) out.push_back(h[i]);
      out.insert(out.end(), plan.patch2.begin(), plan.patch2.end());
      out.insert(out.end(), h.begin() + plan.d, h.end());
      break;
    case PlanKind::y_rebuild:
      if (!(0 <= plan.b && plan.b < plan.c && plan.c < plan.d && plan.d < len))
        throw IntegrityError("y-rebuild positions must satisfy b < c < d on the host");
      for (int i = len - 1; i >= plan.d; --i) out.push_back(h[i]);
      out.insert(out.end(), h.begin() + plan.b, h.begin() + plan.c + 1);
      out.insert(out.end(), plan.patch1.begin(), plan.patch1.end());
      break;
  }
  if (!is_path(g, out)) throw IntegrityError("plan result is not a path of the host graph");
  if (out.size() <= h.size()) throw IntegrityError("plan result is not longer than the host");
  const bool keeps_ends = out.front() == h.front() && out.back() == h.back();
  if ((plan.kind == PlanKind::interior_splice || plan.kind == PlanKind::detour) && !keeps_ends)
    throw IntegrityError("interior splices and detours must keep both ends");
  if (plan.kind == PlanKind::y_rebuild && out.front() != h.back())
    throw IntegrityError("a y-rebuild must keep the end y");
  return out;
}

Path apply_plan(const Graph& g, const AugmentationPlan& plan) {
  return Path::make(g, apply_plan_walk(g, plan));
}

Path apply_plan(const Graph& g, const Path& p, const AugmentationPlan& plan) {
  std::vector<Vertex> rev(plan.host.rbegin(), plan.host.rend());
  if (p.vertices() != plan.host && p.vertices() != rev) throw IntegrityError("plan was built for another path");
  return apply_plan(g, plan);
}

VertexSet extract_independent_set(const Graph& g, const AttachmentContext& ctx, FiberKind kind) {
  const int k = ctx.k();
  const int len = static_cast<int>(ctx.walk.size());
  for (int i = 0; i + 1 < k; ++i)
    if (ctx.attach[i + 1] == ctx.attach[i] + 1)
      throw DomainError("consecutive attachment points: the path is not a fiber of the stated kind");
  if (kind != FiberKind::xy_fiber && k > 0 && ctx.attach.back() == len - 1)
    throw DomainError("H attaches at the far end: the path is not an x-fiber");
  if (kind == FiberKind::fiber && k > 0 && ctx.attach.front() == 0)
    throw DomainError("H attaches at x: the path is not a fiber");

  VertexSet a;
  const int upto = kind == FiberKind::xy_fiber ? k - 1 : k;
  for (int i = 0; i < upto; ++i) a.set(ctx.walk[ctx.attach[i] + 1]);
  if (kind == FiberKind::fiber) a.set(ctx.x());

  const int need = kind == FiberKind::xy_fiber ? k - 1 : kind == FiberKind::x_fiber ? k : k + 1;
  if (a.count() < need) throw DomainError("independent set is smaller than the fiber bound");
  if (!g.is_independent(a)) throw DomainError("successor set is not independent: the path is not a fiber");
  for (int v : a)
    if (g.neighbors(v).intersects(ctx.comp)) throw DomainError("successor set touches H");
  if (kind == FiberKind::xy_fiber && (a.test(ctx.x()) || a.test(ctx.y())))
    throw DomainError("xy-fiber set must avoid both ends");
  if (kind == FiberKind::x_fiber && a.test(ctx.x())) throw DomainError("x-fiber set must avoid x");
  return a;
}

}  // namespace glpt
