#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glpt/graph.hpp"
#include "glpt/longest_path.hpp"

namespace glpt {

/// A path P = x..y, one component H of G - V(P) and how H attaches to P.
/// Positions are indices into `walk`, which is P oriented from x.
struct AttachmentContext {
  std::vector<Vertex> walk;
  VertexSet comp;           // V(H)
  std::vector<int> attach;  // positions of s_1..s_k, ascending
  int t = 0;                // |V(H)|
  /// W_0..W_k as half-open position ranges: W_0 = P[x, s_1), W_i = P(s_i, s_i+1),
  /// W_k = P(s_k, y]. Empty ranges are kept so that W_i is segments[i].
  std::vector<std::pair<int, int>> segments;

  int k() const { return static_cast<int>(attach.size()); }
  Vertex x() const { return walk.front(); }
  Vertex y() const { return walk.back(); }
  Vertex s(int i) const { return walk[static_cast<std::size_t>(attach[static_cast<std::size_t>(i)])]; }
  VertexSet attach_set() const;
  /// Position of v on the walk, or -1.
  int position(Vertex v) const;
  /// Index i of the segment W_i holding position pos, or -1 for attachment points.
  int segment_of(int pos) const;
};

/// Context for the walk (oriented x..y) and the component containing seed.
/// Throws DomainError when seed lies on the path or is not a vertex, and
/// IntegrityError when the walk is not a path.
AttachmentContext attachment_context(const Graph& g, std::span<const Vertex> walk, Vertex seed);
/// Uses the stored orientation of p.
AttachmentContext attachment_context(const Graph& g, const Path& p, Vertex seed);

/// Length of the longest subpath of P[x, w] ending at w and avoiding
/// attachment points. Throws DomainError for attachment points and
/// vertices off the path.
int rank(const AttachmentContext& ctx, Vertex w);

enum class PlanKind { interior_splice, exterior_splice, detour, y_rebuild };

std::string to_string(PlanKind kind);

/// A rewrite of the host walk into a strictly longer path. Positions refer
/// to `host`; patches list only the new (off-path) vertices.
///  - splices replace host[a, b) by patch1 (a == b inserts before a);
///  - detours (a < b < c < d) give host[0..a] + patch1 + reverse(host[b..c])
///    + patch2 + host[d..];
///  - y-rebuilds (b < c < d) give reverse(host[d..]) + host[b..c] + patch1.
struct AugmentationPlan {
  PlanKind kind = PlanKind::interior_splice;
  std::string clause;
  std::vector<Vertex> host;
  int a = 0, b = 0, c = 0, d = 0;
  std::vector<Vertex> patch1, patch2;
};

/// Every set of at most t attachment points has a matching into V(H) in
/// the induced (S, V(H))-bigraph.
bool hall_condition_holds(const Graph& g, const AttachmentContext& ctx);

/// First applicable rewrite, trying in order: consecutive attachment pair,
/// adjacent successors of two attachment points, adjacent predecessors,
/// then (only when H is complete and the matching hypothesis holds) an
/// end attachment point, a segment shorter than t, a low-rank cross edge
/// avoiding W_0, and a low-rank cross edge from W_0.
std::optional<AugmentationPlan> find_augmentation(const Graph& g, const AttachmentContext& ctx);

/// The oriented result of a plan. Throws IntegrityError when the result is
/// not a path of g or is not longer than the host, or when the positions
/// are malformed.
std::vector<Vertex> apply_plan_walk(const Graph& g, const AugmentationPlan& plan);
Path apply_plan(const Graph& g, const AugmentationPlan& plan);
/// Checks that plan was built for p (either orientation) first.
Path apply_plan(const Graph& g, const Path& p, const AugmentationPlan& plan);

enum class FiberKind { xy_fiber, x_fiber, fiber };

/// Independent set on the path with no edge into H, built from the
/// successors of attachment points (s_1..s_k-1 for xy-fibers, all of them
/// for x-fibers, all of them plus x for fibers). The caller certifies the
/// fiber kind; cheap necessary conditions are re-checked and a failure
/// throws DomainError.
VertexSet extract_independent_set(const Graph& g, const AttachmentContext& ctx, FiberKind kind);

}  // namespace glpt
