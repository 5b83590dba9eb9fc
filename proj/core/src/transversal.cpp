#include "glpt/transversal.hpp"

#include <algorithm>
#include <unordered_set>

#include "glpt/errors.hpp"
#include "glpt/params.hpp"

namespace glpt {
namespace {

class HittingSearch {
 public:
  explicit HittingSearch(const std::vector<VertexSet>& family) : family_(family) {
    for (const auto& s : family_)
      for (int v : s) {
        if (v >= static_cast<int>(freq_.size())) freq_.resize(static_cast<std::size_t>(v) + 1, 0);
        ++freq_[static_cast<std::size_t>(v)];
      }
  }

  // True iff some set of at most `budget` vertices from `allowed`, together
  // with `chosen`, meets every member.
  bool feasible(const VertexSet& chosen, int budget, const VertexSet& allowed) const {
    std::vector<int> open;
    for (int i = 0; i < static_cast<int>(family_.size()); ++i)
      if (!family_[i].intersects(chosen)) open.push_back(i);
    return extend(open, budget, allowed);
  }

  int greedy_size() const {
    VertexSet chosen;
    int size = 0;
    while (true) {
      std::vector<int> count(freq_.size(), 0);
      bool open = false;
      for (const auto& s : family_) {
        if (s.intersects(chosen)) continue;
        open = true;
        for (int v : s) ++count[static_cast<std::size_t>(v)];
      }
      if (!open) return size;
      const auto best = std::max_element(count.begin(), count.end()) - count.begin();
      chosen.set(static_cast<int>(best));
      ++size;
    }
  }

 private:
  bool extend(const std::vector<int>& open, int budget, VertexSet allowed) const {
    if (open.empty()) return true;
    if (budget == 0) return false;
    // Pairwise disjoint open sets each need their own vertex.
    VertexSet used;
    int disjoint = 0;
    int pick = -1;
    int pick_size = 0;
    for (int i : open) {
      const VertexSet avail = family_[i] & allowed;
      const int size = avail.count();
      if (size == 0) return false;
      if (pick < 0 || size < pick_size) {
        pick = i;
        pick_size = size;
      }
      if (!avail.intersects(used)) {
        used |= avail;
        ++disjoint;
      }
    }
    if (disjoint > budget) return false;

    std::vector<int> branch = (family_[pick] & allowed).to_vector();
    std::stable_sort(branch.begin(), branch.end(), [&](int a, int b) {
      return freq_[static_cast<std::size_t>(a)] > freq_[static_cast<std::size_t>(b)];
    });
    for (int v : branch) {
      std::vector<int> rest;
      for (int i : open)
        if (!family_[i].test(v)) rest.push_back(i);
      if (extend(rest, budget - 1, allowed)) return true;
      // Later branches may assume v is absent.
      allowed.reset(v);
    }
    return false;
  }

  const std::vector<VertexSet>& family_;
  std::vector<int> freq_;
};

}  // namespace

VertexSet gallai_vertices(const Graph& g) {
  const int best = longest_path_order(g);
  if (best == g.order()) return g.vertices();
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = g.vertices();
    rest.reset(v);
    if (longest_order_within(g, rest) < best) out.set(v);
  }
  return out;
}

LptResult minimum_hitting_set(const std::vector<VertexSet>& family) {
  LptResult r;
  if (family.empty()) return r;
  for (const auto& s : family)
    if (s.none()) throw DomainError("an empty set cannot be hit");
  VertexSet universe;
  for (const auto& s : family) universe |= s;

  const HittingSearch search(family);
  const int upper = search.greedy_size();
  int k = 1;
  while (k < upper && !search.feasible(VertexSet{}, k, universe)) ++k;

  // Fix the smallest feasible element at each position.
  VertexSet chosen;
  int last = -1;
  for (int slot = 0; slot < k; ++slot) {
    VertexSet above = universe;
    for (int v = 0; v <= last; ++v) above.reset(v);
    bool placed = false;
    for (int v : above) {
      VertexSet trial = chosen;
      trial.set(v);
      VertexSet later = above;
      for (int u = last + 1; u <= v; ++u) later.reset(u);
      if (search.feasible(trial, k - slot - 1, later)) {
        chosen = trial;
        last = v;
        placed = true;
        break;
      }
    }
    if (!placed) throw IntegrityError("hitting-set witness reconstruction failed");
  }
  r.lpt = k;
  r.witness = chosen;
  return r;
}

namespace {

LptResult lpt_given(const Graph& g, const VertexSet& gallai, SearchLimits limits) {
  if (gallai.any()) return {1, VertexSet::single(gallai.first())};
  std::vector<VertexSet> family;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (const auto& p : enumerate_longest_paths(g, {}, limits))
    if (seen.insert(p.vertex_set()).second) family.push_back(p.vertex_set());
  return minimum_hitting_set(family);
}

}  // namespace

LptResult lpt_exact(const Graph& g, SearchLimits limits) {
  return lpt_given(g, gallai_vertices(g), limits);
}

std::vector<int> special_blocks(const Graph& g, SearchLimits limits) {
  const BlockCutTree tree = block_cut_tree(g);
  const auto paths = enumerate_longest_paths(g, {}, limits);
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(tree.blocks.size()); ++b) {
    const VertexSet& block = tree.blocks[b];
    const bool every = std::all_of(paths.begin(), paths.end(), [&](const Path& p) {
      const auto& v = p.vertices();
      for (std::size_t i = 1; i < v.size(); ++i)
        if (block.test(v[i - 1]) && block.test(v[i])) return true;
      return false;
    });
    if (every) out.push_back(b);
  }
  return out;
}

TransversalReport transversal_report(const Graph& g, SearchLimits limits) {
  TransversalReport r;
  r.gallai = gallai_vertices(g);
  const LptResult lpt = lpt_given(g, r.gallai, limits);
  r.lpt = lpt.lpt;
  r.witness = lpt.witness;
  r.special_blocks = special_blocks(g, limits);
  return r;
}

}  // namespace glpt
