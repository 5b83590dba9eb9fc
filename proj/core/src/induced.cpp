#include "glpt/induced.hpp"

#include <algorithm>

namespace glpt {
namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
    const int k = h.order();
    // Each next pattern vertex maximises already-placed neighbours, then degree.
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int u : order_) links += h.adjacent(u, v) ? 1 : 0;
        if (best < 0 || links > best_links ||
            (links == best_links && h.degree(v) > h.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
    image_.assign(static_cast<std::size_t>(k), -1);
  }

  std::optional<std::vector<Vertex>> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (extend(0, VertexSet{})) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth, const VertexSet& used) {
    if (depth == order_.size()) return true;
    const int hv = order_[depth];
    VertexSet cand = g_.vertices() - used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int hu = order_[i];
      const int gu = image_[static_cast<std::size_t>(hu)];
      if (h_.adjacent(hu, hv))
        cand &= g_.neighbors(gu);
      else
        cand -= g_.neighbors(gu);
    }
    const int need = h_.degree(hv);
    for (int gv : cand) {
      if (g_.degree(gv) < need) continue;
      image_[static_cast<std::size_t>(hv)] = gv;
      VertexSet next = used;
      next.set(gv);
      if (extend(depth + 1, next)) return true;
    }
    image_[static_cast<std::size_t>(hv)] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h) {
  return InducedMatcher(g, h).run();
}

bool is_linear_forest(const Graph& h) {
  if (h.max_degree() > 2) return false;
  const int comps = static_cast<int>(h.components(h.vertices()).size());
  return h.size() == h.order() - comps;
}

}  // namespace glpt
