#include "glpt/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "glpt/errors.hpp"

namespace glpt {
namespace {

constexpr int kMaxCanonical = 11;

// Equitable colouring: start from degrees, split by neighbour colour
// multisets until stable. Colours are ranks of sorted signatures, so they
// are invariant under relabeling.
std::vector<int> refine(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    const int now = static_cast<int>(uniq.size());
    if (now == classes) return colour;
    classes = now;
  }
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {
    colour_ = refine(g);
    required_ = colour_;
    std::sort(required_.begin(), required_.end());
    total_bits_ = n_ * (n_ - 1) / 2;
    place_.assign(static_cast<std::size_t>(n_), -1);
  }

  void run() {
    if (n_ <= 1) {
      best_labels_.assign(static_cast<std::size_t>(n_), 0);
      have_best_ = true;
      return;
    }
    extend(0, 0, VertexSet{});
  }

  std::uint64_t code() const { return best_; }
  const std::vector<Vertex>& labels() const { return best_labels_; }

 private:
  void extend(int pos, std::uint64_t prefix, const VertexSet& used) {
    if (pos == n_) {
      if (!have_best_ || prefix > best_) {
        best_ = prefix;
        best_labels_ = place_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used.test(v) || colour_[v] != required_[pos]) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | (g_.adjacent(place_[i], v) ? 1u : 0u);
      // Prune branches whose code prefix already falls below the best.
      if (have_best_ && next < (best_ >> (total_bits_ - pos * (pos + 1) / 2))) continue;
      place_[pos] = v;
      VertexSet u = used;
      u.set(v);
      extend(pos + 1, next, u);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_ = 0;
  std::vector<int> colour_, required_;
  std::vector<Vertex> place_;
  std::uint64_t best_ = 0;
  std::vector<Vertex> best_labels_;
  bool have_best_ = false;
};

LabelSearch solved(const Graph& g) {
  if (g.order() > kMaxCanonical) throw DomainError("canonical codes support at most 11 vertices");
  LabelSearch s(g);
  s.run();
  return s;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return solved(g).code(); }

std::vector<Vertex> canonical_labeling(const Graph& g) { return solved(g).labels(); }

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxCanonical) throw DomainError("canonical codes support at most 11 vertices");
  std::vector<Edge> edges;
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> --bit) & 1u) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace glpt
