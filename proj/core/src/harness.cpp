#include "glpt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "glpt/canonical.hpp"
#include "glpt/constructions.hpp"
#include "glpt/errors.hpp"
#include "glpt/graph6.hpp"
#include "glpt/induced.hpp"
#include "glpt/transversal.hpp"

namespace glpt {
namespace {

constexpr int kGeneratorMax = 8;
constexpr std::size_t kBatch = 2048;

std::string join(const std::vector<Vertex>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

VertexSet without(const Graph& g, std::initializer_list<Vertex> drop) {
  VertexSet s = g.vertices();
  for (Vertex v : drop) s.reset(v);
  return s;
}

// Runs work(i) for i in [0, count) on `jobs` threads.
template <class Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) work(i);
  };
  std::vector<std::thread> pool;
  const int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

std::vector<CorpusItem> next_batch(const CorpusSource& source) {
  std::vector<CorpusItem> batch;
  while (batch.size() < kBatch) {
    auto item = source();
    if (!item) break;
    batch.push_back(std::move(*item));
  }
  return batch;
}

// Shared per-graph facts the theorem checks draw on.
struct Facts {
  const Graph& g;
  int alpha, kappa, delta, longest;
  VertexSet gallai;
  VertexSet max_degree;

  VertexSet degree_at_least(int d) const {
    VertexSet s;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= d) s.set(v);
    return s;
  }
};

// Smallest k with k <= kappa, alpha <= k+2 and n >= threshold(k), or the
// fixed k when given.
std::optional<int> chvatal_k(const Facts& f, const ScanOptions& opts) {
  auto fits = [&](int k) {
    return k >= 1 && k <= f.kappa && f.alpha <= k + 2 && f.g.order() >= chvatal_erdos_threshold(k);
  };
  if (opts.k) return fits(*opts.k) ? opts.k : std::nullopt;
  for (int k = 1; k <= f.kappa; ++k)
    if (fits(k)) return k;
  return std::nullopt;
}

class Checker {
 public:
  Checker(const Facts& f, const ScanOptions& opts, ScanRecord& rec) : f_(f), opts_(opts), rec_(rec) {}

  void run(TheoremId id) {
    const std::optional<bool> v = evaluate(id);
    if (v) rec_.verdicts.push_back({id, *v});
  }

 private:
  // nullopt when the hypothesis does not apply.
  std::optional<bool> evaluate(TheoremId id) {
    const Graph& g = f_.g;
    switch (id) {
      case TheoremId::p3p1:
        if (!is_free_of(g, linear_forest({3, 1}))) return std::nullopt;
        return all_gallai(id, f_.degree_at_least(f_.delta - 1));
      case TheoremId::p2p1p1:
        if (!is_free_of(g, linear_forest({2, 1, 1}))) return std::nullopt;
        return all_gallai(id, f_.max_degree);
      case TheoremId::zero_sided_k1:
        if (f_.kappa < 1 || f_.alpha > 3) return std::nullopt;
        return all_gallai(id, f_.degree_at_least(f_.delta - 1));
      case TheoremId::zero_sided_k2:
        if (f_.kappa < 2 || f_.alpha > 4) return std::nullopt;
        return all_gallai(id, f_.max_degree);
      case TheoremId::one_sided: return one_sided();
      case TheoremId::two_sided: return two_sided();
      case TheoremId::special_block: return special_block();
      case TheoremId::fixer_5p1:
        if (f_.alpha > 4) return std::nullopt;
        if (f_.gallai.any()) return true;
        violation(id, "no Gallai vertex");
        return false;
      case TheoremId::chvatal_erdos:
        if (!chvatal_k(f_, opts_)) return std::nullopt;
        return all_gallai(id, f_.max_degree);
      case TheoremId::hamreg_corollary:
        if (!g.is_regular() || !chvatal_k(f_, opts_)) return std::nullopt;
        if (f_.longest == g.order()) return true;
        violation(id, "no Hamiltonian path");
        return false;
    }
    return std::nullopt;
  }

  bool all_gallai(TheoremId id, const VertexSet& must) {
    const VertexSet missing = must - f_.gallai;
    if (missing.none()) return true;
    const Vertex u = missing.first();
    const auto avoid = find_path_of_order(f_.g, without(f_.g, {u}), f_.longest);
    violation(id, "vertex " + std::to_string(u) + " avoided by longest path " + (avoid ? join(*avoid) : "?"));
    return false;
  }

  // Every x-fiber contains every maximum-degree vertex, for x with
  // alpha(G - x) <= 3, G 2-connected.
  std::optional<bool> one_sided() {
    const Graph& g = f_.g;
    if (f_.kappa < 2) return std::nullopt;
    bool applied = false, holds = true;
    for (int x = 0; x < g.order(); ++x) {
      if (independence_number(g.induced(without(g, {x}))) > 3) continue;
      applied = true;
      const FiberQuery q = FiberQuery::from(x);
      const int best = longest_order_within(g, g.vertices(), q);
      for (int u : f_.max_degree) {
        if (u == x) continue;
        const bool avoided = longest_order_within(g, without(g, {u}), q) == best;
        cross_check(q, best, u, avoided);
        if (avoided) {
          holds = false;
          const auto p = find_path_of_order(g, without(g, {u}), best, q);
          violation(TheoremId::one_sided,
                    "x=" + std::to_string(x) + ": vertex " + std::to_string(u) + " avoided by " + join(*p));
        }
      }
    }
    if (!applied) return std::nullopt;
    return holds;
  }

  // Every xy-fiber contains every maximum-degree vertex, or G - {x,y} is
  // two disjoint cliques, for x != y with alpha(G - {x,y}) <= 2.
  std::optional<bool> two_sided() {
    const Graph& g = f_.g;
    if (f_.kappa < 2) return std::nullopt;
    bool applied = false, holds = true;
    for (int x = 0; x < g.order(); ++x)
      for (int y = x + 1; y < g.order(); ++y) {
        const VertexSet rest = without(g, {x, y});
        if (independence_number(g.induced(rest)) > 2) continue;
        applied = true;
        const auto parts = g.components(rest);
        const bool two_cliques =
            parts.size() == 2 && g.is_clique(parts[0]) && g.is_clique(parts[1]);
        if (two_cliques) continue;
        const FiberQuery q = FiberQuery::between(x, y);
        const int best = longest_order_within(g, g.vertices(), q);
        for (int u : f_.max_degree) {
          if (u == x || u == y) continue;
          const bool avoided = longest_order_within(g, without(g, {u}), q) == best;
          cross_check(q, best, u, avoided);
          if (avoided) {
            holds = false;
            const auto p = find_path_of_order(g, without(g, {u}), best, q);
            violation(TheoremId::two_sided, "x=" + std::to_string(x) + " y=" + std::to_string(y) + ": vertex " +
                                                std::to_string(u) + " avoided by " + join(*p));
          }
        }
      }
    if (!applied) return std::nullopt;
    return holds;
  }

  std::optional<bool> special_block() {
    const Graph& g = f_.g;
    if (g.order() < 2) return std::nullopt;
    const BlockCutTree tree = block_cut_tree(g);
    if (tree.cut_vertices.intersects(f_.gallai)) return std::nullopt;
    if (!special_blocks(g, opts_.limits).empty()) return true;
    violation(TheoremId::special_block, "no special block");
    return false;
  }

  // Second route for fiber checks on small graphs: enumerate the fibers.
  void cross_check(const FiberQuery& q, int best, Vertex u, bool avoided) {
    if (f_.g.order() > opts_.fiber_enumeration_max_n) return;
    const auto fibers = enumerate_paths_of_order(f_.g, f_.g.vertices(), best, q, opts_.limits);
    const bool some_avoids =
        std::any_of(fibers.begin(), fibers.end(), [&](const Path& p) { return !p.contains(u); });
    if (some_avoids != avoided)
      rec_.errors.push_back("fiber routes disagree on vertex " + std::to_string(u));
  }

  void violation(TheoremId id, const std::string& what) {
    rec_.errors.push_back("violation " + std::string(to_string(id)) + ": " + what);
  }

  const Facts& f_;
  const ScanOptions& opts_;
  ScanRecord& rec_;
};

}  // namespace

std::vector<Graph> generate_connected(int n) {
  if (n < 1 || n > kGeneratorMax)
    throw DomainError("the built-in generator covers 1..8 vertices; ingest a graph6 corpus for larger orders");
  std::vector<Graph> level{Graph(1, std::span<const Edge>{})};
  for (int m = 2; m <= n; ++m) {
    std::set<std::uint64_t> codes;
    for (const Graph& base : level) {
      const std::vector<Edge> old = base.edges();
      for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
        std::vector<Edge> e = old;
        for (int v = 0; v < m - 1; ++v)
          if (mask >> v & 1u) e.emplace_back(v, m - 1);
        codes.insert(canonical_code(Graph(m, e)));
      }
    }
    level.clear();
    for (std::uint64_t c : codes) level.push_back(graph_from_code(m, c));
  }
  return level;
}

CorpusSource ingest_stream(std::istream& in, bool strict, IngestLog* log) {
  auto line_no = std::make_shared<std::size_t>(0);
  auto index = std::make_shared<std::size_t>(0);
  return [&in, strict, log, line_no, index]() -> std::optional<CorpusItem> {
    std::string text;
    while (std::getline(in, text)) {
      ++*line_no;
      while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
      if (text.empty()) continue;
      try {
        CorpusItem item{(*index)++, *line_no, parse_graph_line(text)};
        return item;
      } catch (const ParseError& e) {
        if (strict) throw ParseError(e.reason(), e.offset(), *line_no);
        if (log) log->skipped.push_back("line " + std::to_string(*line_no) + ": " + e.reason());
      } catch (const DomainError& e) {
        if (strict) throw ParseError(e.what(), 0, *line_no);
        if (log) log->skipped.push_back("line " + std::to_string(*line_no) + ": " + e.what());
      }
    }
    return std::nullopt;
  };
}

std::vector<CorpusItem> ingest(const std::filesystem::path& path, bool strict, IngestLog* log) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read corpus file '" + path.string() + "'");
  std::vector<CorpusItem> out;
  const CorpusSource src = ingest_stream(in, strict, log);
  while (auto item = src()) out.push_back(std::move(*item));
  return out;
}

CorpusSource open_corpus(const std::string& spec, bool strict, IngestLog* log) {
  if (spec.rfind("gen:", 0) == 0) {
    std::string rest = spec.substr(4);
    const bool exact = !rest.empty() && rest.front() == '=';
    if (exact) rest.erase(0, 1);
    int top = 0;
    try {
      std::size_t used = 0;
      top = std::stoi(rest, &used);
      if (used != rest.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("bad generator spec '" + spec + "' (want gen:N or gen:=N)");
    }
    if (top < 1 || top > kGeneratorMax) generate_connected(top);  // raises the pointer to ingestion
    struct State {
      int order;
      int top;
      std::vector<Graph> level;
      std::size_t pos = 0;
      std::size_t index = 0;
    };
    auto st = std::make_shared<State>(State{exact ? top : 1, top, {}, 0, 0});
    st->level = generate_connected(st->order);
    return [st]() -> std::optional<CorpusItem> {
      while (st->pos == st->level.size()) {
        if (st->order >= st->top) return std::nullopt;
        st->level = generate_connected(++st->order);
        st->pos = 0;
      }
      return CorpusItem{st->index++, 0, st->level[st->pos++]};
    };
  }
  auto file = std::make_shared<std::ifstream>(spec);
  if (!*file) throw DomainError("cannot read corpus file '" + spec + "'");
  CorpusSource inner = ingest_stream(*file, strict, log);
  return [file, inner]() { return inner(); };
}

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::p3p1: return "p3p1";
    case TheoremId::p2p1p1: return "p2p1p1";
    case TheoremId::zero_sided_k1: return "zero-sided-k1";
    case TheoremId::zero_sided_k2: return "zero-sided-k2";
    case TheoremId::one_sided: return "one-sided";
    case TheoremId::two_sided: return "two-sided";
    case TheoremId::special_block: return "special-block";
    case TheoremId::fixer_5p1: return "fixer-5p1";
    case TheoremId::chvatal_erdos: return "chvatal-erdos";
    case TheoremId::hamreg_corollary: return "hamreg-corollary";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view tag) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == tag) return id;
  return std::nullopt;
}

long long chvatal_erdos_threshold(int k) {
  const long long kk = k;
  return kk * (kk + 2) * (2 * kk + 3) + 1;
}

int effective_jobs(int requested) {
  if (const char* env = std::getenv("GLPT_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1, requested);
}

ScanRecord evaluate_graph(const Graph& g, const ScanOptions& opts) {
  ScanRecord r;
  r.g6 = encode_graph6(g);
  r.n = g.order();
  r.delta = g.max_degree();
  r.alpha = independence_number(g);
  if (opts.alpha_max && r.alpha > *opts.alpha_max) return r;
  r.evaluated = true;
  r.kappa = g.order() >= 2 ? connectivity(g) : 0;
  r.girth = girth(g);
  try {
    Facts f{g, r.alpha, r.kappa, r.delta, longest_path_order(g), gallai_vertices(g), {}};
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == r.delta) f.max_degree.set(v);
    r.gallai = f.gallai.to_vector();
    r.lpt = f.gallai.any() ? 1 : lpt_exact(g, opts.limits).lpt;
    Checker check(f, opts, r);
    for (TheoremId id : opts.theorems) {
      try {
        check.run(id);
      } catch (const ResourceError& e) {
        r.errors.push_back(std::string(to_string(id)) + ": " + e.what());
      }
    }
  } catch (const ResourceError& e) {
    r.errors.push_back(e.what());
  }
  return r;
}

ScanSummary scan(const CorpusSource& source, const ScanOptions& opts,
                 const std::function<void(const ScanRecord&)>& sink) {
  ScanSummary sum;
  for (TheoremId id : opts.theorems) sum.theorems[id];
  const int jobs = effective_jobs(opts.jobs);
  while (true) {
    std::vector<CorpusItem> batch = next_batch(source);
    if (batch.empty()) break;
    std::vector<std::optional<ScanRecord>> out(batch.size());
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
      const Graph& g = batch[i].graph;
      if (!g.is_connected()) return;
      ScanRecord r = evaluate_graph(g, opts);
      r.index = batch[i].index;
      r.line = batch[i].line;
      out[i] = std::move(r);
    });
    for (auto& r : out) {
      if (!r) {
        ++sum.skipped_disconnected;
        continue;
      }
      if (!r->evaluated) {
        ++sum.filtered;
        continue;
      }
      ++sum.scanned;
      if (!r->errors.empty()) ++sum.errors;
      for (const Verdict& v : r->verdicts) {
        auto& tally = sum.theorems[v.id];
        ++tally.hits;
        if (!v.holds) ++tally.violations;
      }
      sink(*r);
    }
  }
  return sum;
}

ScanReport scan(const CorpusSource& source, const ScanOptions& opts, std::string source_name) {
  ScanReport rep;
  rep.source = std::move(source_name);
  rep.summary = scan(source, opts, [&](const ScanRecord& r) {
    for (const auto& e : r.errors)
      if (e.rfind("violation ", 0) == 0) rep.violations.push_back(r.g6 + " " + e.substr(10));
    rep.records.push_back(r);
  });
  return rep;
}

std::optional<Counterexample> search_counterexample(int alpha_max, const CorpusSource& source, int jobs,
                                                    std::size_t* scanned) {
  const int workers = effective_jobs(jobs);
  std::size_t seen = 0;
  while (true) {
    std::vector<CorpusItem> batch = next_batch(source);
    if (batch.empty()) break;
    std::vector<char> hit(batch.size(), 0);
    std::vector<int> alpha(batch.size(), 0);
    parallel_for(batch.size(), workers, [&](std::size_t i) {
      const Graph& g = batch[i].graph;
      if (!g.is_connected()) return;
      alpha[i] = independence_number(g);
      if (alpha[i] > alpha_max) return;
      hit[i] = gallai_vertices(g).none() ? 1 : 0;
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++seen;
      if (!hit[i]) continue;
      const Graph& g = batch[i].graph;
      Counterexample c;
      c.g6 = encode_graph6(g);
      c.index = batch[i].index;
      c.line = batch[i].line;
      c.alpha = alpha[i];
      c.longest_order = longest_path_order(g);
      c.longest_paths = enumerate_longest_paths(g).size();
      c.lpt = lpt_exact(g).lpt;
      if (scanned) *scanned = seen;
      return c;
    }
  }
  if (scanned) *scanned = seen;
  return std::nullopt;
}

std::string record_to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["g6"] = r.g6;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["kappa"] = r.kappa;
  j["delta"] = r.delta;
  if (r.girth.is_infinite())
    j["girth"] = "inf";
  else
    j["girth"] = r.girth.length();
  j["lpt"] = r.lpt;
  j["gallai"] = r.gallai;
  j["verdicts"] = nlohmann::ordered_json::object();
  for (const Verdict& v : r.verdicts) j["verdicts"][std::string(to_string(v.id))] = v.holds;
  j["errors"] = r.errors;
  return j.dump();
}

std::string summary_text(const ScanSummary& s, const std::vector<std::string>& violations) {
  std::ostringstream out;
  out << "graphs scanned:        " << s.scanned << "\n"
      << "skipped disconnected:  " << s.skipped_disconnected << "\n"
      << "filtered by alpha:     " << s.filtered << "\n"
      << "records with errors:   " << s.errors << "\n";
  if (!s.theorems.empty()) {
    out << "theorem            hits  violations\n";
    for (const auto& [id, t] : s.theorems) {
      std::string name(to_string(id));
      name.resize(std::max<std::size_t>(name.size(), 17), ' ');
      out << name << "  " << t.hits << "  " << t.violations << "\n";
    }
  }
  for (const auto& v : violations) out << "violation: " << v << "\n";
  return out.str();
}

std::string emit_report(const ScanReport& report, ReportFormat format) {
  if (format == ReportFormat::summary) {
    std::string head = report.source.empty() ? std::string() : "source: " + report.source + "\n";
    return head + summary_text(report.summary, report.violations);
  }
  std::string out;
  for (const auto& r : report.records) out += record_to_json(r) + "\n";
  return out;
}

}  // namespace glpt
