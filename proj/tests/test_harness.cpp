#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "glpt/canonical.hpp"
#include "glpt/constructions.hpp"
#include "glpt/errors.hpp"
#include "glpt/graph6.hpp"
#include "glpt/harness.hpp"
#include "oracles.hpp"

using namespace glpt;

namespace {

CorpusSource from_list(std::vector<Graph> graphs) {
  auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(std::move(graphs), 0);
  return [state]() -> std::optional<CorpusItem> {
    if (state->second == state->first.size()) return std::nullopt;
    const std::size_t i = state->second++;
    return CorpusItem{i, 0, state->first[i]};
  };
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

ScanOptions all_theorems(int jobs) {
  ScanOptions opts;
  opts.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  opts.jobs = jobs;
  return opts;
}

struct NoJobOverride {
  NoJobOverride() { unsetenv("GLPT_JOBS"); }
} const no_job_override;

}  // namespace

TEST_CASE("generator counts match orbit counting") {
  for (int n = 1; n <= 6; ++n) CHECK(static_cast<int>(generate_connected(n).size()) == oracle::connected_class_count(n));
  CHECK(generate_connected(7).size() == 853);
  CHECK(generate_connected(8).size() == 11117);
  CHECK_THROWS_AS(generate_connected(9), DomainError);
  CHECK_THROWS_AS(generate_connected(0), DomainError);
}

TEST_CASE("generator matches an external 7-vertex corpus up to isomorphism") {
  std::set<std::uint64_t> ours, theirs;
  for (const Graph& g : generate_connected(7)) ours.insert(canonical_code(g));
  for (const auto& item : ingest(GLPT_CORPUS_DIR "/connected7.g6", true)) theirs.insert(canonical_code(item.graph));
  CHECK(ours.size() == 853);
  CHECK(ours == theirs);
}

TEST_CASE("canonical code is a relabelling invariant") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 11;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * (trial % 6), false);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::uint64_t code = canonical_code(g);
    CHECK(canonical_code(relabel(g, perm)) == code);
    const Graph rebuilt = graph_from_code(n, code);
    CHECK(canonical_code(rebuilt) == code);
    CHECK(rebuilt.size() == g.size());
    const auto label = canonical_labeling(g);
    std::vector<int> inverse(n);
    for (int p = 0; p < n; ++p) inverse[label[p]] = p;
    CHECK(relabel(g, inverse) == rebuilt);
  }
  CHECK_THROWS_AS(canonical_code(Graph(12, {})), DomainError);
}

TEST_CASE("ingest") {
  std::istringstream three("@\nA_\n\nBw\n");
  const CorpusSource src = ingest_stream(three, true);
  std::vector<CorpusItem> items;
  while (auto it = src()) items.push_back(*it);
  REQUIRE(items.size() == 3);
  CHECK(items[2].line == 4);
  CHECK(items[2].index == 2);

  std::istringstream empty("");
  CHECK_FALSE(ingest_stream(empty, true)().has_value());

  std::istringstream bad("A_\nA`\nBw\n");
  const CorpusSource strict = ingest_stream(bad, true);
  CHECK(strict().has_value());
  try {
    strict();
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::istringstream bad2("A_\nA`\nBw\n");
  IngestLog log;
  const CorpusSource lenient = ingest_stream(bad2, false, &log);
  int count = 0;
  while (lenient()) ++count;
  CHECK(count == 2);
  REQUIRE(log.skipped.size() == 1);
  CHECK(log.skipped[0].find("line 2") != std::string::npos);

  CHECK_THROWS_AS(ingest("/nonexistent/corpus.g6", true), DomainError);
  CHECK_THROWS_AS(open_corpus("gen:x", true), DomainError);
  CHECK(ingest(GLPT_CORPUS_DIR "/connected9.g6", true).size() == 261080);
}

TEST_CASE("generator specs") {
  std::size_t upto = 0, exact = 0;
  for (auto src = open_corpus("gen:5", true); src();) ++upto;
  for (auto src = open_corpus("gen:=5", true); src();) ++exact;
  CHECK(upto == 1 + 1 + 2 + 6 + 21);
  CHECK(exact == 21);
}

TEST_CASE("theorem tags and thresholds") {
  for (TheoremId id : kAllTheorems) CHECK(theorem_from_string(to_string(id)) == id);
  CHECK_FALSE(theorem_from_string("nonsense").has_value());
  CHECK(chvatal_erdos_threshold(1) == 16);
  CHECK(chvatal_erdos_threshold(2) == 57);
  CHECK(chvatal_erdos_threshold(3) == 3 * 5 * 9 + 1);
}

TEST_CASE("scans over small corpora report no violations") {
  const ScanReport r = scan(open_corpus("gen:7", true), all_theorems(1), "gen:7");
  CHECK(r.summary.scanned == 996);
  CHECK(r.summary.errors == 0);
  CHECK(r.violations.empty());
  CHECK(r.summary.theorems.at(TheoremId::p3p1).hits > 0);
  CHECK(r.summary.theorems.at(TheoremId::fixer_5p1).hits > 0);
  for (const auto& [id, tally] : r.summary.theorems) CHECK(tally.violations == 0);
}

TEST_CASE("disconnected and filtered graphs are counted, not emitted") {
  ScanOptions opts = all_theorems(1);
  opts.alpha_max = 2;
  const ScanReport r = scan(from_list({Graph(3, {{0, 1}}), canonical_graph("g0"), parse_graph6("Bw")}), opts);
  CHECK(r.summary.skipped_disconnected == 1);
  CHECK(r.summary.filtered == 1);
  CHECK(r.records.size() == 1);
}

TEST_CASE("counterexample search") {
  const auto g0 = search_counterexample(6, from_list({parse_graph6("Bw"), canonical_graph("g0")}));
  REQUIRE(g0.has_value());
  CHECK(g0->g6 == encode_graph6(canonical_graph("g0")));
  CHECK(g0->index == 1);
  CHECK(g0->alpha == 6);
  CHECK(g0->longest_order == 10);
  CHECK(g0->longest_paths == 42);
  CHECK(g0->lpt == 2);
  CHECK_FALSE(search_counterexample(1, from_list({canonical_graph("g0")})).has_value());
  std::size_t seen = 0;
  CHECK_FALSE(search_counterexample(5, open_corpus("gen:7", true), 2, &seen).has_value());
  CHECK(seen == 996);
}

TEST_CASE("reports") {
  ScanReport empty;
  const std::string text = emit_report(empty, ReportFormat::summary);
  CHECK(text.find("graphs scanned:        0") != std::string::npos);
  CHECK(emit_report(empty, ReportFormat::jsonl).empty());

  const ScanRecord rec = evaluate_graph(canonical_graph("g0"), all_theorems(1));
  const std::string line = record_to_json(rec);
  CHECK(line.find("\"lpt\":2") != std::string::npos);
  const auto j = nlohmann::json::parse(line);
  CHECK(j["g6"] == encode_graph6(canonical_graph("g0")));
  CHECK(j["n"] == 12);
  CHECK(j["alpha"] == 6);
  CHECK(j["kappa"] == 1);
  CHECK(j["delta"] == 3);
  CHECK(j["girth"] == 5);
  CHECK(j["gallai"].empty());
  CHECK(j["errors"].empty());
  CHECK(j["verdicts"].is_object());
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(line);
  for (const auto& item : ordered.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"g6", "n", "alpha", "kappa", "delta", "girth", "lpt", "gallai", "verdicts",
                                         "errors"});
  const auto tree = nlohmann::json::parse(record_to_json(evaluate_graph(parse_graph6("Bg"), all_theorems(1))));
  CHECK(tree["girth"] == "inf");
}

TEST_CASE("output does not depend on the worker count") {
  const auto one = emit_report(scan(open_corpus("gen:7", true), all_theorems(1), "gen:7"), ReportFormat::jsonl);
  const auto four = emit_report(scan(open_corpus("gen:7", true), all_theorems(4), "gen:7"), ReportFormat::jsonl);
  CHECK(one == four);
  CHECK(std::count(one.begin(), one.end(), '\n') == 996);
  setenv("GLPT_JOBS", "3", 1);
  CHECK(effective_jobs(1) == 3);
  unsetenv("GLPT_JOBS");
  CHECK(effective_jobs(0) == 1);
}
