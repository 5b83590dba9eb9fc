#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glpt/graph.hpp"
#include "glpt/longest_path.hpp"
#include "glpt/params.hpp"

namespace glpt {

/// One representative per isomorphism class of connected graphs on n
/// vertices, ordered by canonical code. Throws DomainError for n outside
/// [1, 8]; larger orders come from ingested corpora.
std::vector<Graph> generate_connected(int n);

struct CorpusItem {
  std::size_t index = 0;  // position in the stream, from 0
  std::size_t line = 0;   // 1-based source line, 0 for generated graphs
  Graph graph;
};

/// Pull-style stream of graphs; returns std::nullopt at the end.
using CorpusSource = std::function<std::optional<CorpusItem>()>;

struct IngestLog {
  std::vector<std::string> skipped;  // "line N: reason" for lenient reads
};

/// Newline-separated graph6 (or sparse6) text. Blank lines are ignored.
/// With strict set a bad line throws ParseError whose message names the
/// line; otherwise it is skipped and noted in `log`.
CorpusSource ingest_stream(std::istream& in, bool strict, IngestLog* log = nullptr);
/// Opens the file; throws DomainError when it cannot be read.
std::vector<CorpusItem> ingest(const std::filesystem::path& path, bool strict, IngestLog* log = nullptr);

/// "gen:N" (all connected graphs with 1..N vertices), "gen:=N" (exactly N)
/// or a file path. The returned source owns any open file.
CorpusSource open_corpus(const std::string& spec, bool strict, IngestLog* log = nullptr);

enum class TheoremId {
  p3p1,
  p2p1p1,
  zero_sided_k1,
  zero_sided_k2,
  one_sided,
  two_sided,
  special_block,
  fixer_5p1,
  chvatal_erdos,
  hamreg_corollary,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::p3p1,          TheoremId::p2p1p1,        TheoremId::zero_sided_k1, TheoremId::zero_sided_k2,
    TheoremId::one_sided,     TheoremId::two_sided,     TheoremId::special_block, TheoremId::fixer_5p1,
    TheoremId::chvatal_erdos, TheoremId::hamreg_corollary,
};

std::string_view to_string(TheoremId id);
/// Accepts the tags used on the command line, e.g. "zero-sided-k1".
std::optional<TheoremId> theorem_from_string(std::string_view tag);

/// Threshold order k(k+2)(2k+3)+1 of the Chvatal-Erdos type statement.
long long chvatal_erdos_threshold(int k);

struct ScanOptions {
  std::vector<TheoremId> theorems;
  int jobs = 1;                 // GLPT_JOBS overrides when set
  std::optional<int> k;         // fixes k for chvatal-erdos / hamreg-corollary
  std::optional<int> alpha_max; // graphs above are skipped before any path work
  SearchLimits limits;
  int fiber_enumeration_max_n = 8;  // second route for one/two-sided checks
};

struct Verdict {
  TheoremId id;
  bool holds = true;
};

struct ScanRecord {
  std::size_t index = 0;
  std::size_t line = 0;
  std::string g6;
  int n = 0;
  int alpha = 0;
  int kappa = 0;
  int delta = 0;
  Girth girth = Girth::infinite();
  int lpt = 0;
  std::vector<Vertex> gallai;
  std::vector<Verdict> verdicts;     // only theorems whose hypothesis applied
  std::vector<std::string> errors;   // resource overflows and violation witnesses
  bool evaluated = false;            // false when filtered out by alpha_max
};

struct TheoremTally {
  std::size_t hits = 0;
  std::size_t violations = 0;
};

struct ScanSummary {
  std::size_t scanned = 0;
  std::size_t skipped_disconnected = 0;
  std::size_t filtered = 0;
  std::size_t errors = 0;
  std::map<TheoremId, TheoremTally> theorems;
};

struct ScanReport {
  std::string source;
  std::vector<ScanRecord> records;  // input order
  ScanSummary summary;
  std::vector<std::string> violations;  // "g6 tag: witness"
};

/// Effective worker count: GLPT_JOBS when set to a positive integer,
/// otherwise `requested` (at least 1).
int effective_jobs(int requested);

/// Evaluates one connected graph; never throws for resource overflows.
ScanRecord evaluate_graph(const Graph& g, const ScanOptions& opts);

/// Streams the corpus through a worker pool. Records reach `sink` in input
/// order, whatever the worker count. Disconnected graphs are counted and
/// skipped.
ScanSummary scan(const CorpusSource& source, const ScanOptions& opts,
                 const std::function<void(const ScanRecord&)>& sink);
/// Collecting form.
ScanReport scan(const CorpusSource& source, const ScanOptions& opts, std::string source_name = {});

struct Counterexample {
  std::string g6;
  std::size_t index = 0;
  std::size_t line = 0;
  int alpha = 0;
  int longest_order = 0;
  std::size_t longest_paths = 0;
  int lpt = 0;
};

/// First connected graph (input order) with alpha <= alpha_max and no
/// Gallai vertex, with a digest of its longest-path family.
std::optional<Counterexample> search_counterexample(int alpha_max, const CorpusSource& source, int jobs = 1,
                                                    std::size_t* scanned = nullptr);

enum class ReportFormat { jsonl, summary };

std::string record_to_json(const ScanRecord& r);
std::string emit_report(const ScanReport& report, ReportFormat format);
std::string summary_text(const ScanSummary& s, const std::vector<std::string>& violations = {});

}  // namespace glpt
