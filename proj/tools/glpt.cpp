// Command-line front end: analyze, construct, scan, search, surgery.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glpt/constructions.hpp"
#include "glpt/errors.hpp"
#include "glpt/graph6.hpp"
#include "glpt/harness.hpp"
#include "glpt/longest_path.hpp"
#include "glpt/params.hpp"
#include "glpt/surgery.hpp"
#include "glpt/transversal.hpp"

namespace {

using namespace glpt;

std::string list(const std::vector<Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return "[" + out + "]";
}

std::string list(const VertexSet& s) { return list(s.to_vector()); }

void analyze_one(const Graph& g, bool json) {
  if (json) {
    ScanOptions opts;
    opts.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
    std::cout << record_to_json(evaluate_graph(g, opts)) << "\n";
    return;
  }
  const ParamReport p = param_report(g);
  std::cout << "graph6      " << encode_graph6(g) << "\n"
            << "n, |E|      " << g.order() << ", " << g.size() << "\n"
            << "alpha       " << p.alpha << "\n"
            << "kappa       " << p.kappa << "\n"
            << "degrees     " << p.delta_min << ".." << p.delta_max << "\n"
            << "girth       " << p.girth.to_string() << "\n";
  if (!g.is_connected()) {
    std::cout << "disconnected: path invariants skipped\n";
    return;
  }
  const Path f = fiber(g);
  const TransversalReport t = transversal_report(g);
  const BlockCutTree tree = block_cut_tree(g);
  std::cout << "longest     " << f.order() << " vertices, e.g. " << list(f.vertices()) << "\n"
            << "gallai      " << list(t.gallai) << "\n"
            << "lpt         " << t.lpt << " witness " << list(t.witness) << "\n"
            << "blocks      " << tree.blocks.size() << ", cut vertices " << list(tree.cut_vertices) << "\n";
  for (int b : t.special_blocks) std::cout << "special     block " << b << " " << list(tree.blocks[b]) << "\n";
}

Graph build(const std::string& name, int p, int q, int k, int t, bool minus, const std::vector<int>& orders) {
  if (name == "petersen" || name == "g0") return canonical_graph(name);
  if (name == "g1") return g1(p, q);
  if (name == "g2") return g2(p, q);
  if (name == "star-blowup") return star_blowup(k, t);
  if (name == "ham-reg") return ham_reg(k);
  if (name == "bipartite-gadget") return bipartite_gadget(t, minus);
  if (name == "linear-forest") return linear_forest(orders);
  throw DomainError("unknown construction '" + name + "'");
}

std::vector<TheoremId> parse_theorems(const std::vector<std::string>& tags) {
  std::vector<TheoremId> out;
  for (const auto& tag : tags) {
    if (tag == "all") return {std::begin(kAllTheorems), std::end(kAllTheorems)};
    const auto id = theorem_from_string(tag);
    if (!id) throw DomainError("unknown theorem tag '" + tag + "'");
    out.push_back(*id);
  }
  return out;
}

std::vector<Vertex> parse_path(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact longest-path transversal toolkit"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Parameters, longest paths and Gallai data of graph6 input");
  std::string graph_arg;
  bool as_json = false;
  analyze->add_option("graph", graph_arg, "graph6 string, or - to read lines from stdin")->required();
  analyze->add_flag("--json", as_json, "Emit one jsonl record per graph");

  auto* construct = app.add_subcommand("construct", "Emit a named construction as graph6");
  std::string name;
  int p = 1, q = 16, k = 1, t = 3;
  bool minus = false;
  std::vector<int> orders;
  construct
      ->add_option("name", name,
                   "petersen | g0 | g1 | g2 | star-blowup | ham-reg | bipartite-gadget | linear-forest")
      ->required();
  construct->add_option("--p", p, "Subdivision length off the pendant edges");
  construct->add_option("--q", q, "Subdivision length of the pendant edges");
  construct->add_option("--k", k, "Connectivity parameter");
  construct->add_option("--t", t, "Clique / part size");
  construct->add_flag("--minus-matching", minus, "Remove a matching from the gadget");
  construct->add_option("--orders", orders, "Path orders of a linear forest")->delimiter(',');

  auto* scan_cmd = app.add_subcommand("scan", "Check theorem predicates over a corpus");
  std::vector<std::string> tags{"all"};
  std::string input;
  std::string format = "summary";
  int jobs = 1;
  int alpha_max = -1;
  int fixed_k = 0;
  bool lenient = false;
  scan_cmd->add_option("--theorem", tags, "Theorem tag(s) or all")->delimiter(',');
  scan_cmd->add_option("--input", input, "graph6 file or gen:N / gen:=N")->required();
  scan_cmd->add_option("--format", format, "jsonl or summary")->check(CLI::IsMember({"jsonl", "summary"}));
  scan_cmd->add_option("--jobs", jobs, "Worker threads (GLPT_JOBS overrides)");
  scan_cmd->add_option("--alpha-max", alpha_max, "Skip graphs with larger independence number");
  scan_cmd->add_option("--k", fixed_k, "Fix k for chvatal-erdos and hamreg-corollary");
  scan_cmd->add_flag("--lenient", lenient, "Skip unparsable lines instead of aborting");

  auto* search = app.add_subcommand("search", "First graph with bounded alpha and no Gallai vertex");
  int search_alpha = 5;
  search->add_option("--alpha-max", search_alpha, "Independence number bound")->required();
  search->add_option("--input", input, "graph6 file or gen:N / gen:=N")->required();
  search->add_option("--jobs", jobs, "Worker threads (GLPT_JOBS overrides)");
  search->add_flag("--lenient", lenient, "Skip unparsable lines instead of aborting");

  auto* surgery = app.add_subcommand("surgery", "Attachment analysis and augmenting rewrite of a path");
  std::string path_arg;
  int seed = -1;
  std::string kind;
  surgery->add_option("--graph", graph_arg, "graph6 string")->required();
  surgery->add_option("--path", path_arg, "Comma-separated path x,...,y")->required();
  surgery->add_option("--seed", seed, "Vertex off the path selecting H")->required();
  surgery->add_option("--kind", kind, "Also extract the independent set for xy | x | fiber")
      ->check(CLI::IsMember({"xy", "x", "fiber"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      if (graph_arg == "-") {
        std::string line;
        while (std::getline(std::cin, line))
          if (!line.empty()) analyze_one(parse_graph_line(line), as_json);
      } else {
        analyze_one(parse_graph_line(graph_arg), as_json);
      }
    } else if (*construct) {
      std::cout << encode_graph6(build(name, p, q, k, t, minus, orders)) << "\n";
    } else if (*scan_cmd) {
      ScanOptions opts;
      opts.theorems = parse_theorems(tags);
      opts.jobs = jobs;
      if (alpha_max >= 0) opts.alpha_max = alpha_max;
      if (fixed_k > 0) opts.k = fixed_k;
      IngestLog log;
      const CorpusSource src = open_corpus(input, !lenient, &log);
      std::vector<std::string> violations;
      const ScanSummary sum = scan(src, opts, [&](const ScanRecord& r) {
        if (format == "jsonl") std::cout << record_to_json(r) << "\n";
        for (const auto& e : r.errors)
          if (e.rfind("violation ", 0) == 0) violations.push_back(r.g6 + " " + e.substr(10));
      });
      for (const auto& s : log.skipped) std::cerr << "skipped " << s << "\n";
      if (format == "summary") std::cout << "source: " << input << "\n" << summary_text(sum, violations);
      return violations.empty() ? 0 : 2;
    } else if (*search) {
      IngestLog log;
      std::size_t seen = 0;
      const auto hit = search_counterexample(search_alpha, open_corpus(input, !lenient, &log), jobs, &seen);
      for (const auto& s : log.skipped) std::cerr << "skipped " << s << "\n";
      if (!hit) {
        std::cout << "none among " << seen << " graphs\n";
        return 0;
      }
      std::cout << "found " << hit->g6 << " (item " << hit->index << ", line " << hit->line << ")\n"
                << "alpha " << hit->alpha << ", longest order " << hit->longest_order << ", longest paths "
                << hit->longest_paths << ", lpt " << hit->lpt << "\n";
      return 3;
    } else if (*surgery) {
      const Graph g = parse_graph_line(graph_arg);
      const AttachmentContext ctx = attachment_context(g, parse_path(path_arg), seed);
      std::cout << "H           " << list(ctx.comp) << " (t=" << ctx.t << ")\n"
                << "attachments ";
      std::vector<Vertex> s;
      for (int i = 0; i < ctx.k(); ++i) s.push_back(ctx.s(i));
      std::cout << list(s) << "\n";
      const auto plan = find_augmentation(g, ctx);
      if (plan) {
        std::cout << "plan        " << plan->clause << " (" << to_string(plan->kind) << ")\n"
                  << "result      " << list(apply_plan_walk(g, *plan)) << "\n";
      } else {
        std::cout << "plan        none\n";
      }
      if (!kind.empty()) {
        const FiberKind fk = kind == "xy" ? FiberKind::xy_fiber : kind == "x" ? FiberKind::x_fiber : FiberKind::fiber;
        std::cout << "independent " << list(extract_independent_set(g, ctx, fk)) << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
