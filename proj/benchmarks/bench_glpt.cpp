#include <benchmark/benchmark.h>

#include "glpt/canonical.hpp"
#include "glpt/constructions.hpp"
#include "glpt/harness.hpp"
#include "glpt/longest_path.hpp"
#include "glpt/params.hpp"
#include "glpt/transversal.hpp"

using namespace glpt;

namespace {

void BM_LongestOrderG1(benchmark::State& state) {
  const Graph g = g1(1, 16);
  for (auto _ : state) benchmark::DoNotOptimize(longest_path_order(g));
}
BENCHMARK(BM_LongestOrderG1)->Unit(benchmark::kMillisecond);

void BM_GallaiG2(benchmark::State& state) {
  const Graph g = g2(1, 16);
  for (auto _ : state) benchmark::DoNotOptimize(gallai_vertices(g));
}
BENCHMARK(BM_GallaiG2)->Unit(benchmark::kMillisecond);

void BM_EnumerateG0(benchmark::State& state) {
  const Graph g = canonical_graph("g0");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_longest_paths(g));
}
BENCHMARK(BM_EnumerateG0)->Unit(benchmark::kMicrosecond);

void BM_HeldKarpVsSearch(benchmark::State& state) {
  const Graph g = ham_reg(6);
  const VertexSet all = g.vertices();
  const bool dp = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(dp ? held_karp_order(g, all) : search_order(g, all));
  state.SetLabel(dp ? "subset DP" : "pruned search");
}
BENCHMARK(BM_HeldKarpVsSearch)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = g2(1, 16);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Unit(benchmark::kMillisecond);

void BM_Connectivity(benchmark::State& state) {
  const Graph g = star_blowup(3, 6);
  for (auto _ : state) benchmark::DoNotOptimize(connectivity(g));
}
BENCHMARK(BM_Connectivity)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_connected(n));
}
BENCHMARK(BM_Generate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_ScanAllTheorems(benchmark::State& state) {
  ScanOptions opts;
  opts.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  for (auto _ : state) benchmark::DoNotOptimize(scan(open_corpus("gen:=7", true), opts, [](const ScanRecord&) {}));
}
BENCHMARK(BM_ScanAllTheorems)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
