// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick one;
// the thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "singturan/multipartite.hpp"
#include "singturan/oracle.hpp"
#include "singturan/worm.hpp"

using namespace singturan;

namespace {

int threads() { return std::max(1, omp_get_max_threads()); }

void BM_EnumerateSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_graphs_serial(static_cast<int>(st.range(0))));
}
void BM_EnumerateParallel(benchmark::State& st) {
  GenOptions o;
  o.workers = threads();
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_graphs(static_cast<int>(st.range(0)), o));
  st.counters["workers"] = o.workers;
}

void BM_LabeledSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(labeled_class_count(static_cast<int>(st.range(0)), 1));
}
void BM_LabeledParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(labeled_class_count(static_cast<int>(st.range(0)), threads()));
  st.counters["workers"] = threads();
}

// Fixed-seed G(16, 0.7); C5 colourings are found only after a long search.
const Graph& worm_host() {
  static const Graph g = [] {
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.7);
    Graph h(16);
    for (int i = 0; i < 16; ++i)
      for (int j = i + 1; j < 16; ++j)
        if (coin(rng)) h.add_edge(i, j);
    return h;
  }();
  return g;
}
void BM_WormSerial(benchmark::State& st) {
  const PatternGraph c5 = PatternGraph::named("C5");
  for (auto _ : st) benchmark::DoNotOptimize(find_worm_coloring_serial(worm_host(), c5));
}
void BM_WormParallel(benchmark::State& st) {
  const PatternGraph c5 = PatternGraph::named("C5");
  for (auto _ : st) benchmark::DoNotOptimize(find_worm_coloring(worm_host(), c5, std::nullopt, threads()));
  st.counters["workers"] = threads();
}

void BM_ExactTsSerial(benchmark::State& st) {
  const PatternGraph k3 = PatternGraph::named("K3");
  for (auto _ : st) benchmark::DoNotOptimize(exact_ts(static_cast<int>(st.range(0)), k3));
}
void BM_ExactTsParallel(benchmark::State& st) {
  const PatternGraph k3 = PatternGraph::named("K3");
  GenOptions o;
  o.workers = threads();
  for (auto _ : st) benchmark::DoNotOptimize(exact_ts(static_cast<int>(st.range(0)), k3, o));
  st.counters["workers"] = o.workers;
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabeledSerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LabeledParallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WormSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WormParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactTsSerial)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactTsParallel)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
