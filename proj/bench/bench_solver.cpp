// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "p7c/cleaning.hpp"
#include "p7c/expand.hpp"
#include "p7c/oracle.hpp"
#include "p7c/reduce.hpp"
#include "p7c/solver.hpp"
#include "p7c/tripod.hpp"

namespace {

using namespace p7c;

std::vector<Graph> corpus(int count, int n) {
  std::vector<Graph> graphs;
  for (int i = 0; i < count; ++i)
    graphs.push_back(oracle::gen_instance(n, 0.2 + 0.15 * (i % 3), 500 + static_cast<std::uint64_t>(i)).graph);
  return graphs;
}

// Every restriction batch of a few graphs that reach the palette stage.
struct Batches {
  std::vector<Graph> graphs;
  std::vector<std::vector<Restriction>> batches;
};

const Batches& restriction_batches() {
  static const Batches b = [] {
    Batches out;
    for (std::uint64_t seed = 0; out.batches.size() < 200 && seed < 5000; ++seed) {
      Graph g = oracle::gen_instance(14, 0.2 + 0.15 * static_cast<double>(seed % 3), seed).graph;
      if (!is_connected(g)) continue;
      Graph cur = g;
      while (true) {
        NormalizeResult nr = normalize(cur);
        if (nr.kind != NormalizeResult::Kind::kNormal) break;
        CleanResult cr = clean(nr.graph, nr.tripod);
        if (cr.kind == CleanResult::Kind::kNotThreeColorable) break;
        cur = cr.graph;
        if (cr.kind != CleanResult::Kind::kClean) continue;
        TripodPartition part = partition_AXYZ(cur, cr.tripod);
        for (const auto& rp : build_palettes(cur, part)) {
          out.graphs.push_back(cur);
          out.batches.push_back(expand_palette(cur, rp));
        }
        break;
      }
    }
    return out;
  }();
  return b;
}

void BM_FirstColorableSerial(benchmark::State& state) {
  const Batches& b = restriction_batches();
  for (auto _ : state)
    for (std::size_t i = 0; i < b.batches.size(); ++i)
      benchmark::DoNotOptimize(first_colorable_serial(b.graphs[i], b.batches[i]));
  state.counters["batches"] = static_cast<double>(b.batches.size());
}
BENCHMARK(BM_FirstColorableSerial)->Unit(benchmark::kMillisecond);

void BM_FirstColorableParallel(benchmark::State& state) {
  const Batches& b = restriction_batches();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (std::size_t i = 0; i < b.batches.size(); ++i)
      benchmark::DoNotOptimize(first_colorable_parallel(b.graphs[i], b.batches[i], jobs));
}
BENCHMARK(BM_FirstColorableParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveBatchSerial(benchmark::State& state) {
  static const std::vector<Graph> graphs = corpus(200, 12);
  for (auto _ : state) benchmark::DoNotOptimize(solve_batch_serial(graphs));
}
BENCHMARK(BM_SolveBatchSerial)->Unit(benchmark::kMillisecond);

void BM_SolveBatchParallel(benchmark::State& state) {
  static const std::vector<Graph> graphs = corpus(200, 12);
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_batch_parallel(graphs, jobs));
}
BENCHMARK(BM_SolveBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveBySize(benchmark::State& state) {
  const std::vector<Graph> graphs = corpus(50, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(solve(g));
}
BENCHMARK(BM_SolveBySize)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
