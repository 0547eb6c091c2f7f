#include <benchmark/benchmark.h>

#include "capset/analysis.hpp"
#include "capset/greedy.hpp"
#include "capset/incidence.hpp"

namespace {

using namespace capset;

void BM_RunGreedy(benchmark::State& state) {
  const Dimension n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_greedy(n, TieBreakPolicy::random(7)));
  }
}
BENCHMARK(BM_RunGreedy)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

// Full removal sequence in index order, without the max-count scan.
void BM_RemoveAll(benchmark::State& state) {
  const Dimension n(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    IncidenceState s(n);
    for (std::uint32_t x = 0; x < n.num_points(); ++x) s.remove(Point{x});
    benchmark::DoNotOptimize(s.alive_lines());
  }
  state.SetItemsProcessed(state.iterations() * n.num_points());
}
BENCHMARK(BM_RemoveAll)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_IsCapset(benchmark::State& state) {
  const Dimension n(static_cast<int>(state.range(0)));
  const PointSet c = run_greedy(n).result;
  for (auto _ : state) benchmark::DoNotOptimize(is_capset(c));
}
BENCHMARK(BM_IsCapset)->DenseRange(4, 10, 2);

void BM_VerifyStructure(benchmark::State& state) {
  const Dimension n(static_cast<int>(state.range(0)));
  const PointSet c = run_greedy(n, TieBreakPolicy::random(3)).result;
  for (auto _ : state) benchmark::DoNotOptimize(verify_greedy_structure(c));
}
BENCHMARK(BM_VerifyStructure)->DenseRange(4, 8)->Unit(benchmark::kMicrosecond);

void BM_MaxCapset3(benchmark::State& state) {
  for (auto _ : state) {
    // Bypass the cache by completing the singleton {0}.
    const PointSet start(Dimension(3), {Point{0}});
    benchmark::DoNotOptimize(
        complete_capset(start, CompletionMode::kExhaustiveMax));
  }
}
BENCHMARK(BM_MaxCapset3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
