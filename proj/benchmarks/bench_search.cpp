#include <benchmark/benchmark.h>

#include "hampow/experiments.hpp"
#include "hampow/gadgets.hpp"
#include "hampow/graph.hpp"
#include "hampow/search.hpp"

namespace {

using namespace hampow;

void BM_SolverOnCyclePower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = power_cycle(n, 2);
  SearchBudget budget;
  budget.max_nodes = 100'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_power_ham_cycle(g, 2, budget));
  }
}
BENCHMARK(BM_SolverOnCyclePower)->Arg(24)->Arg(48)->Arg(96);

void BM_SolverOnAugmentedLowerBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LowerBoundSpec spec{n, 1, Rational(1, 16)};
  const Graph base = lower_bound_graph(spec);
  SearchBudget budget;
  budget.max_nodes = 10'000'000;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const Graph h = union_graphs(base, sample_gnp(n, 4.0 / n, seed++));
    benchmark::DoNotOptimize(contains_power_ham_cycle(h, 2, budget));
  }
}
BENCHMARK(BM_SolverOnAugmentedLowerBound)->Arg(24)->Arg(48);

void BM_TriangleCount(benchmark::State& state) {
  const Graph g = sample_gnp(static_cast<int>(state.range(0)), 0.1, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_cliques(g, 3));
  }
}
BENCHMARK(BM_TriangleCount)->Arg(200)->Arg(400);

void BM_SampleGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gnp(n, 0.05, seed++));
  }
}
BENCHMARK(BM_SampleGnp)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
