#include <benchmark/benchmark.h>

#include "hampow/decomposition.hpp"
#include "hampow/densities.hpp"
#include "hampow/gadgets.hpp"

namespace {

using namespace hampow;

void BM_PhiEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = power_path(n, 3);
  const RandomModel model = RandomModel::with_scale(1000, 1.0, -0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(g, model, 16));
  }
}
BENCHMARK(BM_PhiEnumeration)->Arg(12)->Arg(16);

void BM_MaxDensity(benchmark::State& state) {
  const Graph g = braid(3, 2, static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_density_m(g, 16));
  }
}
BENCHMARK(BM_MaxDensity)->Arg(3)->Arg(4)->Arg(5);

void BM_DecomposeAndVerify(benchmark::State& state) {
  const auto params = ProblemParams::checked(2, 3, 2);
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_decomposition(decompose_path(params, t)));
  }
}
BENCHMARK(BM_DecomposeAndVerify)->Arg(3)->Arg(8);

void BM_BlowUp(benchmark::State& state) {
  const Graph f = power_cycle(8, 2);
  const std::vector<int> sizes(8, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(blow_up(f, sizes));
  }
}
BENCHMARK(BM_BlowUp)->Arg(8)->Arg(32);

}  // namespace
