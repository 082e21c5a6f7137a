#include <benchmark/benchmark.h>

#include "lkrep/lie_dims.hpp"

namespace {

void BM_WeylE6(benchmark::State& state) {
  const lkrep::Diagram e6{lkrep::DiagramType::E, 6};
  const auto roots = lkrep::positive_roots(e6);
  const std::vector<int> labels{1, 2, 0, 1, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(lkrep::weyl_dimension(roots, labels));
}
BENCHMARK(BM_WeylE6)->Unit(benchmark::kMicrosecond);

void BM_DirectE6(benchmark::State& state) {
  const std::vector<int> labels{1, 2, 0, 1, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(lkrep::e6_dimension_direct(labels));
}
BENCHMARK(BM_DirectE6)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& state) {
  const lkrep::Diagram a{lkrep::DiagramType::A, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(lkrep::enumerate_irreps_below(a, 5000, false));
}
BENCHMARK(BM_Enumerate)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
