#include <benchmark/benchmark.h>

#include "lkrep/forms.hpp"
#include "lkrep/spectra.hpp"

namespace {

void BM_InvariantForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = lkrep::scan_q(0.1, 0.05);
  const auto t = lkrep::scan_t(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(lkrep::invariant_form(n, q, t));
}
BENCHMARK(BM_InvariantForm)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TorusRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lkrep::torus_rank_test(n, lkrep::scan_q(0.1, 0.05), lkrep::scan_t(0.1)));
  }
}
BENCHMARK(BM_TorusRank)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_KroneckerSearch(benchmark::State& state) {
  std::vector<lkrep::Complex> v;
  for (int i = 0; i < 10; ++i) v.push_back(std::polar(1.0, 0.37 * i + 0.01 * i * i));
  const auto e = lkrep::EigMultiset::from_values(v);
  for (auto _ : state) benchmark::DoNotOptimize(lkrep::kronecker_factorizations(e, 2, 5));
}
BENCHMARK(BM_KroneckerSearch)->Unit(benchmark::kMicrosecond);

}  // namespace
