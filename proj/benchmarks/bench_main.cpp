#include <benchmark/benchmark.h>

#include "tribo/abelian.hpp"
#include "tribo/numeration.hpp"
#include "tribo/spectral.hpp"
#include "tribo/word.hpp"

namespace {

void BM_FixedPointPrefix(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    tribo::WordBuffer buffer = tribo::tribonacci_buffer(len);
    benchmark::DoNotOptimize(buffer.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FixedPointPrefix)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 23);

void BM_CertifiedScan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tribo::WordBuffer buffer = tribo::tribonacci_buffer(tribo::SaturationRule{}.buffer_length_for(n));
  const tribo::FactorScanner scanner(buffer);
  for (auto _ : state) {
    benchmark::DoNotOptimize(scanner.scan(n, {}).factor_count());
  }
}
BENCHMARK(BM_CertifiedScan)->Arg(100)->Arg(1000)->Arg(4000);

void BM_AbelianComplexity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tribo::WordBuffer buffer = tribo::tribonacci_buffer(tribo::SaturationRule{}.buffer_length_for(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribo::abelian_complexity(buffer, n));
  }
}
BENCHMARK(BM_AbelianComplexity)->Arg(100)->Arg(1000)->Arg(3914);

void BM_DiscrepancySpectral(benchmark::State& state) {
  const tribo::SpectralData sd = tribo::compute_spectral_data();
  std::uint64_t n = 987654;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribo::discrepancy_spectral(n, 0, sd));
    n = n * 6364136223846793005ULL % 1000000007ULL;
  }
}
BENCHMARK(BM_DiscrepancySpectral);

void BM_ZeckendorfRoundTrip(benchmark::State& state) {
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tribo::zeckendorf_decode(tribo::zeckendorf_encode(n++)));
  }
}
BENCHMARK(BM_ZeckendorfRoundTrip);

}  // namespace

BENCHMARK_MAIN();
