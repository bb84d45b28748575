#include <benchmark/benchmark.h>

#include "cbpsk/analysis.hpp"
#include "cbpsk/cocktail.hpp"
#include "cbpsk/modulation.hpp"
#include "cbpsk/montecarlo.hpp"

namespace {

void BM_TwoPointRate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::mi_bpsk(1.0));
  }
}
BENCHMARK(BM_TwoPointRate);

void BM_TwoPointRateAdaptive(benchmark::State& state) {
  const auto quad = cbpsk::QuadratureSpec::adaptive(1e-12, 1e-12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::mi_bpsk(1.0, quad));
  }
}
BENCHMARK(BM_TwoPointRateAdaptive);

void BM_RateDerivative(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::mi_bpsk_derivative(0.5));
  }
}
BENCHMARK(BM_RateDerivative);

void BM_TensorRate8Psk(benchmark::State& state) {
  const cbpsk::Constellation c = cbpsk::Constellation::psk8();
  const cbpsk::AwgnSpec noise(1.0, cbpsk::Dimensionality::complex);
  const auto quad = cbpsk::QuadratureSpec::hermite(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::mutual_information(c, noise, quad));
  }
}
BENCHMARK(BM_TensorRate8Psk)->Arg(32)->Arg(96);

void BM_LayeredAdrSum(benchmark::State& state) {
  const cbpsk::CocktailParams p = cbpsk::params_for_ratio(1.0, 0.9, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::adr_sum(p));
  }
}
BENCHMARK(BM_LayeredAdrSum);

void BM_McMutualInfo(benchmark::State& state) {
  const cbpsk::Constellation c = cbpsk::Constellation::bpsk(1.0);
  const cbpsk::AwgnSpec noise(1.0, cbpsk::Dimensionality::complex);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::simulate_mi(c, noise, 65536, 1, 1));
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_McMutualInfo);

void BM_McSicBlock(benchmark::State& state) {
  const cbpsk::CocktailParams p(1.0, 0.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cbpsk::simulate_cocktail_sic(p, 65536, 1, 1));
  }
  state.SetItemsProcessed(state.iterations() * 65536);
}
BENCHMARK(BM_McSicBlock);

}  // namespace

BENCHMARK_MAIN();
