#include "entsym/cloning.hpp"
#include "entsym/exponents.hpp"
#include "entsym/loccsim.hpp"
#include "entsym/ratelab.hpp"
#include "entsym/repthy.hpp"
#include "entsym/spectra.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace entsym;

namespace {

ProbVector binary() { return ProbVector(std::vector<double>{0.7, 0.3}); }
ProbVector ternary() { return ProbVector(std::vector<double>{0.5, 0.3, 0.2}); }

void BM_DimCompleteness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigInt total = 0;
    for (const auto& lambda : enumerate_partitions(n, 3)) total += dim_u(lambda, 3) * dim_v(lambda);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_DimCompleteness)->Arg(20)->Arg(60);

void BM_IidBlockSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iid_block_spectrum(binary(), n));
}
BENCHMARK(BM_IidBlockSpectrum)->Arg(100)->Arg(1000);

void BM_IidBlockSpectrumTernary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iid_block_spectrum(ternary(), n));
}
BENCHMARK(BM_IidBlockSpectrumTernary)->Arg(50)->Arg(150);

void BM_Clone1Spectrum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clone1_spectrum(CloneParams::from_ratio(m, 2.0, binary())));
}
BENCHMARK(BM_Clone1Spectrum)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Clone2Spectrum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clone2_spectrum(CloneParams::from_ratio(m, 2.0, binary())));
}
BENCHMARK(BM_Clone2Spectrum)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_RateEstimates(benchmark::State& state) {
  const auto ws = clone1_spectrum(CloneParams::from_ratio(200, 2.0, binary()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_Ec(ws, 0.01));
    benchmark::DoNotOptimize(estimate_Ed(ws, 0.01));
  }
}
BENCHMARK(BM_RateEstimates);

void BM_CloneExponent(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto p = d == 2 ? binary() : ternary();
  // Between H(p) and log2 d, where the exponent is positive.
  const double R = d == 2 ? 0.95 : 1.55;
  for (auto _ : state) benchmark::DoNotOptimize(clone_dilution_exponent({R, 2.0, p, 2001, 1e-6}));
}
BENCHMARK(BM_CloneExponent)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Distillation(benchmark::State& state) {
  const BlockSampler sampler(iid_block_spectrum(binary(), 200));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_distillation(sampler, state.range(0), 42, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Distillation)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
