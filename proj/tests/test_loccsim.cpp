#include "entsym/loccsim.hpp"

#include "entsym/ratelab.hpp"
#include "entsym/spectra.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

using namespace entsym;

namespace {

ProbVector pv(std::vector<double> v) { return ProbVector(std::move(v)); }

BlockSpectrum product_state(int n) {
  BlockSpectrum bs;
  bs.n = n;
  bs.d = 2;
  Block b;
  b.lambda = Partition({n, 0});
  b.dim_u = n + 1;
  b.dim_v = 1;
  bs.blocks.push_back(b);
  return bs;
}

}  // namespace

TEST(Sampler, InverseCdf) {
  const auto bs = iid_block_spectrum(pv({0.5, 0.5}), 2);
  const BlockSampler sampler(bs);
  ASSERT_EQ(sampler.outcomes(), 2u);
  EXPECT_NEAR(sampler.probability(0), 0.75, 1e-15);
  EXPECT_EQ(sampler.index_for(0.0), 0u);
  EXPECT_EQ(sampler.index_for(0.7499), 0u);
  EXPECT_EQ(sampler.index_for(0.7501), 1u);
  EXPECT_EQ(sampler.index_for(0.999999), 1u);
}

TEST(Sampler, FrequenciesWithinFourSigma) {
  const auto bs = iid_block_spectrum(pv({0.6, 0.4}), 12);
  const BlockSampler sampler(bs);
  const std::int64_t trials = 200000;
  const auto run = simulate_distillation(sampler, trials, 99);
  std::vector<std::int64_t> counts(sampler.outcomes(), 0);
  for (const auto& t : run.results) ++counts[t.outcome];
  for (std::size_t i = 0; i < sampler.outcomes(); ++i) {
    const double p = sampler.probability(i);
    const double sigma = std::sqrt(trials * p * (1 - p));
    EXPECT_LE(std::abs(counts[i] - trials * p), 4 * sigma + 1) << i;
  }
}

TEST(Dilution, ProductStateAlwaysSucceeds) {
  const auto run = simulate_dilution(product_state(8), 0.3, 1000, 5);
  for (const auto& t : run.results) {
    EXPECT_TRUE(t.success);
    EXPECT_NEAR(t.ebits, std::log2(9.0), 1e-12);
  }
  EXPECT_EQ(run.results.size(), 1000u);
  EXPECT_EQ(run.protocol, "dilution");
  ASSERT_TRUE(run.R.has_value());
}

TEST(Dilution, SuccessRateMatchesExactMass) {
  const auto bs = iid_block_spectrum(pv({0.7, 0.3}), 50);
  const double R = 0.95;
  const std::int64_t trials = 100000;
  const auto run = simulate_dilution(bs, R, trials, 2024, 4);
  const double exact = dimension_threshold_mass(bs, R);
  const double rate = summarize(run).success_rate;
  const double sigma = std::sqrt(exact * (1 - exact) / trials);
  EXPECT_LE(std::abs(rate - exact), 3 * sigma);
}

TEST(Dilution, EbitsWithinBound) {
  for (int n : {2, 10, 50, 150}) {
    for (const auto& p : {pv({0.7, 0.3}), pv({0.5, 0.3, 0.2})}) {
      for (double R : {0.0, 0.4, 0.9, 1.5}) {
        const double e = dilution_ebits(n, p.dim(), R);
        EXPECT_LE(e, dilution_ebit_bound(n, p.dim(), R) + 1e-9) << n << " " << R;
      }
    }
  }
}

TEST(Distillation, ProductStateYieldsNothing) {
  const auto run = simulate_distillation(BlockSampler(product_state(10)), 500, 3);
  for (const auto& t : run.results) EXPECT_EQ(t.ebits, 0.0);
  EXPECT_FALSE(run.R.has_value());
}

// Exact b-measure expectation of (1/n) log2 d_lambda for the uniform qubit at
// n=100 is 0.923901 (binomial sum over two-row diagrams), well short of 1 bit.
TEST(Distillation, UniformMeanYieldMatchesExactExpectation) {
  const int n = 100;
  double exact = 0.0;
  for (int k = 0; k <= n / 2; ++k) {
    const double dv = static_cast<double>(oracle::binomial(n, k) - (k > 0 ? oracle::binomial(n, k - 1) : 0.0L));
    exact += dv * (n - 2 * k + 1) * std::exp2(-n) * std::log2(dv) / n;
  }
  EXPECT_NEAR(exact, 0.923901, 1e-6);
  const auto bs = iid_block_spectrum(pv({0.5, 0.5}), n);
  const auto run = simulate_distillation(BlockSampler(bs), 100000, 11, 4);
  EXPECT_NEAR(summarize(run).mean_yield, exact, 5e-4);
}

TEST(Distillation, YieldSupportIsBlockDimensions) {
  const auto bs = iid_block_spectrum(pv({0.7, 0.3}), 30);
  std::set<double> allowed;
  for (const auto& b : bs.blocks) allowed.insert(log2_big(b.dim_v));
  const auto run = simulate_distillation(BlockSampler(bs), 20000, 17);
  for (const auto& t : run.results) EXPECT_TRUE(allowed.contains(t.ebits));
}

TEST(Distillation, QuantileTracksDistillableEstimate) {
  const auto bs = iid_block_spectrum(pv({0.7, 0.3}), 200);
  const auto run = simulate_distillation(BlockSampler(bs), 100000, 7, 4);
  const auto s = summarize(run, {0.01});
  const double ed = estimate_Ed(flatten(bs, Measure::b_measure), 0.01).rate;
  EXPECT_NEAR(s.yield_quantiles.at(0).second, ed, 0.05);
}

TEST(Determinism, SameSeedSameRecordsAnyThreadCount) {
  const auto bs = iid_block_spectrum(pv({0.7, 0.3}), 40);
  const auto a = simulate_dilution(bs, 0.9, 30000, 123, 1);
  const auto b = simulate_dilution(bs, 0.9, 30000, 123, 3);
  ASSERT_EQ(a.results.size(), b.results.size());
  EXPECT_EQ(a.chunk_seeds, b.chunk_seeds);
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].outcome, b.results[i].outcome);
    EXPECT_EQ(a.results[i].success, b.results[i].success);
    EXPECT_EQ(a.results[i].ebits, b.results[i].ebits);
  }
  const auto c = simulate_dilution(bs, 0.9, 30000, 124, 1);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < a.results.size(); ++i) differ += a.results[i].outcome != c.results[i].outcome;
  EXPECT_GT(differ, 0u);
  EXPECT_EQ(a.rng_algorithm, std::string(kRngAlgorithm));
  EXPECT_EQ(a.chunk_seeds.size(), (30000 + kTrialsPerChunk - 1) / kTrialsPerChunk);
  EXPECT_EQ(a.chunk_seeds[0], chunk_seed(123, 0));
}

TEST(Summary, QuantileConvention) {
  ProtocolRun run;
  run.n = 10;
  for (int i = 0; i < 100; ++i) run.results.push_back({0, true, static_cast<double>(i)});
  run.trials = 100;
  const auto s = summarize(run, {0.0, 0.25, 0.99});
  EXPECT_DOUBLE_EQ(s.yield_quantiles[0].second, 0.0);
  EXPECT_DOUBLE_EQ(s.yield_quantiles[1].second, 2.5);
  EXPECT_DOUBLE_EQ(s.yield_quantiles[2].second, 9.9);
  EXPECT_DOUBLE_EQ(s.success_rate, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_ebits, 49.5);
}
