#pragma once
// Monte-Carlo runs of the dilution and universal distillation protocols at
// the level of Young-index measurement outcomes.

#include "entsym/spectra.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace entsym {

/// Samples Young indices with probability dim_v(lambda) * b_lambda. It is the
/// only view of the state a distillation run receives.
class BlockSampler {
 public:
  explicit BlockSampler(const BlockSpectrum& bs);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t outcomes() const noexcept { return lambdas_.size(); }
  const Partition& lambda(std::size_t index) const { return lambdas_.at(index); }
  double probability(std::size_t index) const;

  /// Inverse-CDF draw from a uniform u in [0,1).
  std::size_t index_for(double u) const;
  std::size_t sample(std::mt19937_64& rng) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Partition> lambdas_;
  std::vector<double> cdf_;
};

inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-chunks";
inline constexpr std::size_t kTrialsPerChunk = 8192;

struct TrialRecord {
  std::uint32_t outcome = 0;
  bool success = false;
  double ebits = 0.0;
};

struct ProtocolRun {
  std::string protocol;
  int n = 0;
  int d = 0;
  std::optional<double> R;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng_algorithm = kRngAlgorithm;
  /// One derived seed per chunk of kTrialsPerChunk trials.
  std::vector<std::uint64_t> chunk_seeds;
  /// Young indices referenced by TrialRecord::outcome.
  std::vector<Partition> outcomes;
  std::vector<TrialRecord> results;
};

/// Seed of chunk `index` for a run seeded with `seed`.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index);

/// Success iff d_lambda <= 2^{nR}; every trial is charged the same ebits,
/// log2 of sum over lambda |- n with d_lambda <= 2^{nR} of d_lambda * dim_u.
ProtocolRun simulate_dilution(const BlockSpectrum& bs, double R, std::int64_t trials, std::uint64_t seed,
                              int threads = 1);

/// Each trial keeps log2 d_lambda ebits from the observed Young index.
ProtocolRun simulate_distillation(const BlockSampler& sampler, std::int64_t trials, std::uint64_t seed,
                                  int threads = 1);

/// ebits charged by the dilution protocol at rate R.
double dilution_ebits(int n, int d, double R);
/// nR + d log2(n+1) + d^2 log2 n.
double dilution_ebit_bound(int n, int d, double R);

struct RunSummary {
  double success_rate = 0.0;
  double mean_ebits = 0.0;
  double mean_yield = 0.0;
  /// (level, yield) pairs: the smallest yield whose empirical CDF exceeds level.
  std::vector<std::pair<double, double>> yield_quantiles;
};

RunSummary summarize(const ProtocolRun& run, const std::vector<double>& levels = {0.001, 0.01, 0.05, 0.5, 0.95, 0.99});

}  // namespace entsym
