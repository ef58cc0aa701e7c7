#include "entsym/loccsim.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>

namespace entsym {

BlockSampler::BlockSampler(const BlockSpectrum& bs) : n_(bs.n), d_(bs.d) {
  double cum = 0.0;
  for (const auto& b : bs.blocks) {
    if (b.log2_b == kNegInf) continue;
    cum += std::exp2(b.log2_b + log2_big(b.dim_v));
    lambdas_.push_back(b.lambda);
    cdf_.push_back(cum);
  }
  if (lambdas_.empty()) throw InvalidArgument("block sampler: spectrum carries no mass");
  for (auto& c : cdf_) c /= cum;
  cdf_.back() = 1.0;
}

double BlockSampler::probability(std::size_t index) const {
  return cdf_.at(index) - (index == 0 ? 0.0 : cdf_[index - 1]);
}

std::size_t BlockSampler::index_for(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

std::size_t BlockSampler::sample(std::mt19937_64& rng) const {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return index_for(u);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair (seed, index).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

// Draws all outcome indices, chunk by chunk, independent of the thread count.
std::vector<std::uint32_t> draw(const BlockSampler& sampler, std::int64_t trials, std::uint64_t seed, int threads,
                                std::vector<std::uint64_t>& seeds) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  const auto total = static_cast<std::size_t>(trials);
  const std::size_t chunks = (total + kTrialsPerChunk - 1) / kTrialsPerChunk;
  seeds.resize(chunks);
  for (std::size_t c = 0; c < chunks; ++c) seeds[c] = chunk_seed(seed, c);
  std::vector<std::uint32_t> out(total);
  detail::parallel_for(chunks, threads, [&](std::size_t c) {
    std::mt19937_64 rng(seeds[c]);
    const std::size_t end = std::min(total, (c + 1) * kTrialsPerChunk);
    for (std::size_t t = c * kTrialsPerChunk; t < end; ++t) out[t] = static_cast<std::uint32_t>(sampler.sample(rng));
  });
  return out;
}

}  // namespace

double dilution_ebits(int n, int d, double R) {
  if (R < 0.0) throw InvalidArgument("rate must be non-negative");
  BigInt total = 0;
  for (const auto& lambda : enumerate_partitions(n, d)) {
    const BigInt dv = dim_v(lambda);
    if (log2_big(dv) <= n * R + 1e-12) total += dv * dim_u(lambda, d);
  }
  return log2_big(total);
}

double dilution_ebit_bound(int n, int d, double R) {
  return n * R + d * std::log2(n + 1.0) + d * d * std::log2(static_cast<double>(n));
}

ProtocolRun simulate_dilution(const BlockSpectrum& bs, double R, std::int64_t trials, std::uint64_t seed, int threads) {
  if (R < 0.0) throw InvalidArgument("rate must be non-negative");
  const BlockSampler sampler(bs);
  ProtocolRun run;
  run.protocol = "dilution";
  run.n = bs.n;
  run.d = bs.d;
  run.R = R;
  run.trials = trials;
  run.seed = seed;
  for (std::size_t i = 0; i < sampler.outcomes(); ++i) run.outcomes.push_back(sampler.lambda(i));

  std::vector<bool> admitted(sampler.outcomes());
  for (std::size_t i = 0; i < sampler.outcomes(); ++i) {
    admitted[i] = log2_big(dim_v(sampler.lambda(i))) <= bs.n * R + 1e-12;
  }
  const double ebits = dilution_ebits(bs.n, bs.d, R);
  const auto drawn = draw(sampler, trials, seed, threads, run.chunk_seeds);
  run.results.reserve(drawn.size());
  for (auto idx : drawn) run.results.push_back({idx, admitted[idx], ebits});
  return run;
}

ProtocolRun simulate_distillation(const BlockSampler& sampler, std::int64_t trials, std::uint64_t seed, int threads) {
  ProtocolRun run;
  run.protocol = "distillation";
  run.n = sampler.n();
  run.d = sampler.d();
  run.trials = trials;
  run.seed = seed;
  for (std::size_t i = 0; i < sampler.outcomes(); ++i) run.outcomes.push_back(sampler.lambda(i));

  // The Schmidt rank of the block's maximally entangled state is fixed by
  // the observed Young index alone.
  std::vector<double> kept(sampler.outcomes());
  for (std::size_t i = 0; i < sampler.outcomes(); ++i) kept[i] = log2_big(dim_v(sampler.lambda(i)));
  const auto drawn = draw(sampler, trials, seed, threads, run.chunk_seeds);
  run.results.reserve(drawn.size());
  for (auto idx : drawn) run.results.push_back({idx, true, kept[idx]});
  return run;
}

RunSummary summarize(const ProtocolRun& run, const std::vector<double>& levels) {
  RunSummary s;
  if (run.results.empty()) return s;
  std::vector<double> yields;
  yields.reserve(run.results.size());
  double successes = 0.0;
  double ebits = 0.0;
  for (const auto& t : run.results) {
    successes += t.success ? 1.0 : 0.0;
    ebits += t.ebits;
    yields.push_back(t.ebits / run.n);
  }
  const auto count = static_cast<double>(run.results.size());
  s.success_rate = successes / count;
  s.mean_ebits = ebits / count;
  s.mean_yield = s.mean_ebits / run.n;
  std::sort(yields.begin(), yields.end());
  for (double level : levels) {
    const auto k = std::min(yields.size() - 1, static_cast<std::size_t>(std::floor(level * count)));
    s.yield_quantiles.emplace_back(level, yields[k]);
  }
  return s;
}

}  // namespace entsym
