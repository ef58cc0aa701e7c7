#include "entsym/ratelab.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace entsym {

namespace {

constexpr double kMassSlack = 1e-12;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InvalidArgument("epsilon must lie in (0,1), got " + std::to_string(epsilon));
  }
}

void check_n(int n) {
  if (n < 1) throw InvalidArgument("spectrum has no copy count");
}

}  // namespace

const char* to_string(EstimateKind kind) noexcept {
  return kind == EstimateKind::cost_quantile ? "cost_quantile" : "distill_quantile";
}

std::vector<RatePoint> rate_distribution(const WeightedSpectrum& ws) {
  check_n(ws.n);
  std::vector<SpectrumEntry> sorted;
  sorted.reserve(ws.entries.size());
  for (const auto& e : ws.entries) {
    if (e.log2_value != kNegInf) sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.log2_value > b.log2_value; });

  std::vector<RatePoint> out;
  for (const auto& e : sorted) {
    if (!out.empty() && out.back().log2_value - e.log2_value <= kLog2TieTolerance) {
      out.back().log2_multiplicity = log2_add(out.back().log2_multiplicity, e.log2_multiplicity);
      continue;
    }
    out.push_back({std::max(0.0, -e.log2_value / ws.n), e.log2_value, e.log2_multiplicity, 0.0});
  }
  for (auto& p : out) p.mass = std::exp2(p.log2_value + p.log2_multiplicity);
  return out;
}

double threshold_mass(const WeightedSpectrum& ws, double R, Side side) {
  check_n(ws.n);
  const double cut = -ws.n * R - kLog2TieTolerance;
  Log2Accumulator above;
  Log2Accumulator under;
  for (const auto& e : ws.entries) {
    if (e.log2_value == kNegInf) continue;
    (e.log2_value >= cut ? above : under).add(e.log2_value + e.log2_multiplicity);
  }
  return std::exp2((side == Side::at_least ? above : under).value());
}

double pure_dilution_fidelity(const WeightedSpectrum& ws, double R) {
  if (R < 0.0) throw InvalidArgument("rate must be non-negative");
  const double log2_rank = std::floor(ws.n * R + 1e-9);
  double taken = kNegInf;
  double fidelity = 0.0;
  for (const auto& p : rate_distribution(ws)) {
    const double after = log2_add(taken, p.log2_multiplicity);
    if (after <= log2_rank + 1e-12) {
      fidelity += p.mass;
      taken = after;
      continue;
    }
    if (taken < log2_rank) fidelity += std::exp2(log2_sub(log2_rank, taken) + p.log2_value);
    break;
  }
  return std::min(1.0, fidelity);
}

namespace {

struct DimGroup {
  BigInt dim;
  BigInt total_dim;
  double mass = 0.0;
};

// Blocks of the state's support grouped by d_lambda, ascending.
std::vector<DimGroup> dimension_groups(const BlockSpectrum& bs) {
  std::map<BigInt, DimGroup> groups;
  for (const auto& b : bs.blocks) {
    if (b.log2_b == kNegInf) continue;
    auto& g = groups[b.dim_v];
    g.dim = b.dim_v;
    g.total_dim += b.dim_v;
    g.mass += std::exp2(b.log2_b + log2_big(b.dim_v));
  }
  std::vector<DimGroup> out;
  for (auto& [dim, g] : groups) out.push_back(std::move(g));
  return out;
}

struct Packing {
  double rate = 0.0;
  double mass = 0.0;
};

Packing greedy_packing(const BlockSpectrum& bs, double R) {
  if (R < 0.0) throw InvalidArgument("rate must be non-negative");
  check_n(bs.n);
  const double budget = bs.n * R + 1e-12;
  BigInt used = 0;
  Packing out{R, 0.0};
  for (const auto& g : dimension_groups(bs)) {
    if (log2_big(used + g.total_dim) > budget) {
      out.rate = std::min(R, log2_big(g.dim) / bs.n);
      return out;
    }
    used += g.total_dim;
    out.mass += g.mass;
  }
  return out;
}

}  // namespace

double sigma_rate(const BlockSpectrum& bs, double R) { return greedy_packing(bs, R).rate; }

double sigma_dilution_fidelity(const BlockSpectrum& bs, double R) {
  return std::min(1.0, greedy_packing(bs, R).mass);
}

double dimension_threshold_mass(const BlockSpectrum& bs, double R) {
  check_n(bs.n);
  double mass = 0.0;
  for (const auto& g : dimension_groups(bs)) {
    if (log2_big(g.dim) <= bs.n * R + 1e-12) mass += g.mass;
  }
  return mass;
}

RateEstimate estimate_Ec(const WeightedSpectrum& ws, double epsilon) {
  check_epsilon(epsilon);
  const auto dist = rate_distribution(ws);
  if (dist.empty()) throw InvalidArgument("estimate_Ec: empty spectrum");
  double cum = 0.0;
  for (const auto& p : dist) {
    cum += p.mass;
    if (cum >= 1.0 - epsilon - kMassSlack) return {p.rate, epsilon, ws.n, EstimateKind::cost_quantile};
  }
  return {dist.back().rate, epsilon, ws.n, EstimateKind::cost_quantile};
}

RateEstimate estimate_Ed(const WeightedSpectrum& ws, double epsilon) {
  check_epsilon(epsilon);
  const auto dist = rate_distribution(ws);
  if (dist.empty()) throw InvalidArgument("estimate_Ed: empty spectrum");
  double cum = 0.0;
  for (const auto& p : dist) {
    cum += p.mass;
    if (cum > epsilon + kMassSlack) return {p.rate, epsilon, ws.n, EstimateKind::distill_quantile};
  }
  return {dist.back().rate, epsilon, ws.n, EstimateKind::distill_quantile};
}

FidelityCurve pure_fidelity_curve(const WeightedSpectrum& ws, std::span<const double> rates) {
  FidelityCurve curve;
  curve.n = ws.n;
  for (double R : rates) curve.points.push_back({R, pure_dilution_fidelity(ws, R)});
  return curve;
}

FidelityCurve sigma_fidelity_curve(const BlockSpectrum& bs, std::span<const double> rates) {
  FidelityCurve curve;
  curve.n = bs.n;
  for (double R : rates) curve.points.push_back({R, sigma_dilution_fidelity(bs, R)});
  return curve;
}

std::vector<double> rate_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || hi < lo || lo < 0.0) throw InvalidArgument("rate grid needs 0 <= lo <= hi and step > 0");
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

ConverseReport strong_converse_report(std::span<const WeightedSpectrum> family, std::span<const double> epsilons) {
  if (family.empty() || epsilons.empty()) throw InvalidArgument("converse report needs spectra and epsilons");
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (family[i].n <= family[i - 1].n) throw InvalidArgument("converse report: family must increase in n");
  }
  ConverseReport report;
  std::vector<double> first;
  std::vector<double> last;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (double eps : epsilons) {
      const double ec = estimate_Ec(family[i], eps).rate;
      const double ed = estimate_Ed(family[i], eps).rate;
      report.rows.push_back({family[i].n, eps, ec, ed, ec - ed});
      if (i == 0) first.push_back(ec - ed);
      if (i + 1 == family.size()) last.push_back(ec - ed);
    }
  }
  report.first_gap = *std::max_element(first.begin(), first.end());
  report.last_gap = *std::max_element(last.begin(), last.end());
  report.epsilon_spread = report.last_gap - *std::min_element(last.begin(), last.end());
  report.gap_shrinking = report.last_gap <= report.first_gap + 1e-12;
  report.epsilon_insensitive = report.epsilon_spread <= kEpsilonSpreadTolerance;
  report.consistent = report.gap_shrinking && report.epsilon_insensitive;
  return report;
}

}  // namespace entsym
