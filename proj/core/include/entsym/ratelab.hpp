#pragma once
// Finite-n information-spectrum estimators: threshold masses, dilution
// fidelities, quantile rate estimates and the strong-converse diagnostic.

#include "entsym/spectra.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace entsym {

enum class Side { at_least, below };
enum class EstimateKind { cost_quantile, distill_quantile };

const char* to_string(EstimateKind kind) noexcept;

struct RateEstimate {
  double rate = 0.0;
  double epsilon = 0.0;
  int n = 0;
  EstimateKind kind = EstimateKind::cost_quantile;
};

struct FidelityPoint {
  double R = 0.0;
  double fidelity = 0.0;
};

struct FidelityCurve {
  int n = 0;
  std::vector<FidelityPoint> points;
};

/// Two log2-values closer than this are the same eigenvalue.
inline constexpr double kLog2TieTolerance = 1e-9;

/// Point of the rate distribution: x = -(1/n) log2 value, with the total mass
/// of all entries sharing that value.
struct RatePoint {
  double rate = 0.0;
  double log2_value = 0.0;
  double log2_multiplicity = 0.0;
  double mass = 0.0;
};

/// Entries merged by value and sorted by ascending rate.
std::vector<RatePoint> rate_distribution(const WeightedSpectrum& ws);

/// Mass of entries with value >= 2^{-nR} (at_least) or < 2^{-nR} (below).
/// Ties count as at_least.
double threshold_mass(const WeightedSpectrum& ws, double R, Side side);

/// Mass of the 2^{floor(nR)} largest eigenvalues counted with multiplicity.
double pure_dilution_fidelity(const WeightedSpectrum& ws, double R);

/// R^n: the largest S with sum_{lambda: d_lambda <= 2^{nS}} d_lambda <= 2^{nR},
/// capped at R.
double sigma_rate(const BlockSpectrum& bs, double R);

/// Mass of the blocks admitted at R^n.
double sigma_dilution_fidelity(const BlockSpectrum& bs, double R);

/// Mass of the blocks with d_lambda <= 2^{nR} (no packing constraint).
double dimension_threshold_mass(const BlockSpectrum& bs, double R);

/// Smallest R with threshold_mass(at_least) >= 1 - epsilon.
RateEstimate estimate_Ec(const WeightedSpectrum& ws, double epsilon);

/// Largest R whose mass strictly below rate R is at most epsilon.
RateEstimate estimate_Ed(const WeightedSpectrum& ws, double epsilon);

FidelityCurve pure_fidelity_curve(const WeightedSpectrum& ws, std::span<const double> rates);
FidelityCurve sigma_fidelity_curve(const BlockSpectrum& bs, std::span<const double> rates);

/// Evenly spaced rates lo, lo + step, ..., hi.
std::vector<double> rate_grid(double lo, double hi, double step);

struct ConverseRow {
  int n = 0;
  double epsilon = 0.0;
  double Ec = 0.0;
  double Ed = 0.0;
  double gap = 0.0;
};

struct ConverseReport {
  std::vector<ConverseRow> rows;
  /// Largest gap at the first and at the last n, over the epsilons.
  double first_gap = 0.0;
  double last_gap = 0.0;
  /// max - min of the gap over the epsilons at the last n.
  double epsilon_spread = 0.0;
  bool gap_shrinking = false;
  bool epsilon_insensitive = false;
  bool consistent = false;
};

inline constexpr double kEpsilonSpreadTolerance = 0.02;

/// Family must be ordered by increasing n.
ConverseReport strong_converse_report(std::span<const WeightedSpectrum> family, std::span<const double> epsilons);

}  // namespace entsym
