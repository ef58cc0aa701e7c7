#pragma once
// Error exponents of entanglement dilution: the clone-1 output against the
// i.i.d. benchmark, and the inverse rate-exponent trade-off.

#include "entsym/budget.hpp"
#include "entsym/cloning.hpp"
#include "entsym/prob.hpp"

#include <vector>

namespace entsym {

struct ExponentProblem {
  double R = 0.0;
  double r = 1.0;
  ProbVector p;
  int grid = 2001;
  double tol = 1e-6;
};

struct ExponentResult {
  double value = 0.0;
  std::vector<double> argmin_q;
  std::vector<double> argmin_qprime;
};

/// h(1/r) - sum_i q_i h(q'_i / (r q_i)) + D(q'||p) / r. +inf when q' puts
/// mass outside the support of p; requires q'_i <= r q_i.
double clone_exponent_objective(std::span<const double> q, std::span<const double> qprime, double r,
                                const ProbVector& p);

/// min over H(q) >= R and normalized q' with q'_i <= r q_i of the objective.
/// Throws Infeasible for R > log2 d and UnsupportedDimension for d > 3.
ExponentResult clone_dilution_exponent(const ExponentProblem& problem);

/// min_{H(q) >= R} D(q||p).
double iid_dilution_exponent(double R, const ProbVector& p, int grid = 2001);

/// Finite-m value of min_{lambda: H(lambda/m) >= R} [-(1/m) log2 max_k c_lambda,k - H(lambda/m)]
/// from the exact clone-1 eigenvalues.
double finite_m_exponent_oracle(const CloneParams& params, double R, const Budget& budget = {});

struct TradeoffResult {
  /// Smallest rate whose clone exponent reaches eta.
  double rate = 0.0;
  /// eta exceeds the exponent at R = log2 d; rate is then log2 d.
  bool saturated = false;
  double max_exponent = 0.0;
};

TradeoffResult rate_exponent_tradeoff(double eta, double r, const ProbVector& p, int grid = 2001,
                                      double tol = 1e-6);

}  // namespace entsym
