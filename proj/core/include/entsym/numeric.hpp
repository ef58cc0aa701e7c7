#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace entsym {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log2(2^a + 2^b), with -inf as the additive identity.
double log2_add(double a, double b) noexcept;

/// log2(2^a - 2^b) for a >= b. Returns -inf when a == b.
double log2_sub(double a, double b) noexcept;

/// log2 of a sum of 2^x over the given exponents.
double log2_sum(std::span<const double> exponents) noexcept;

/// Running log-domain accumulator.
class Log2Accumulator {
 public:
  void add(double log2_term) noexcept;
  double value() const noexcept;
  bool empty() const noexcept { return max_ == kNegInf; }

 private:
  // sum_ holds sum of 2^(x - max_) for the terms seen so far.
  double max_ = kNegInf;
  double sum_ = 0.0;
};

/// Table of log2(k!) for k in [0, size). Built once per computation and
/// passed by reference, so it needs no synchronization.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_k);

  double operator()(int k) const { return table_.at(static_cast<std::size_t>(k)); }
  int max_k() const noexcept { return static_cast<int>(table_.size()) - 1; }

  /// log2 C(n, k); -inf when k is outside [0, n].
  double log2_binomial(int n, int k) const;

  /// log2 (total! / prod_i counts_i!)
  double log2_multinomial(std::span<const int> counts) const;

 private:
  std::vector<double> table_;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(std::span<const double> q);

/// Binary entropy h(x) in bits; h(0) = h(1) = 0.
double binary_entropy(double x);

/// Relative entropy D(q||p) in bits. +infinity when q puts mass where p has none.
double relative_entropy(std::span<const double> q, std::span<const double> p);

}  // namespace entsym
