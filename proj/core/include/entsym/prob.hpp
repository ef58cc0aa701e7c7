#pragma once

#include "entsym/bigint.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entsym {

/// Probability vector on d symbols: the squared Schmidt coefficients of the
/// input pure state. Optionally carries exact rational entries, which enable
/// exact-arithmetic cross-checks downstream.
class ProbVector {
 public:
  /// Validates entries in [0,1] summing to 1 within 1e-12.
  explicit ProbVector(std::vector<double> probs);
  /// Exact entries; must sum to exactly 1.
  explicit ProbVector(std::vector<Rational> exact);

  /// Accepts "0.7,0.3" or "7/10,3/10". If every entry is a fraction (or an
  /// integer), the exact form is kept.
  static ProbVector parse(std::string_view text);

  int dim() const noexcept { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_.at(static_cast<std::size_t>(i)); }
  std::span<const double> values() const noexcept { return probs_; }

  bool has_exact() const noexcept { return exact_.has_value(); }
  std::span<const Rational> exact() const;

  /// Entries with p_i > 0, in original order.
  ProbVector support() const;
  int support_size() const noexcept;

  std::string to_string() const;

 private:
  std::vector<double> probs_;
  std::optional<std::vector<Rational>> exact_;
};

}  // namespace entsym
