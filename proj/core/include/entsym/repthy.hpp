#pragma once

// Young indices and the Schur-Weyl dimension data attached to them.

#include "entsym/bigint.hpp"
#include "entsym/prob.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace entsym {

/// A partition lambda of n with exactly d entries (trailing zeros kept).
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are non-increasing and non-negative.
  explicit Partition(std::vector<int> parts);
  /// Pads with zeros up to length d; throws if parts has more than d nonzero entries.
  static Partition padded(std::vector<int> parts, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  std::span<const int> parts() const noexcept { return parts_; }
  /// Number of nonzero rows.
  int length() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Composition of `total` into d non-negative parts (a type class index).
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> counts);

  int total() const noexcept { return total_; }
  int d() const noexcept { return static_cast<int>(counts_.size()); }
  int operator[](int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  std::span<const int> counts() const noexcept { return counts_; }

  /// Counts sorted non-increasingly, as a partition.
  Partition sorted() const;
  std::string to_string() const;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector& a, const TypeVector& b) { return a.counts_ <=> b.counts_; }

 private:
  std::vector<int> counts_;
  int total_ = 0;
};

/// Every lambda |- n with at most d parts, in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int d);

/// Number of partitions of n with at most d parts, by the standard recurrence.
std::int64_t count_partitions(int n, int d);

/// Calls fn for every composition of total into d parts, in
/// reverse-lexicographic order.
void for_each_composition(int total, int d, const std::function<void(const TypeVector&)>& fn);

/// Number of compositions, C(total + d - 1, d - 1), saturating at INT64_MAX.
std::int64_t count_compositions(int total, int d);

/// Dimension of the unitary-group irrep U_lambda on C^d.
BigInt dim_u(const Partition& lambda, int d);

/// Dimension of the symmetric-group irrep V_lambda (number of standard tableaux).
BigInt dim_v(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka(const Partition& lambda, const TypeVector& mu);

/// K_{lambda, mu} for every lambda |- |mu| with at most d parts, built by
/// adding one horizontal strip per entry of mu.
std::map<Partition, BigInt> kostka_column(const TypeVector& mu, int d);

/// True when the sorted form of mu is dominated by lambda (so K_{lambda,mu} > 0).
bool dominates(const Partition& lambda, const Partition& mu);

/// Schur polynomial s_lambda(p) in floating point (branching rule, no cancellation).
double schur_poly(const Partition& lambda, const ProbVector& p);
/// log2 s_lambda(p); -inf when the value is zero.
double log2_schur_poly(const Partition& lambda, const ProbVector& p);
/// Exact s_lambda(p) by the Jacobi-Trudi determinant; requires p.has_exact().
Rational schur_poly_exact(const Partition& lambda, const ProbVector& p);

/// log2 s_lambda(x) for every lambda |- n with at most x.size() nonzero parts.
/// Shares one memo across all shapes; x entries must be positive.
std::map<Partition, double> log2_schur_table(int n, std::span<const double> x);

/// Entropy of lambda / n, in bits.
double partition_entropy(const Partition& lambda);

}  // namespace entsym
