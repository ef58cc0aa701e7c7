#pragma once
// Output spectra of the two optimal n -> m cloning machines applied to
// |phi>^{(x)n}: the known-Schmidt-basis machine (clone 1) and the universal
// machine acting on the pair system (clone 2).

#include "entsym/budget.hpp"
#include "entsym/prob.hpp"
#include "entsym/repthy.hpp"
#include "entsym/spectra.hpp"

#include <string>
#include <vector>

namespace entsym {

struct CloneParams {
  int n = 1;
  int m = 1;
  double r = 1.0;
  ProbVector p;
  int d = 1;

  /// Throws InvalidArgument unless 1 <= n <= m.
  CloneParams(int n, int m, ProbVector p);
  /// n = m / r, which must come out an integer.
  static CloneParams from_ratio(int m, double r, ProbVector p);
};

/// d x d matrix of non-negative counts, row-major.
class TypeMatrix {
 public:
  TypeMatrix() = default;
  TypeMatrix(int d, std::vector<int> entries);
  static TypeMatrix diagonal(const TypeVector& diag);

  int d() const noexcept { return d_; }
  int total() const noexcept { return total_; }
  int operator()(int i, int j) const { return entries_.at(static_cast<std::size_t>(i * d_ + j)); }
  std::span<const int> entries() const noexcept { return entries_; }
  TypeVector row_sums() const;
  /// Diagonal as a type vector; throws InvalidArgument when an off-diagonal entry is nonzero.
  TypeVector diagonal_counts() const;
  std::string to_string() const;

  friend bool operator==(const TypeMatrix&, const TypeMatrix&) = default;
  friend auto operator<=>(const TypeMatrix& a, const TypeMatrix& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  int d_ = 0;
  std::vector<int> entries_;
  int total_ = 0;
};

/// log2 |alpha_{m,n}|^2 for the clone-1 output. -inf when a type with
/// p_k = 0 is populated by the input. Throws InvalidArgument unless
/// n_vec <= m_vec componentwise with totals n and m.
double log2_alpha_sq(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params);
double alpha_sq(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params);
/// Exact mirror of alpha_sq; requires params.p.has_exact().
Rational alpha_sq_exact(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params);

struct TypeEigenvalue {
  TypeVector m_vec;
  double log2_value = 0.0;
  double log2_multiplicity = 0.0;
};

/// e_m = (prod m_k! / m!) sum_{n_vec <= m_vec} |alpha_{m,n}|^2 with
/// multiplicity m!/prod m_k!, for every type m_vec of m over d symbols.
std::vector<TypeEigenvalue> clone1_type_eigenvalues(const CloneParams& params, const Budget& budget = {});

/// Flat form of clone1_type_eigenvalues (zero eigenvalues dropped).
WeightedSpectrum clone1_spectrum(const CloneParams& params, const Budget& budget = {});

/// b_lambda = sum_m e_m K_{lambda, m}; c-values are the distinct e_m in the
/// block with their Kostka multiplicities.
BlockSpectrum clone1_block_spectrum(const CloneParams& params, const Budget& budget = {});

/// Dephased clone-2 entry: a string on A of type m_a, flagged by the diagonal
/// input type n_tilde it came from.
struct Clone2Entry {
  TypeVector m_a;
  TypeMatrix n_tilde;
  double log2_value = 0.0;
  double log2_multiplicity = 0.0;
};

struct Clone2Spectrum {
  int n = 0;
  int m = 0;
  std::vector<Clone2Entry> entries;
  /// log2 beta_n for each diagonal n_tilde: the weight of that branch.
  std::vector<std::pair<TypeMatrix, double>> log2_mixture_weights;

  /// One entry per (m_a, n_tilde).
  WeightedSpectrum flagged() const;
  /// Branches summed per m_a: the diagonal of the machine-traced reduced state.
  WeightedSpectrum merged() const;
};

/// Throws UnsupportedDimension when d exceeds budget.clone2_max_d.
Clone2Spectrum clone2_spectrum(const CloneParams& params, const Budget& budget = {});

}  // namespace entsym
