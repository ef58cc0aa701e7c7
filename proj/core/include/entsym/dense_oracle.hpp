#pragma once
// Brute-force reference spectra: the states are built as explicit vectors,
// symmetrized over copy permutations, and reduced by dense linear algebra.
// Only tiny instances fit (d^(2n) <= budget.dense_cap).

#include "entsym/budget.hpp"
#include "entsym/cloning.hpp"
#include "entsym/prob.hpp"
#include "entsym/repthy.hpp"
#include "entsym/spectra.hpp"

#include <map>
#include <span>
#include <vector>

namespace entsym {

struct DenseSpectrum {
  /// Eigenvalues of the reduced state on A, descending, length d^n.
  std::vector<double> eigenvalues;
  /// tr(rho_A P_lambda) for each Schur-Weyl block, from the eigenspaces of
  /// the transposition class sum.
  std::map<Partition, double> block_mass;
};

struct DenseOracleResult {
  BlockSpectrum block;
  WeightedSpectrum flat;
  DenseSpectrum raw;
};

/// |phi>^{(x)n} with Schmidt coefficients sqrt(p).
DenseOracleResult dense_oracle_spectrum(const ProbVector& p, int n, const Budget& budget = {});

/// Clone-1 output with the machine register traced out. `phases` (one per
/// symbol, optional) multiply the input amplitudes by exp(i theta_k).
DenseSpectrum dense_clone1_oracle(const CloneParams& params, const Budget& budget = {},
                                  std::span<const double> phases = {});

struct DenseClone2 {
  /// Reduced state on A (undephased), descending.
  std::vector<double> eigenvalues;
  /// Diagonal of the reduced state in the product basis, descending.
  std::vector<double> diagonal;
  /// Diagonal contributed by each input branch, keyed by the diagonal counts
  /// of n_tilde, descending.
  std::map<TypeVector, std::vector<double>> branch_diagonals;
};

DenseClone2 dense_clone2_oracle(const CloneParams& params, const Budget& budget = {},
                                std::span<const double> phases = {});

}  // namespace entsym
