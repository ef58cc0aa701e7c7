#pragma once
// Block (Schur-Weyl) and flat spectra of permutation-symmetric pure states.

#include "entsym/bigint.hpp"
#include "entsym/budget.hpp"
#include "entsym/prob.hpp"
#include "entsym/repthy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entsym {

enum class Measure { b_measure, c_measure };

/// One reduced-density eigenvalue inside a block, with its multiplicity per
/// symmetric-group index l.
struct CValue {
  double log2_value = 0.0;
  BigInt multiplicity = 1;
};

struct Block {
  Partition lambda;
  /// log2 b_lambda, the weight per l-index. The block carries total mass
  /// dim_v * b.
  double log2_b = 0.0;
  BigInt dim_u = 1;
  BigInt dim_v = 1;
  std::optional<std::vector<CValue>> c_values;
  /// Exact b when the source was given exact probabilities.
  std::optional<Rational> b_exact;
};

struct BlockSpectrum {
  int n = 0;
  int d = 0;
  std::string source = "iid";
  std::vector<Block> blocks;

  /// Sum over blocks of dim_v * b.
  double total_mass() const;
};

struct SpectrumEntry {
  double log2_value = 0.0;
  double log2_multiplicity = 0.0;
};

/// Flat list of eigenvalues with multiplicities; the input to every rate
/// estimator.
struct WeightedSpectrum {
  int n = 0;
  std::string source = "iid";
  std::vector<SpectrumEntry> entries;

  double total_mass() const;
};

/// Block weights b_lambda = s_lambda(p) for every lambda |- n with at most
/// (support size of p) rows. Partitions stay padded to p.dim(). When p is
/// exact and n <= exact_limit, the exact weights are attached as well.
BlockSpectrum iid_block_spectrum(const ProbVector& p, int n, const Budget& budget = {},
                                 int exact_limit = 40);

/// Spectrum of (Tr_B |phi><phi|)^{(x)n}: one entry per type of the support of p.
WeightedSpectrum iid_type_spectrum(const ProbVector& p, int n, const Budget& budget = {});

/// b-measure: (b_lambda, dim_v) per block. c-measure: (c, mult * dim_v) per
/// c-value; throws MissingData when a block has no c-values.
WeightedSpectrum flatten(const BlockSpectrum& bs, Measure measure);

/// Each entry repeated by its multiplicity, as plain values sorted descending
/// and padded with zeros to `length`. Throws BudgetExceeded when the expansion
/// would exceed `length`.
std::vector<double> expand_sorted(const WeightedSpectrum& ws, std::size_t length);

const char* to_string(Measure measure) noexcept;
Measure measure_from_string(const std::string& text);

}  // namespace entsym
