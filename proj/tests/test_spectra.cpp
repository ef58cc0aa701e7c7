#include "entsym/spectra.hpp"

#include "entsym/dense_oracle.hpp"
#include "entsym/error.hpp"
#include "entsym/ratelab.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace entsym;

namespace {

ProbVector pv(std::vector<double> v) { return ProbVector(std::move(v)); }

double mass_of(const WeightedSpectrum& ws) { return ws.total_mass(); }

std::vector<double> explicit_values(const WeightedSpectrum& ws) {
  std::vector<double> out;
  for (const auto& e : ws.entries) {
    const auto copies = static_cast<long>(std::llround(std::exp2(e.log2_multiplicity)));
    for (long i = 0; i < copies; ++i) out.push_back(std::exp2(e.log2_value));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST(IidBlockSpectrum, ProductStateHasOneBlock) {
  const auto bs = iid_block_spectrum(pv({1.0, 0.0}), 3);
  ASSERT_EQ(bs.blocks.size(), 1u);
  EXPECT_EQ(bs.blocks[0].lambda, Partition({3, 0}));
  EXPECT_NEAR(bs.blocks[0].log2_b, 0.0, 1e-15);
  EXPECT_EQ(bs.d, 2);
}

TEST(IidBlockSpectrum, UniformQubitPairExact) {
  const auto bs = iid_block_spectrum(ProbVector::parse("1/2,1/2"), 2);
  ASSERT_EQ(bs.blocks.size(), 2u);
  // s_(2)(1/2,1/2) = 3/4 and s_(1,1)(1/2,1/2) = 1/4.
  ASSERT_TRUE(bs.blocks[0].b_exact.has_value());
  EXPECT_EQ(*bs.blocks[0].b_exact, Rational(3, 4));
  EXPECT_EQ(*bs.blocks[1].b_exact, Rational(1, 4));
  Rational total = 0;
  for (const auto& b : bs.blocks) total += *b.b_exact * Rational(b.dim_v);
  EXPECT_EQ(total, 1);

  const auto flat = flatten(bs, Measure::b_measure);
  ASSERT_EQ(flat.entries.size(), 2u);
  EXPECT_NEAR(std::exp2(flat.entries[0].log2_value + flat.entries[0].log2_multiplicity), 0.75, 1e-15);
  EXPECT_NEAR(std::exp2(flat.entries[1].log2_value + flat.entries[1].log2_multiplicity), 0.25, 1e-15);
}

TEST(IidBlockSpectrum, SingleCopy) {
  const auto bs = iid_block_spectrum(pv({0.7, 0.3}), 1);
  ASSERT_EQ(bs.blocks.size(), 1u);
  EXPECT_NEAR(bs.blocks[0].log2_b, 0.0, 1e-15);
}

TEST(IidBlockSpectrum, BudgetIsEnforced) {
  Budget tight;
  tight.max_partitions = 5;
  EXPECT_THROW(iid_block_spectrum(pv({0.5, 0.5}), 20, tight), BudgetExceeded);
  EXPECT_THROW(iid_block_spectrum(pv({0.5, 0.5}), 0), InvalidArgument);
}

TEST(IidTypeSpectrum, Examples) {
  const auto pure = iid_type_spectrum(pv({1.0, 0.0}), 7);
  ASSERT_EQ(pure.entries.size(), 1u);
  EXPECT_EQ(pure.entries[0].log2_value, 0.0);
  EXPECT_EQ(pure.entries[0].log2_multiplicity, 0.0);

  const auto uniform = iid_type_spectrum(pv({0.5, 0.5}), 2);
  ASSERT_EQ(uniform.entries.size(), 3u);
  for (const auto& e : uniform.entries) EXPECT_NEAR(e.log2_value, -2.0, 1e-15);
  EXPECT_NEAR(mass_of(uniform), 1.0, 1e-15);

  const auto values = explicit_values(iid_type_spectrum(pv({0.7, 0.3}), 2));
  ASSERT_EQ(values.size(), 4u);
  EXPECT_NEAR(values[0], 0.49, 1e-15);
  EXPECT_NEAR(values[1], 0.21, 1e-15);
  EXPECT_NEAR(values[2], 0.21, 1e-15);
  EXPECT_NEAR(values[3], 0.09, 1e-15);
}

TEST(IidTypeSpectrum, MatchesStringEnumeration) {
  for (const auto& p : {std::vector<double>{0.7, 0.3}, std::vector<double>{0.5, 0.3, 0.2}}) {
    for (int n = 1; n <= 6; ++n) {
      auto brute = oracle::iid_string_spectrum(p, n);
      std::sort(brute.begin(), brute.end(), std::greater<>());
      const auto ours = explicit_values(iid_type_spectrum(pv(p), n));
      ASSERT_EQ(ours.size(), brute.size());
      for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], brute[i], 1e-14);
    }
  }
}

TEST(Flatten, SingleBlockAndMissingC) {
  BlockSpectrum bs;
  bs.n = 4;
  bs.d = 2;
  Block block;
  block.lambda = Partition({4, 0});
  block.dim_u = 5;
  block.dim_v = 1;
  block.log2_b = 0.0;
  bs.blocks.push_back(block);
  const auto ws = flatten(bs, Measure::b_measure);
  ASSERT_EQ(ws.entries.size(), 1u);
  EXPECT_EQ(ws.entries[0].log2_value, 0.0);
  EXPECT_EQ(ws.entries[0].log2_multiplicity, 0.0);
  EXPECT_THROW(flatten(bs, Measure::c_measure), MissingData);
}

TEST(Flatten, BlockFlatConsistency) {
  const auto p = pv({0.6, 0.4});
  const auto bs = iid_block_spectrum(p, 30);
  const auto ws = flatten(bs, Measure::b_measure);
  ASSERT_EQ(ws.entries.size(), bs.blocks.size());
  for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
    const double expected = schur_poly(bs.blocks[i].lambda, p) * to_double(Rational(bs.blocks[i].dim_v));
    EXPECT_NEAR(std::exp2(ws.entries[i].log2_value + ws.entries[i].log2_multiplicity), expected, 1e-12);
  }
  EXPECT_NEAR(mass_of(ws), 1.0, 1e-9);
}

TEST(Flatten, MeasureNames) {
  EXPECT_EQ(measure_from_string("b"), Measure::b_measure);
  EXPECT_EQ(measure_from_string("c"), Measure::c_measure);
  EXPECT_THROW(measure_from_string("x"), InvalidArgument);
}

TEST(ExpandSorted, PadsAndSorts) {
  const auto v = expand_sorted(iid_type_spectrum(pv({0.7, 0.3}), 2), 6);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_NEAR(v[0], 0.49, 1e-15);
  EXPECT_NEAR(v[3], 0.09, 1e-15);
  EXPECT_EQ(v[4], 0.0);
  EXPECT_THROW(expand_sorted(iid_type_spectrum(pv({0.7, 0.3}), 3), 4), BudgetExceeded);
}

TEST(DenseOracle, MatchesFormulaPaths) {
  const auto p = pv({0.7, 0.3});
  const auto dense = dense_oracle_spectrum(p, 2);
  const auto bs = iid_block_spectrum(p, 2);
  ASSERT_EQ(dense.block.blocks.size(), bs.blocks.size());
  for (std::size_t i = 0; i < bs.blocks.size(); ++i) {
    EXPECT_EQ(dense.block.blocks[i].lambda, bs.blocks[i].lambda);
    EXPECT_NEAR(std::exp2(dense.block.blocks[i].log2_b), std::exp2(bs.blocks[i].log2_b), 1e-10);
  }

  const auto product = dense_oracle_spectrum(pv({1.0, 0.0}), 2);
  const auto top = expand_sorted(product.flat, 16);
  EXPECT_NEAR(top[0], 1.0, 1e-12);
  for (std::size_t i = 1; i < top.size(); ++i) EXPECT_NEAR(top[i], 0.0, 1e-12);

  const auto uniform = dense_oracle_spectrum(pv({0.5, 0.5}), 3);
  const auto a = expand_sorted(uniform.flat, 64);
  const auto b = expand_sorted(iid_type_spectrum(pv({0.5, 0.5}), 3), 64);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
}

TEST(DenseOracle, CapIsEnforced) {
  Budget tight;
  tight.dense_cap = 64;
  EXPECT_THROW(dense_oracle_spectrum(pv({0.5, 0.5}), 4, tight), BudgetExceeded);
}

TEST(Concentration, BMeasureMedianApproachesEntropy) {
  const auto p = pv({0.7, 0.3});
  const double h = oracle::entropy({0.7, 0.3});
  double previous = 1.0;
  for (int n : {20, 50, 100}) {
    const auto ws = flatten(iid_block_spectrum(p, n), Measure::b_measure);
    // Median of -(1/n) log2 b under the b-measure.
    auto dist = rate_distribution(ws);
    double mass = 0;
    double median = 0;
    for (const auto& point : dist) {
      mass += point.mass;
      if (mass >= 0.5) {
        median = point.rate;
        break;
      }
    }
    const double gap = std::abs(median - h);
    EXPECT_LT(gap, previous) << "n=" << n;
    previous = gap;
  }
}
