#include "entsym/spectra.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace entsym {

double BlockSpectrum::total_mass() const {
  Log2Accumulator acc;
  for (const auto& b : blocks) acc.add(b.log2_b + log2_big(b.dim_v));
  return std::exp2(acc.value());
}

double WeightedSpectrum::total_mass() const {
  Log2Accumulator acc;
  for (const auto& e : entries) acc.add(e.log2_value + e.log2_multiplicity);
  return std::exp2(acc.value());
}

BlockSpectrum iid_block_spectrum(const ProbVector& p, int n, const Budget& budget, int exact_limit) {
  if (n < 1) throw InvalidArgument("iid_block_spectrum: n must be positive");
  const int d = p.dim();
  const ProbVector support = p.support();
  const int k = support.support_size();
  const std::int64_t count = count_partitions(n, k);
  if (count > budget.max_partitions) {
    throw BudgetExceeded("iid_block_spectrum: " + std::to_string(count) + " partitions exceed cap " +
                         std::to_string(budget.max_partitions));
  }

  const auto table = log2_schur_table(n, support.values());
  const bool exact = p.has_exact() && n <= exact_limit;

  BlockSpectrum bs;
  bs.n = n;
  bs.d = d;
  bs.source = "iid";
  bs.blocks.reserve(table.size());
  for (const auto& [shape, log2_b] : table) {
    Block block;
    block.lambda = Partition::padded(std::vector<int>(shape.parts().begin(), shape.parts().end()), d);
    block.log2_b = log2_b;
    block.dim_u = dim_u(block.lambda, d);
    block.dim_v = dim_v(block.lambda);
    if (exact) block.b_exact = schur_poly_exact(shape, support);
    bs.blocks.push_back(std::move(block));
  }
  // Reverse-lexicographic, matching enumerate_partitions.
  std::sort(bs.blocks.begin(), bs.blocks.end(),
            [](const Block& a, const Block& b) { return b.lambda < a.lambda; });
  return bs;
}

WeightedSpectrum iid_type_spectrum(const ProbVector& p, int n, const Budget& budget) {
  if (n < 1) throw InvalidArgument("iid_type_spectrum: n must be positive");
  const ProbVector support = p.support();
  const int k = support.support_size();
  const std::int64_t count = count_compositions(n, k);
  if (count > budget.max_type_entries) {
    throw BudgetExceeded("iid_type_spectrum: " + std::to_string(count) + " types exceed cap " +
                         std::to_string(budget.max_type_entries));
  }
  std::vector<double> log2p;
  for (double v : support.values()) log2p.push_back(std::log2(v));
  const LogFactorialTable lf(n);

  WeightedSpectrum ws;
  ws.n = n;
  ws.source = "iid";
  ws.entries.reserve(static_cast<std::size_t>(count));
  for_each_composition(n, k, [&](const TypeVector& t) {
    double value = 0.0;
    for (int i = 0; i < k; ++i) {
      if (t[i] > 0) value += t[i] * log2p[static_cast<std::size_t>(i)];
    }
    ws.entries.push_back({value, lf.log2_multinomial(t.counts())});
  });
  return ws;
}

WeightedSpectrum flatten(const BlockSpectrum& bs, Measure measure) {
  WeightedSpectrum ws;
  ws.n = bs.n;
  ws.source = bs.source;
  for (const auto& block : bs.blocks) {
    if (block.log2_b == kNegInf) continue;
    const double log2_dv = log2_big(block.dim_v);
    if (measure == Measure::b_measure) {
      ws.entries.push_back({block.log2_b, log2_dv});
      continue;
    }
    if (!block.c_values) {
      throw MissingData("flatten: block " + block.lambda.to_string() + " carries no c-values");
    }
    for (const auto& c : *block.c_values) {
      if (c.log2_value == kNegInf || c.multiplicity == 0) continue;
      ws.entries.push_back({c.log2_value, log2_big(c.multiplicity) + log2_dv});
    }
  }
  return ws;
}

std::vector<double> expand_sorted(const WeightedSpectrum& ws, std::size_t length) {
  std::vector<double> out;
  out.reserve(length);
  for (const auto& e : ws.entries) {
    const double mult = std::round(std::exp2(e.log2_multiplicity));
    if (out.size() + static_cast<std::size_t>(mult) > length) {
      throw BudgetExceeded("expand_sorted: spectrum longer than " + std::to_string(length));
    }
    out.insert(out.end(), static_cast<std::size_t>(mult), std::exp2(e.log2_value));
  }
  out.resize(length, 0.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

const char* to_string(Measure measure) noexcept {
  return measure == Measure::b_measure ? "b" : "c";
}

Measure measure_from_string(const std::string& text) {
  if (text == "b" || text == "b_measure") return Measure::b_measure;
  if (text == "c" || text == "c_measure") return Measure::c_measure;
  throw InvalidArgument("unknown measure '" + text + "' (expected b or c)");
}

}  // namespace entsym
