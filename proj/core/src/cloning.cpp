#include "entsym/cloning.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace entsym {

CloneParams::CloneParams(int n_in, int m_in, ProbVector p_in)
    : n(n_in), m(m_in), r(static_cast<double>(m_in) / n_in), p(std::move(p_in)), d(p.dim()) {
  if (n < 1 || m < n) {
    throw InvalidArgument("clone parameters need 1 <= n <= m (got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ")");
  }
}

CloneParams CloneParams::from_ratio(int m, double r, ProbVector p) {
  if (!(r >= 1.0)) throw InvalidArgument("clone ratio r must be >= 1");
  const double n_real = m / r;
  const long n_int = std::lround(n_real);
  if (n_int < 1 || std::abs(n_real - static_cast<double>(n_int)) > 1e-9) {
    throw InvalidArgument("m / r must be a positive integer (m=" + std::to_string(m) +
                          ", r=" + std::to_string(r) + ")");
  }
  return CloneParams(static_cast<int>(n_int), m, std::move(p));
}

// --- TypeMatrix ---------------------------------------------------------------

TypeMatrix::TypeMatrix(int d, std::vector<int> entries) : d_(d), entries_(std::move(entries)) {
  if (d < 1 || entries_.size() != static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
    throw InvalidArgument("type matrix needs d*d entries");
  }
  for (int x : entries_) {
    if (x < 0) throw InvalidArgument("type matrix has a negative entry");
    total_ += x;
  }
}

TypeMatrix TypeMatrix::diagonal(const TypeVector& diag) {
  const int d = diag.d();
  std::vector<int> e(static_cast<std::size_t>(d * d), 0);
  for (int k = 0; k < d; ++k) e[static_cast<std::size_t>(k * d + k)] = diag[k];
  return TypeMatrix(d, std::move(e));
}

TypeVector TypeMatrix::row_sums() const {
  std::vector<int> rows(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) rows[static_cast<std::size_t>(i)] += (*this)(i, j);
  }
  return TypeVector(std::move(rows));
}

TypeVector TypeMatrix::diagonal_counts() const {
  std::vector<int> diag(static_cast<std::size_t>(d_), 0);
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      if (i == j) {
        diag[static_cast<std::size_t>(i)] = (*this)(i, j);
      } else if ((*this)(i, j) != 0) {
        throw InvalidArgument("type matrix is not diagonal: " + to_string());
      }
    }
  }
  return TypeVector(std::move(diag));
}

std::string TypeMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < d_; ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < d_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

// --- clone 1 ------------------------------------------------------------------

namespace {

void check_types(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params) {
  if (m_vec.d() != params.d || n_vec.d() != params.d) {
    throw InvalidArgument("type vectors must have d entries");
  }
  if (m_vec.total() != params.m || n_vec.total() != params.n) {
    throw InvalidArgument("type totals must equal (m, n)");
  }
  for (int k = 0; k < params.d; ++k) {
    if (n_vec[k] > m_vec[k]) {
      throw InvalidArgument("n_vec " + n_vec.to_string() + " not below m_vec " + m_vec.to_string());
    }
  }
}

// Shared pieces of log2 |alpha|^2 for a machine with `slots` output symbols.
struct AlphaKernel {
  AlphaKernel(int n, int m, int slots, const ProbVector& p)
      : lf(m + slots), log2p(static_cast<std::size_t>(p.dim())) {
    prefactor = lf(m - n) + lf(n + slots - 1) - lf(m + slots - 1) + lf(n);
    for (int k = 0; k < p.dim(); ++k) {
      log2p[static_cast<std::size_t>(k)] = p[k] > 0.0 ? std::log2(p[k]) : kNegInf;
    }
  }

  // Type-dependent part for symbol k populated n_k times out of m_k.
  double symbol_term(int m_k, int n_k, int k) const {
    double v = lf.log2_binomial(m_k, n_k) - lf(n_k);
    if (n_k > 0) v += n_k * log2p[static_cast<std::size_t>(k)];
    return v;
  }

  LogFactorialTable lf;
  std::vector<double> log2p;
  double prefactor = 0.0;
};

// Calls fn(n_vec) for every n_vec <= bound componentwise with the given total.
template <class Fn>
void for_each_bounded(std::span<const int> bound, int total, std::vector<int>& cur, std::size_t slot,
                      int suffix_capacity, Fn& fn) {
  if (slot + 1 == bound.size()) {
    if (total <= bound[slot]) {
      cur[slot] = total;
      fn(cur);
    }
    return;
  }
  const int rest = suffix_capacity - bound[slot];
  const int lo = std::max(0, total - rest);
  const int hi = std::min(bound[slot], total);
  for (int v = hi; v >= lo; --v) {
    cur[slot] = v;
    for_each_bounded(bound, total - v, cur, slot + 1, rest, fn);
  }
}

double clone1_log2_mass(const TypeVector& m_vec, const CloneParams& params, const AlphaKernel& kernel) {
  Log2Accumulator acc;
  std::vector<int> cur(static_cast<std::size_t>(params.d), 0);
  auto visit = [&](const std::vector<int>& n_vec) {
    double v = kernel.prefactor;
    for (int k = 0; k < params.d; ++k) {
      v += kernel.symbol_term(m_vec[k], n_vec[static_cast<std::size_t>(k)], k);
      if (v == kNegInf) return;
    }
    acc.add(v);
  };
  for_each_bounded(m_vec.counts(), params.n, cur, 0, m_vec.total(), visit);
  return acc.value();
}

void check_clone1_budget(const CloneParams& params, const Budget& budget) {
  const std::int64_t types = count_compositions(params.m, params.d);
  if (types > budget.max_type_entries) {
    throw BudgetExceeded("clone-1: " + std::to_string(types) + " type classes exceed cap " +
                         std::to_string(budget.max_type_entries));
  }
}

}  // namespace

double log2_alpha_sq(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params) {
  check_types(m_vec, n_vec, params);
  const AlphaKernel kernel(params.n, params.m, params.d, params.p);
  double v = kernel.prefactor;
  for (int k = 0; k < params.d; ++k) v += kernel.symbol_term(m_vec[k], n_vec[k], k);
  return v;
}

double alpha_sq(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params) {
  return std::exp2(log2_alpha_sq(m_vec, n_vec, params));
}

Rational alpha_sq_exact(const TypeVector& m_vec, const TypeVector& n_vec, const CloneParams& params) {
  check_types(m_vec, n_vec, params);
  const auto p = params.p.exact();
  const int n = params.n;
  const int m = params.m;
  const int d = params.d;
  Rational v(factorial(m - n) * factorial(n + d - 1), factorial(m + d - 1));
  v *= factorial(n);
  for (int k = 0; k < d; ++k) {
    v *= Rational(factorial(m_vec[k]), factorial(n_vec[k]) * factorial(m_vec[k] - n_vec[k]));
    v /= factorial(n_vec[k]);
    for (int e = 0; e < n_vec[k]; ++e) v *= p[static_cast<std::size_t>(k)];
  }
  return v;
}

std::vector<TypeEigenvalue> clone1_type_eigenvalues(const CloneParams& params, const Budget& budget) {
  check_clone1_budget(params, budget);
  std::vector<TypeVector> types;
  for_each_composition(params.m, params.d, [&](const TypeVector& t) { types.push_back(t); });

  const AlphaKernel kernel(params.n, params.m, params.d, params.p);
  std::vector<TypeEigenvalue> out(types.size());
  detail::parallel_for(types.size(), budget.threads, [&](std::size_t i) {
    const TypeVector& t = types[i];
    const double log2_mult = kernel.lf.log2_multinomial(t.counts());
    out[i] = {t, clone1_log2_mass(t, params, kernel) - log2_mult, log2_mult};
  });
  return out;
}

WeightedSpectrum clone1_spectrum(const CloneParams& params, const Budget& budget) {
  WeightedSpectrum ws;
  ws.n = params.m;
  ws.source = "clone1";
  for (const auto& e : clone1_type_eigenvalues(params, budget)) {
    if (e.log2_value == kNegInf) continue;
    ws.entries.push_back({e.log2_value, e.log2_multiplicity});
  }
  return ws;
}

BlockSpectrum clone1_block_spectrum(const CloneParams& params, const Budget& budget) {
  const std::int64_t shapes = count_partitions(params.m, params.d);
  if (shapes > budget.max_partitions) {
    throw BudgetExceeded("clone-1 blocks: " + std::to_string(shapes) + " partitions exceed cap " +
                         std::to_string(budget.max_partitions));
  }
  const auto eigen = clone1_type_eigenvalues(params, budget);

  // Kostka numbers depend on m_vec only through its sorted form.
  std::map<Partition, std::map<Partition, BigInt>> columns;
  for (const auto& e : eigen) {
    const Partition key = e.m_vec.sorted();
    if (!columns.contains(key)) {
      columns.emplace(key, kostka_column(TypeVector(std::vector<int>(key.parts().begin(), key.parts().end())),
                                         params.d));
    }
  }

  struct Accum {
    Log2Accumulator b;
    std::vector<CValue> c;
  };
  std::map<Partition, Accum> acc;
  for (const auto& e : eigen) {
    if (e.log2_value == kNegInf) continue;
    for (const auto& [lambda, k] : columns.at(e.m_vec.sorted())) {
      auto& slot = acc[lambda];
      slot.b.add(e.log2_value + log2_big(k));
      slot.c.push_back({e.log2_value, k});
    }
  }

  BlockSpectrum bs;
  bs.n = params.m;
  bs.d = params.d;
  bs.source = "clone1";
  for (auto& [lambda, slot] : acc) {
    // Merge equal eigenvalues, largest first.
    std::sort(slot.c.begin(), slot.c.end(),
              [](const CValue& a, const CValue& b) { return a.log2_value > b.log2_value; });
    std::vector<CValue> merged;
    for (auto& c : slot.c) {
      if (!merged.empty() && std::abs(merged.back().log2_value - c.log2_value) <= 1e-12) {
        merged.back().multiplicity += c.multiplicity;
      } else {
        merged.push_back(std::move(c));
      }
    }
    Block block;
    block.lambda = lambda;
    block.log2_b = slot.b.value();
    block.dim_u = dim_u(lambda, params.d);
    block.dim_v = dim_v(lambda);
    block.c_values = std::move(merged);
    bs.blocks.push_back(std::move(block));
  }
  std::sort(bs.blocks.begin(), bs.blocks.end(),
            [](const Block& a, const Block& b) { return b.lambda < a.lambda; });
  return bs;
}

// --- clone 2 ------------------------------------------------------------------

Clone2Spectrum clone2_spectrum(const CloneParams& params, const Budget& budget) {
  const int d = params.d;
  if (d > budget.clone2_max_d) {
    throw UnsupportedDimension("clone-2 enumeration supports d <= " + std::to_string(budget.clone2_max_d) +
                               " (got d=" + std::to_string(d) + ")");
  }
  const int slots = d * d;
  const std::int64_t inputs = count_compositions(params.n, d);
  const std::int64_t extras = count_compositions(params.m - params.n, slots);
  if (extras > 0 && inputs > budget.max_type_entries / extras) {
    throw BudgetExceeded("clone-2: type-matrix enumeration exceeds cap " + std::to_string(budget.max_type_entries));
  }

  const AlphaKernel kernel(params.n, params.m, slots, params.p);
  const LogFactorialTable& lf = kernel.lf;

  std::vector<TypeVector> diagonals;
  for_each_composition(params.n, d, [&](const TypeVector& t) { diagonals.push_back(t); });
  std::vector<TypeVector> shifts;
  for_each_composition(params.m - params.n, slots, [&](const TypeVector& t) { shifts.push_back(t); });

  Clone2Spectrum out;
  out.n = params.n;
  out.m = params.m;
  for (const auto& diag : diagonals) {
    const TypeMatrix n_tilde = TypeMatrix::diagonal(diag);
    double base = kernel.prefactor;
    for (int k = 0; k < d; ++k) {
      base -= lf(diag[k]);
      if (diag[k] > 0) base += diag[k] * kernel.log2p[static_cast<std::size_t>(k)];
    }
    if (base == kNegInf) continue;

    std::map<TypeVector, Log2Accumulator> by_row;
    Log2Accumulator beta;
    std::vector<int> rows(static_cast<std::size_t>(d));
    for (const auto& j : shifts) {
      double v = base;
      std::fill(rows.begin(), rows.end(), 0);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          const int nt = a == b ? diag[a] : 0;
          const int mt = nt + j[a * d + b];
          v += lf.log2_binomial(mt, nt);
          rows[static_cast<std::size_t>(a)] += mt;
        }
      }
      by_row[TypeVector(rows)].add(v);
      beta.add(v);
    }
    out.log2_mixture_weights.emplace_back(n_tilde, beta.value());
    for (auto& [m_a, acc] : by_row) {
      const double log2_mult = lf.log2_multinomial(m_a.counts());
      out.entries.push_back({m_a, n_tilde, acc.value() - log2_mult, log2_mult});
    }
  }
  return out;
}

WeightedSpectrum Clone2Spectrum::flagged() const {
  WeightedSpectrum ws;
  ws.n = m;
  ws.source = "clone2";
  for (const auto& e : entries) ws.entries.push_back({e.log2_value, e.log2_multiplicity});
  return ws;
}

WeightedSpectrum Clone2Spectrum::merged() const {
  std::map<TypeVector, std::pair<Log2Accumulator, double>> by_row;
  for (const auto& e : entries) {
    auto& slot = by_row[e.m_a];
    slot.first.add(e.log2_value);
    slot.second = e.log2_multiplicity;
  }
  WeightedSpectrum ws;
  ws.n = m;
  ws.source = "clone2";
  for (const auto& [m_a, slot] : by_row) ws.entries.push_back({slot.first.value(), slot.second});
  return ws;
}

}  // namespace entsym
