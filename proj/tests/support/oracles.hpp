#pragma once
// Brute-force reference computations used only by tests. Everything here is
// written independently of the library code paths it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;

inline Shape trim(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

/// p(n, k): partitions of n into at most k parts, by p(n,k) = p(n,k-1) + p(n-k,k).
inline std::int64_t partition_count(int n, int k) {
  std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n + 1),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(k + 1), 0));
  for (int j = 0; j <= k; ++j) t[0][static_cast<std::size_t>(j)] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] +
          (i >= j ? t[static_cast<std::size_t>(i - j)][static_cast<std::size_t>(j)] : 0);
    }
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// All non-increasing d-tuples summing to n, by exhaustive nested search.
inline std::vector<Shape> all_partitions(int n, int d) {
  std::vector<Shape> out;
  Shape cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
    if (i == d) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(left, cap); v >= 0; --v) {
      cur[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v, v);
    }
  };
  rec(0, n, n);
  return out;
}

/// Standard Young tableaux count by removing the box holding n (corner recursion).
inline std::int64_t syt_count(const Shape& shape) {
  std::map<Shape, std::int64_t> memo;
  std::function<std::int64_t(const Shape&)> rec = [&](const Shape& s) -> std::int64_t {
    const Shape t = trim(s);
    if (t.empty()) return 1;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const bool corner = i + 1 == t.size() || t[i + 1] < t[i];
      if (!corner) continue;
      Shape u = t;
      --u[i];
      total += rec(u);
    }
    memo[t] = total;
    return total;
  };
  return rec(shape);
}

/// Enumerates every semistandard tableau of `shape` with entries in [0, d),
/// calling fn with the content vector of each.
inline void for_each_ssyt(const Shape& shape, int d, const std::function<void(const std::vector<int>&)>& fn) {
  const Shape s = trim(shape);
  std::vector<std::vector<int>> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) t[i].assign(static_cast<std::size_t>(s[i]), -1);
  std::vector<int> content(static_cast<std::size_t>(d), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(s[i]); ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      fn(content);
      return;
    }
    const auto [i, j] = cells[k];
    int lo = 0;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v < d; ++v) {
      t[i][j] = v;
      ++content[static_cast<std::size_t>(v)];
      rec(k + 1);
      --content[static_cast<std::size_t>(v)];
    }
    t[i][j] = -1;
  };
  rec(0);
}

inline std::int64_t ssyt_count(const Shape& shape, int d) {
  std::int64_t c = 0;
  for_each_ssyt(shape, d, [&](const std::vector<int>&) { ++c; });
  return c;
}

inline std::int64_t kostka_brute(const Shape& shape, const std::vector<int>& mu) {
  std::int64_t c = 0;
  for_each_ssyt(shape, static_cast<int>(mu.size()), [&](const std::vector<int>& content) {
    if (content == mu) ++c;
  });
  return c;
}

/// Schur polynomial as the tableau sum Σ_T x^T.
inline long double schur_monomial(const Shape& shape, const std::vector<double>& x) {
  long double total = 0;
  for_each_ssyt(shape, static_cast<int>(x.size()), [&](const std::vector<int>& content) {
    long double term = 1;
    for (std::size_t i = 0; i < content.size(); ++i) term *= std::pow(static_cast<long double>(x[i]), content[i]);
    total += term;
  });
  return total;
}

inline long double factorial(int k) {
  long double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline long double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline long double multinomial(const std::vector<int>& counts) {
  int total = 0;
  long double denom = 1;
  for (int c : counts) {
    total += c;
    denom *= factorial(c);
  }
  return factorial(total) / denom;
}

inline double entropy(const std::vector<double>& q) {
  double h = 0;
  for (double x : q)
    if (x > 0) h -= x * std::log2(x);
  return h;
}

inline double kl(const std::vector<double>& q, const std::vector<double>& p) {
  double s = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] > 0) s += q[i] * std::log2(q[i] / p[i]);
  return s;
}

/// Eigenvalues of (Tr_B |φ⟩⟨φ|)^{⊗n}, one per string in [d]^n.
inline std::vector<double> iid_string_spectrum(const std::vector<double>& p, int n) {
  std::vector<double> out{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next;
    for (double v : out)
      for (double x : p) next.push_back(v * x);
    out = std::move(next);
  }
  return out;
}

/// Explicit (1-ε)-quantile of -(1/n)log2 λ under the measure λ over an
/// explicitly listed eigenvalue multiset: smallest R with mass{λ ≥ 2^{-nR}} ≥ 1-ε.
inline double explicit_Ec(std::vector<double> eig, int n, double eps) {
  std::sort(eig.begin(), eig.end(), std::greater<>());
  double mass = 0;
  for (double v : eig) {
    if (v <= 0) continue;
    mass += v;
    if (mass >= 1 - eps - 1e-12) return std::max(0.0, -std::log2(v) / n);
  }
  return std::max(0.0, -std::log2(eig.back()) / n);
}

/// Lower ε-quantile of the rate -log2(λ)/n: largest R with mass{rate < R} ≤ ε.
inline double explicit_Ed(std::vector<double> eig, int n, double eps) {
  std::sort(eig.begin(), eig.end(), std::greater<>());
  double mass = 0;
  for (double v : eig) {
    if (v <= 0) continue;
    mass += v;
    if (mass > eps + 1e-12) return std::max(0.0, -std::log2(v) / n);
  }
  return 0;
}

/// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::vector<double> simplex(int d) {
    std::vector<double> v(static_cast<std::size_t>(d));
    double s = 0;
    for (auto& x : v) {
      x = std::exponential_distribution<double>(1.0)(rng_);
      s += x;
    }
    for (auto& x : v) x /= s;
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
