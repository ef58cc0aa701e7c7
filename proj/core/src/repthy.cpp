#include "entsym/repthy.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace entsym {

// --- Partition / TypeVector --------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition needs at least one entry");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be non-increasing: " + to_string());
    }
    n_ += parts_[i];
  }
}

Partition Partition::padded(std::vector<int> parts, int d) {
  if (d < 1) throw InvalidArgument("partition dimension must be positive");
  while (static_cast<int>(parts.size()) > d && parts.back() == 0) parts.pop_back();
  if (static_cast<int>(parts.size()) > d) {
    throw InvalidArgument("partition has more than d nonzero parts");
  }
  parts.resize(static_cast<std::size_t>(d), 0);
  return Partition(std::move(parts));
}

int Partition::length() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw InvalidArgument("type vector needs at least one entry");
  for (int c : counts_) {
    if (c < 0) throw InvalidArgument("type vector has a negative count");
    total_ += c;
  }
}

Partition TypeVector::sorted() const {
  std::vector<int> parts = counts_;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string TypeVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  os << ']';
  return os.str();
}

// --- enumeration --------------------------------------------------------------

namespace {

void require_positive(int n, int d, const char* what) {
  if (n < 1 || d < 1) {
    throw InvalidArgument(std::string(what) + ": n and d must be positive");
  }
}

void enumerate_rec(int remaining, int max_part, int slot, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  const int d = static_cast<int>(cur.size());
  if (slot == d) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  const int slots_left = d - slot;
  const int hi = std::min(remaining, max_part);
  // The remaining slots can absorb at most hi each.
  const int lo = (remaining + slots_left - 1) / slots_left;
  for (int part = hi; part >= lo; --part) {
    cur[static_cast<std::size_t>(slot)] = part;
    enumerate_rec(remaining - part, part, slot + 1, cur, out);
  }
  cur[static_cast<std::size_t>(slot)] = 0;
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  if (a > std::numeric_limits<std::int64_t>::max() - b) return std::numeric_limits<std::int64_t>::max();
  return a + b;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int d) {
  require_positive(n, d, "enumerate_partitions");
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  enumerate_rec(n, n, 0, cur, out);
  return out;
}

std::int64_t count_partitions(int n, int d) {
  if (n < 0 || d < 0) return 0;
  // table[k][m]: partitions of m into at most k parts.
  std::vector<std::int64_t> prev(static_cast<std::size_t>(n) + 1, 0);
  prev[0] = 1;
  for (int k = 1; k <= d; ++k) {
    std::vector<std::int64_t> cur(prev.size(), 0);
    for (int m = 0; m <= n; ++m) {
      cur[static_cast<std::size_t>(m)] = prev[static_cast<std::size_t>(m)];
      if (m >= k) {
        cur[static_cast<std::size_t>(m)] =
            saturating_add(cur[static_cast<std::size_t>(m)], cur[static_cast<std::size_t>(m - k)]);
      }
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

void for_each_composition(int total, int d, const std::function<void(const TypeVector&)>& fn) {
  if (total < 0 || d < 1) throw InvalidArgument("for_each_composition: bad arguments");
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == d - 1) {
      cur[static_cast<std::size_t>(slot)] = remaining;
      fn(TypeVector(cur));
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      cur[static_cast<std::size_t>(slot)] = c;
      rec(slot + 1, remaining - c);
    }
  };
  rec(0, total);
}

std::int64_t count_compositions(int total, int d) {
  if (total < 0 || d < 1) return 0;
  // C(total + d - 1, d - 1) computed incrementally; exact while it fits.
  long double acc = 1.0L;
  std::int64_t exact = 1;
  bool overflow = false;
  for (int i = 1; i < d; ++i) {
    acc = acc * (total + i) / i;
    if (!overflow) {
      std::int64_t product = 0;
      if (__builtin_mul_overflow(exact, static_cast<std::int64_t>(total + i), &product)) {
        overflow = true;
      } else {
        exact = product / i;
      }
    }
  }
  if (overflow || acc > 9.0e18L) return std::numeric_limits<std::int64_t>::max();
  return exact;
}

// --- dimensions ---------------------------------------------------------------

namespace {

std::vector<int> shifted_rows(const Partition& lambda, int d) {
  // l_i = lambda_i + d - i with 1-based i.
  Partition padded = Partition::padded(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), d);
  std::vector<int> l(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) l[static_cast<std::size_t>(i)] = padded[i] + d - 1 - i;
  return l;
}

BigInt vandermonde(const std::vector<int>& l) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = i + 1; j < l.size(); ++j) prod *= (l[i] - l[j]);
  }
  return prod;
}

}  // namespace

BigInt dim_u(const Partition& lambda, int d) {
  if (d < 1) throw InvalidArgument("dim_u: d must be positive");
  if (lambda.length() > d) throw InvalidArgument("dim_u: partition has more than d rows");
  const auto l = shifted_rows(lambda, d);
  BigInt denom = 1;
  for (int k = 1; k < d; ++k) denom *= factorial(k);
  BigInt num = vandermonde(l);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, denom, q, r);
  if (r != 0) throw std::logic_error("dim_u: inexact division");
  return q;
}

BigInt dim_v(const Partition& lambda) {
  if (lambda.n() < 1) throw InvalidArgument("dim_v: partition of zero");
  const int d = lambda.d();
  const auto l = shifted_rows(lambda, d);
  BigInt denom = 1;
  for (int x : l) denom *= factorial(x);
  BigInt num = factorial(lambda.n()) * vandermonde(l);
  BigInt q, r;
  boost::multiprecision::divide_qr(num, denom, q, r);
  if (r != 0) throw std::logic_error("dim_v: inexact division");
  return q;
}

// --- Kostka numbers -------------------------------------------------------------

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Counts tableaux by stripping the horizontal strip holding the largest
// remaining letter.
class KostkaRecursion {
 public:
  explicit KostkaRecursion(std::vector<int> content) : content_(std::move(content)) {}

  BigInt count(const std::vector<int>& shape, int letters) {
    if (letters == 0) {
      return std::all_of(shape.begin(), shape.end(), [](int x) { return x == 0; }) ? 1 : 0;
    }
    std::vector<int> key = shape;
    key.push_back(letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int strip = content_[static_cast<std::size_t>(letters - 1)];
    const int target = std::accumulate(shape.begin(), shape.end(), 0) - strip;
    BigInt total = 0;
    if (target >= 0) {
      std::vector<int> inner(shape.size(), 0);
      strip_rec(shape, letters, 0, target, inner, total);
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Inner shape nu interlaces shape (shape_{i+1} <= nu_i <= shape_i) and uses
  // at most letters-1 rows.
  void strip_rec(const std::vector<int>& shape, int letters, std::size_t row, int remaining,
                 std::vector<int>& inner, BigInt& total) {
    if (row == shape.size()) {
      if (remaining == 0) total += count(inner, letters - 1);
      return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    int hi = shape[row];
    if (static_cast<int>(row) >= letters - 1) hi = 0;
    if (below > hi) return;
    for (int v = std::min(hi, remaining); v >= below; --v) {
      inner[row] = v;
      strip_rec(shape, letters, row + 1, remaining - v, inner, total);
    }
    inner[row] = 0;
  }

  std::vector<int> content_;
  std::unordered_map<std::vector<int>, BigInt, VecHash> memo_;
};

}  // namespace

BigInt kostka(const Partition& lambda, const TypeVector& mu) {
  if (lambda.n() != mu.total()) {
    throw InvalidArgument("kostka: |lambda| = " + std::to_string(lambda.n()) +
                          " but content total = " + std::to_string(mu.total()));
  }
  const std::size_t rows = std::max<std::size_t>(lambda.parts().size(), mu.counts().size());
  std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
  shape.resize(rows, 0);
  KostkaRecursion rec(std::vector<int>(mu.counts().begin(), mu.counts().end()));
  return rec.count(shape, mu.d());
}

std::map<Partition, BigInt> kostka_column(const TypeVector& mu, int d) {
  if (d < 1) throw InvalidArgument("kostka_column: d must be positive");
  using State = std::vector<int>;
  std::map<State, BigInt> states;
  states.emplace(State(static_cast<std::size_t>(d), 0), BigInt(1));

  for (int step = 0; step < mu.d(); ++step) {
    const int strip = mu[step];
    std::map<State, BigInt> next;
    for (const auto& [inner, ways] : states) {
      State outer(inner.size(), 0);
      // outer_i in [inner_i, inner_{i-1}], rows beyond step stay empty.
      std::function<void(std::size_t, int)> rec = [&](std::size_t row, int remaining) {
        if (row == inner.size()) {
          if (remaining == 0) next[outer] += ways;
          return;
        }
        const int lo = inner[row];
        int hi = row == 0 ? inner[row] + remaining : std::min(inner[row - 1], inner[row] + remaining);
        if (static_cast<int>(row) > step) hi = lo;
        for (int v = lo; v <= hi; ++v) {
          outer[row] = v;
          rec(row + 1, remaining - (v - lo));
        }
      };
      rec(0, strip);
    }
    states = std::move(next);
  }

  std::map<Partition, BigInt> out;
  for (auto& [shape, ways] : states) out.emplace(Partition(shape), std::move(ways));
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) return false;
  const int rows = std::max(lambda.d(), mu.d());
  int a = 0;
  int b = 0;
  for (int i = 0; i < rows; ++i) {
    a += i < lambda.d() ? lambda[i] : 0;
    b += i < mu.d() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

// --- Schur polynomials ------------------------------------------------------------

namespace {

// log2 s_nu(x_1..x_j) with j = nu.size(), by the branching rule
//   s_nu(x_1..x_j) = sum_{mu interlacing nu} s_mu(x_1..x_{j-1}) x_j^{|nu|-|mu|}.
// Every term is non-negative, so no cancellation occurs.
class SchurBrancher {
 public:
  explicit SchurBrancher(std::span<const double> x) {
    log2x_.reserve(x.size());
    for (double v : x) {
      if (!(v > 0.0)) throw InvalidArgument("schur: variables must be positive");
      log2x_.push_back(std::log2(v));
    }
  }

  double log2_value(const std::vector<int>& nu) {
    const std::size_t j = nu.size();
    if (j == 1) return nu[0] * log2x_[0];
    if (nu[j - 1] > 0 && j > log2x_.size()) return kNegInf;
    if (auto it = memo_.find(nu); it != memo_.end()) return it->second;

    const int weight = std::accumulate(nu.begin(), nu.end(), 0);
    Log2Accumulator acc;
    std::vector<int> mu(j - 1, 0);
    interlace(nu, 0, 0, mu, weight, acc);
    const double v = acc.value();
    memo_.emplace(nu, v);
    return v;
  }

 private:
  void interlace(const std::vector<int>& nu, std::size_t row, int mu_weight, std::vector<int>& mu,
                 int nu_weight, Log2Accumulator& acc) {
    if (row == mu.size()) {
      const double tail = (nu_weight - mu_weight) * log2x_[nu.size() - 1];
      acc.add(log2_value(mu) + tail);
      return;
    }
    for (int v = nu[row + 1]; v <= nu[row]; ++v) {
      mu[row] = v;
      interlace(nu, row + 1, mu_weight + v, mu, nu_weight, acc);
    }
  }

  std::vector<double> log2x_;
  std::unordered_map<std::vector<int>, double, VecHash> memo_;
};

std::vector<double> positive_entries(const ProbVector& p) {
  std::vector<double> x;
  for (double v : p.values()) {
    if (v > 0.0) x.push_back(v);
  }
  return x;
}

std::vector<int> rows_for(const Partition& lambda, std::size_t vars) {
  // Shape truncated or padded to the number of variables.
  std::vector<int> rows(lambda.parts().begin(), lambda.parts().end());
  while (rows.size() > vars && rows.back() == 0) rows.pop_back();
  rows.resize(vars, 0);
  return rows;
}

}  // namespace

double log2_schur_poly(const Partition& lambda, const ProbVector& p) {
  if (lambda.length() > p.dim()) throw InvalidArgument("schur_poly: partition has more rows than variables");
  const auto x = positive_entries(p);
  if (lambda.length() > static_cast<int>(x.size())) return kNegInf;
  if (lambda.n() == 0) return 0.0;
  SchurBrancher brancher(x);
  return brancher.log2_value(rows_for(lambda, x.size()));
}

double schur_poly(const Partition& lambda, const ProbVector& p) {
  return std::exp2(log2_schur_poly(lambda, p));
}

std::map<Partition, double> log2_schur_table(int n, std::span<const double> x) {
  if (x.empty()) throw InvalidArgument("log2_schur_table: no variables");
  SchurBrancher brancher(x);
  std::map<Partition, double> out;
  for (const auto& lambda : enumerate_partitions(n, static_cast<int>(x.size()))) {
    out.emplace(lambda, brancher.log2_value(rows_for(lambda, x.size())));
  }
  return out;
}

Rational schur_poly_exact(const Partition& lambda, const ProbVector& p) {
  if (lambda.length() > p.dim()) throw InvalidArgument("schur_poly: partition has more rows than variables");
  const auto x = p.exact();
  const int rows = std::max(1, lambda.length());
  const int max_k = lambda.n() + rows;

  // Complete homogeneous symmetric polynomials h_0..h_max_k, one variable at a time.
  std::vector<Rational> h(static_cast<std::size_t>(max_k) + 1, Rational(0));
  h[0] = 1;
  for (const auto& xi : x) {
    for (int k = 1; k <= max_k; ++k) h[static_cast<std::size_t>(k)] += xi * h[static_cast<std::size_t>(k - 1)];
  }
  auto h_at = [&](int k) -> Rational {
    if (k < 0) return Rational(0);
    return h[static_cast<std::size_t>(k)];
  };

  // Jacobi-Trudi: s_lambda = det[h_{lambda_i - i + j}].
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows),
                                       std::vector<Rational>(static_cast<std::size_t>(rows)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h_at(lambda[i] - i + j);
    }
  }

  Rational det = 1;
  for (int col = 0; col < rows; ++col) {
    int pivot = -1;
    for (int r = col; r < rows; ++r) {
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational diag = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= diag;
    for (int r = col + 1; r < rows; ++r) {
      const Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / diag;
      if (factor == 0) continue;
      for (int c = col; c < rows; ++c) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
      }
    }
  }
  return det;
}

double partition_entropy(const Partition& lambda) {
  std::vector<double> q;
  for (int part : lambda.parts()) q.push_back(static_cast<double>(part) / lambda.n());
  return entropy(q);
}

}  // namespace entsym
