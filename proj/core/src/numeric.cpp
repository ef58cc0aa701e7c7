#include "entsym/numeric.hpp"

#include "entsym/bigint.hpp"
#include "entsym/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace entsym {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::missing_data: return "missing_data";
    case ErrorKind::unsupported_dimension: return "unsupported_dimension";
  }
  return "unknown";
}

// --- big integers -----------------------------------------------------------

double log2_big(const BigInt& value) {
  if (value <= 0) return kNegInf;
  const unsigned msb = boost::multiprecision::msb(value);
  if (msb < 53) return std::log2(value.convert_to<double>());
  // Keep the top 53 bits as a double mantissa.
  const unsigned shift = msb - 52;
  const BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_rational(const Rational& value) {
  if (value <= 0) return kNegInf;
  return log2_big(boost::multiprecision::numerator(value)) -
         log2_big(boost::multiprecision::denominator(value));
}

double to_double(const Rational& value) {
  if (value == 0) return 0.0;
  const double l = log2_rational(value < 0 ? Rational(-value) : value);
  const double magnitude = std::exp2(l);
  return value < 0 ? -magnitude : magnitude;
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt big_from_decimal(const std::string& text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidArgument("not a non-negative decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

// --- log domain --------------------------------------------------------------

double log2_add(double a, double b) noexcept {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log2(1.0 + std::exp2(b - a));
}

double log2_sub(double a, double b) noexcept {
  if (b == kNegInf) return a;
  if (b >= a) return kNegInf;
  return a + std::log2(-std::expm1((b - a) * std::log(2.0)));
}

double log2_sum(std::span<const double> exponents) noexcept {
  Log2Accumulator acc;
  for (double x : exponents) acc.add(x);
  return acc.value();
}

void Log2Accumulator::add(double x) noexcept {
  if (x == kNegInf) return;
  if (x <= max_) {
    sum_ += std::exp2(x - max_);
  } else {
    sum_ = sum_ * std::exp2(max_ - x) + 1.0;
    max_ = x;
  }
}

double Log2Accumulator::value() const noexcept {
  if (max_ == kNegInf) return kNegInf;
  return max_ + std::log2(sum_);
}

// --- factorials ---------------------------------------------------------------

LogFactorialTable::LogFactorialTable(int max_k) {
  if (max_k < 0) throw InvalidArgument("LogFactorialTable: negative size");
  table_.resize(static_cast<std::size_t>(max_k) + 1);
  table_[0] = 0.0;
  // lgamma is accurate to a few ulps; a running sum of log2 k would drift.
  for (int k = 1; k <= max_k; ++k) {
    table_[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0) / std::log(2.0);
  }
}

double LogFactorialTable::log2_binomial(int n, int k) const {
  if (k < 0 || k > n) return kNegInf;
  return (*this)(n) - (*this)(k) - (*this)(n - k);
}

double LogFactorialTable::log2_multinomial(std::span<const int> counts) const {
  int total = 0;
  double out = 0.0;
  for (int c : counts) {
    total += c;
    out -= (*this)(c);
  }
  return out + (*this)(total);
}

// --- information measures ----------------------------------------------------

double entropy(std::span<const double> q) {
  double h = 0.0;
  for (double x : q) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double relative_entropy(std::span<const double> q, std::span<const double> p) {
  if (q.size() != p.size()) throw InvalidArgument("relative_entropy: length mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) continue;
    if (p[i] <= 0.0) return std::numeric_limits<double>::infinity();
    d += q[i] * std::log2(q[i] / p[i]);
  }
  return d;
}

}  // namespace entsym
