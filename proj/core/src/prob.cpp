#include "entsym/prob.hpp"

#include "entsym/error.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace entsym {

namespace {

constexpr double kSumTolerance = 1e-12;

void validate(std::span<const double> probs) {
  if (probs.empty()) throw InvalidArgument("probability vector is empty");
  double sum = 0.0;
  for (double x : probs) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw InvalidArgument("probability entry outside [0,1]");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os << "probabilities sum to " << sum << ", not 1";
    throw InvalidArgument(os.str());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_digits(std::string_view s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
}

}  // namespace

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  validate(probs_);
}

ProbVector::ProbVector(std::vector<Rational> exact) {
  if (exact.empty()) throw InvalidArgument("probability vector is empty");
  Rational sum = 0;
  for (const auto& x : exact) {
    if (x < 0 || x > 1) throw InvalidArgument("probability entry outside [0,1]");
    sum += x;
  }
  if (sum != 1) throw InvalidArgument("exact probabilities do not sum to 1");
  probs_.reserve(exact.size());
  for (const auto& x : exact) probs_.push_back(to_double(x));
  exact_ = std::move(exact);
}

ProbVector ProbVector::parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    fields.push_back(trim(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }

  bool all_exact = true;
  std::vector<Rational> exact;
  std::vector<double> approx;
  for (auto field : fields) {
    if (field.empty()) throw InvalidArgument("empty probability entry in '" + std::string(text) + "'");
    const auto slash = field.find('/');
    if (slash != std::string_view::npos) {
      auto num = trim(field.substr(0, slash));
      auto den = trim(field.substr(slash + 1));
      if (!is_digits(num) || !is_digits(den)) {
        throw InvalidArgument("malformed fraction '" + std::string(field) + "'");
      }
      BigInt d(std::string{den});
      if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(field) + "'");
      Rational q(BigInt(std::string{num}), d);
      exact.push_back(q);
      approx.push_back(to_double(q));
    } else if (is_digits(field)) {
      exact.emplace_back(BigInt(std::string{field}));
      approx.push_back(exact.back().convert_to<double>());
    } else {
      all_exact = false;
      double value = 0.0;
      const auto* first = field.data();
      const auto* last = field.data() + field.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw InvalidArgument("malformed probability '" + std::string(field) + "'");
      }
      approx.push_back(value);
    }
  }
  if (all_exact) return ProbVector(std::move(exact));
  return ProbVector(std::move(approx));
}

std::span<const Rational> ProbVector::exact() const {
  if (!exact_) throw MissingData("probability vector has no exact form");
  return *exact_;
}

ProbVector ProbVector::support() const {
  if (exact_) {
    std::vector<Rational> kept;
    for (const auto& x : *exact_) {
      if (x > 0) kept.push_back(x);
    }
    return ProbVector(std::move(kept));
  }
  std::vector<double> kept;
  for (double x : probs_) {
    if (x > 0.0) kept.push_back(x);
  }
  return ProbVector(std::move(kept));
}

int ProbVector::support_size() const noexcept {
  int count = 0;
  for (double x : probs_) count += x > 0.0 ? 1 : 0;
  return count;
}

std::string ProbVector::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    if (i) os << ',';
    if (exact_) {
      os << (*exact_)[static_cast<std::size_t>(i)].str();
    } else {
      os.precision(17);
      os << probs_[static_cast<std::size_t>(i)];
    }
  }
  return os.str();
}

}  // namespace entsym
