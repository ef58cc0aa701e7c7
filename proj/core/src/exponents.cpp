#include "entsym/exponents.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace entsym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPhi = 0.6180339887498949;

struct Argmin {
  double x = 0.0;
  double value = kInf;
};

// Golden-section search for a convex function on [a, b]; the endpoints are
// candidates too, since minima often sit on the boundary.
template <class F>
Argmin golden_min(F&& f, double a, double b, double width = 1e-11) {
  Argmin best{a, f(a)};
  if (b - a <= 0.0) return best;
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};
  double c = b - kPhi * (b - a);
  double d = a + kPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && b - a > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kPhi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fm = f(mid);
  if (fm < best.value) best = {mid, fm};
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

void check_problem(double R, double r, const ProbVector& p) {
  if (!(r >= 1.0)) throw InvalidArgument("clone ratio r must be >= 1");
  if (R < 0.0) throw InvalidArgument("rate must be non-negative");
  if (R > std::log2(p.dim()) + 1e-12) {
    throw Infeasible("rate " + std::to_string(R) + " exceeds log2 d = " + std::to_string(std::log2(p.dim())));
  }
  if (p.dim() > 3) throw UnsupportedDimension("exponent optimization supports d <= 3");
}

// Point where the binary entropy equals R on [0, 1/2].
double binary_entropy_inverse(double R) {
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < R ? lo : hi) = mid;
  }
  return hi;
}

// Boundary of {H(q) >= R} on the 2-simplex, by angle around the uniform point.
class TernaryBoundary {
 public:
  explicit TernaryBoundary(double R) : R_(R) {}

  std::array<double, 3> at(double theta) const {
    const double s2 = std::numbers::sqrt2;
    const double s6 = std::sqrt(6.0);
    const std::array<double, 3> dir = {std::cos(theta) / s2 + std::sin(theta) / s6,
                                       -std::cos(theta) / s2 + std::sin(theta) / s6,
                                       -2.0 * std::sin(theta) / s6};
    double t_max = kInf;
    for (double c : dir) {
      if (c < -1e-15) t_max = std::min(t_max, (1.0 / 3.0) / -c);
    }
    auto point = [&](double t) {
      std::array<double, 3> q{};
      for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(i)] = std::max(0.0, 1.0 / 3.0 + t * dir[static_cast<std::size_t>(i)]);
      const double s = q[0] + q[1] + q[2];
      for (auto& v : q) v /= s;
      return q;
    };
    if (entropy(point(t_max)) >= R_) return point(t_max);
    double lo = 0.0;
    double hi = t_max;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (entropy(point(mid)) >= R_ ? lo : hi) = mid;
    }
    return point(lo);
  }

 private:
  double R_;
};

struct InnerResult {
  double value = kInf;
  std::vector<double> qprime;
};

InnerResult inner_binary(double x, double r, const ProbVector& p) {
  const std::array<double, 2> q = {x, 1.0 - x};
  const double lo = std::max(0.0, 1.0 - r * (1.0 - x));
  const double hi = std::min(1.0, r * x);
  auto f = [&](double y) {
    const std::array<double, 2> qp = {y, 1.0 - y};
    return clone_exponent_objective(q, qp, r, p);
  };
  const Argmin best = golden_min(f, lo, hi);
  return {best.value, {best.x, 1.0 - best.x}};
}

InnerResult inner_ternary(const std::array<double, 3>& q, double r, const ProbVector& p) {
  // q'_3 = 1 - y1 - y2 must lie in [0, r q_3].
  const double y1_lo = std::max(0.0, 1.0 - r * q[2] - r * q[1]);
  const double y1_hi = std::min(1.0, r * q[0]);
  std::array<double, 3> qp{};
  auto inner = [&](double y1) {
    const double y2_lo = std::max(0.0, 1.0 - r * q[2] - y1);
    const double y2_hi = std::min(r * q[1], 1.0 - y1);
    if (y2_hi < y2_lo) return Argmin{y2_lo, kInf};
    return golden_min(
        [&](double y2) {
          qp = {y1, y2, std::max(0.0, 1.0 - y1 - y2)};
          return clone_exponent_objective(q, qp, r, p);
        },
        y2_lo, y2_hi, 1e-9);
  };
  const Argmin outer = golden_min([&](double y1) { return inner(y1).value; }, y1_lo, y1_hi, 1e-9);
  const Argmin second = inner(outer.x);
  return {second.value, {outer.x, second.x, std::max(0.0, 1.0 - outer.x - second.x)}};
}

ExponentResult at_input(const ProbVector& p) {
  std::vector<double> q(p.values().begin(), p.values().end());
  return {0.0, q, q};
}

ExponentResult clone_binary(const ExponentProblem& prob) {
  const double x_lo = binary_entropy_inverse(prob.R);
  const double x_hi = 1.0 - x_lo;
  const int grid = std::max(2, prob.grid);
  const double step = (x_hi - x_lo) / (grid - 1);
  int best_i = 0;
  double best = kInf;
  for (int i = 0; i < grid; ++i) {
    const double v = inner_binary(x_lo + i * step, prob.r, prob.p).value;
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double x = x_lo + best_i * step;
  // Refine in the neighbouring grid cells until the value settles.
  double a = std::max(x_lo, x - step);
  double b = std::min(x_hi, x + step);
  for (int round = 0; round < 50; ++round) {
    const Argmin refined = golden_min([&](double t) { return inner_binary(t, prob.r, prob.p).value; }, a, b);
    const bool settled = best - refined.value < prob.tol;
    if (refined.value < best) {
      best = refined.value;
      x = refined.x;
    }
    if (settled) break;
    const double half = 0.5 * (b - a);
    a = std::max(x_lo, x - half);
    b = std::min(x_hi, x + half);
  }
  const InnerResult inner = inner_binary(x, prob.r, prob.p);
  return {std::max(0.0, inner.value), {x, 1.0 - x}, inner.qprime};
}

ExponentResult clone_ternary(const ExponentProblem& prob) {
  const TernaryBoundary boundary(prob.R);
  const int grid = std::max(3, prob.grid);
  const double step = 2.0 * std::numbers::pi / grid;
  auto value_at = [&](double theta) { return inner_ternary(boundary.at(theta), prob.r, prob.p).value; };
  int best_i = 0;
  double best = kInf;
  for (int i = 0; i < grid; ++i) {
    const double v = value_at(i * step);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double theta = best_i * step;
  const Argmin refined = golden_min(value_at, theta - step, theta + step);
  if (refined.value < best) theta = refined.x;
  const auto q = boundary.at(theta);
  const InnerResult inner = inner_ternary(q, prob.r, prob.p);
  return {std::max(0.0, inner.value), {q.begin(), q.end()}, inner.qprime};
}

}  // namespace

double clone_exponent_objective(std::span<const double> q, std::span<const double> qprime, double r,
                                const ProbVector& p) {
  double v = binary_entropy(1.0 / r);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) {
      if (qprime[i] > 1e-15) return kInf;
      continue;
    }
    const double ratio = std::clamp(qprime[i] / (r * q[i]), 0.0, 1.0);
    v -= q[i] * binary_entropy(ratio);
  }
  return v + relative_entropy(qprime, p.values()) / r;
}

ExponentResult clone_dilution_exponent(const ExponentProblem& prob) {
  check_problem(prob.R, prob.r, prob.p);
  if (!(prob.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (prob.R <= entropy(prob.p.values())) return at_input(prob.p);
  switch (prob.p.dim()) {
    case 2: return clone_binary(prob);
    case 3: return clone_ternary(prob);
    default: return at_input(prob.p);
  }
}

double iid_dilution_exponent(double R, const ProbVector& p, int grid) {
  check_problem(R, 1.0, p);
  if (R <= entropy(p.values())) return 0.0;
  if (p.dim() == 2) {
    const double x = binary_entropy_inverse(R);
    const std::array<double, 2> a = {x, 1.0 - x};
    const std::array<double, 2> b = {1.0 - x, x};
    return std::min(relative_entropy(a, p.values()), relative_entropy(b, p.values()));
  }
  const TernaryBoundary boundary(R);
  auto value_at = [&](double theta) {
    const auto q = boundary.at(theta);
    return relative_entropy(q, p.values());
  };
  grid = std::max(3, grid);
  const double step = 2.0 * std::numbers::pi / grid;
  int best_i = 0;
  double best = kInf;
  for (int i = 0; i < grid; ++i) {
    const double v = value_at(i * step);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  const Argmin refined = golden_min(value_at, (best_i - 1) * step, (best_i + 1) * step);
  return std::max(0.0, std::min(best, refined.value));
}

double finite_m_exponent_oracle(const CloneParams& params, double R, const Budget& budget) {
  // Largest eigenvalue among the types sharing each sorted form.
  std::map<Partition, double> top;
  for (const auto& e : clone1_type_eigenvalues(params, budget)) {
    const Partition key = e.m_vec.sorted();
    auto [it, inserted] = top.emplace(key, e.log2_value);
    if (!inserted) it->second = std::max(it->second, e.log2_value);
  }
  double best = kInf;
  for (const auto& lambda : enumerate_partitions(params.m, params.d)) {
    const double h = partition_entropy(lambda);
    if (h < R - 1e-12) continue;
    double c_max = kNegInf;
    for (const auto& [mu, value] : top) {
      if (value > c_max && dominates(lambda, mu)) c_max = value;
    }
    if (c_max == kNegInf) continue;
    best = std::min(best, -c_max / params.m - h);
  }
  if (best == kInf) throw Infeasible("no Young index of m reaches entropy " + std::to_string(R));
  return best;
}

TradeoffResult rate_exponent_tradeoff(double eta, double r, const ProbVector& p, int grid, double tol) {
  check_problem(0.0, r, p);
  const double h = entropy(p.values());
  const double top = std::log2(p.dim());
  auto exponent = [&](double R) { return clone_dilution_exponent({R, r, p, grid, tol}).value; };
  TradeoffResult out;
  out.max_exponent = exponent(top);
  if (eta <= 0.0) {
    out.rate = h;
    return out;
  }
  if (eta > out.max_exponent) {
    out.rate = top;
    out.saturated = true;
    return out;
  }
  double lo = h;
  double hi = top;
  for (int it = 0; it < 40 && hi - lo > 1e-10; ++it) {
    const double mid = 0.5 * (lo + hi);
    (exponent(mid) >= eta ? hi : lo) = mid;
  }
  out.rate = hi;
  return out;
}

}  // namespace entsym
