// Acceptance run: one PASS/FAIL line per criterion. With an argument k only
// criterion k runs. Exit status is nonzero when any selected criterion fails.

#include "entsym/cloning.hpp"
#include "entsym/exponents.hpp"
#include "entsym/loccsim.hpp"
#include "entsym/oracle_check.hpp"
#include "entsym/ratelab.hpp"
#include "entsym/repthy.hpp"
#include "entsym/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace entsym;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures += " [failed: " + what + "]";
    }
  }
};

ProbVector pv(std::vector<double> v) { return ProbVector(std::move(v)); }

// H(0.7, 0.3) from the binary entropy formula, independent of the library.
double h_of_p() { return -(0.7 * std::log2(0.7) + 0.3 * std::log2(0.3)); }

Verdict criterion_1() {
  Verdict v;
  for (int d = 2; d <= 3; ++d) {
    const int top = d == 2 ? 40 : 20;
    for (int n = 1; n <= top; ++n) {
      BigInt total = 0;
      for (const auto& lambda : enumerate_partitions(n, d)) total += dim_u(lambda, d) * dim_v(lambda);
      BigInt power = 1;
      for (int k = 0; k < n; ++k) power *= d;
      v.require(total == power, "completeness n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  double worst_dim = -1e300;
  double worst_type = -1e300;
  long checked = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 100; ++n) {
      const double dim_bound = d * d * std::log2(n);
      const double type_bound = (d * d + 2.0 * d) / (2.0 * n) * std::log2(n + d);
      for (const auto& lambda : enumerate_partitions(n, d)) {
        worst_dim = std::max(worst_dim, log2_big(dim_u(lambda, d)) - dim_bound);
        const double h = partition_entropy(lambda);
        worst_type = std::max(worst_type, std::abs(log2_big(dim_v(lambda)) / n - h) - type_bound);
        ++checked;
      }
    }
  }
  v.require(worst_dim <= 0.0, "dimension growth bound");
  v.require(worst_type <= 0.0, "type entropy bound");
  v.detail << "completeness exact for d=2 n<=40 and d=3 n<=20; " << checked
           << " partitions checked, max slack used: dim " << worst_dim << ", type " << worst_type;
  return v;
}

Verdict criterion_2() {
  Verdict v;
  double worst = 0.0;
  std::size_t lines = 0;
  for (const char* scope : {"spectra", "clone1", "clone2"}) {
    for (const auto& line : oracle_check(scope)) {
      ++lines;
      if (line.status != CheckStatus::pass) v.require(false, line.name);
      worst = std::max(worst, line.deviation);
    }
  }
  v.require(worst <= 1e-10, "elementwise deviation");
  v.detail << lines << " dense comparisons (d=2, Hilbert dim <= 4096), max elementwise deviation " << worst;
  return v;
}

Verdict criterion_3() {
  Verdict v;
  std::mt19937_64 rng(20261016);
  auto simplex = [&](int d) {
    std::vector<double> x(static_cast<std::size_t>(d));
    double s = 0;
    for (auto& e : x) s += (e = std::exponential_distribution<double>(1.0)(rng));
    for (auto& e : x) e /= s;
    return ProbVector(x);
  };
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  double worst = 0.0;
  int draws = 0;
  auto record = [&](double mass) {
    worst = std::max(worst, std::abs(mass - 1.0));
    ++draws;
  };
  for (int i = 0; i < 90; ++i) {
    const int d = uniform(2, 3);
    const auto p = simplex(d);
    const int n = uniform(1, d == 2 ? 200 : 50);
    const auto bs = iid_block_spectrum(p, n);
    record(bs.total_mass());
    record(flatten(bs, Measure::b_measure).total_mass());
    record(iid_type_spectrum(p, n).total_mass());
  }
  for (int i = 0; i < 90; ++i) {
    const int d = uniform(2, 3);
    const auto p = simplex(d);
    const int n = uniform(1, 20);
    const int m = n + uniform(0, d == 2 ? 120 : 20);
    const CloneParams cp(n, m, p);
    record(clone1_spectrum(cp).total_mass());
    const auto bs = clone1_block_spectrum(cp);
    record(bs.total_mass());
    record(flatten(bs, Measure::c_measure).total_mass());
  }
  for (int i = 0; i < 60; ++i) {
    const auto p = simplex(2);
    const int n = uniform(1, 10);
    const int m = n + uniform(0, 20);
    const auto sp = clone2_spectrum(CloneParams(n, m, p));
    record(sp.flagged().total_mass());
    record(sp.merged().total_mass());
  }
  v.require(draws >= 200, "draw count");
  v.require(worst <= 1e-9, "normalization");
  v.detail << draws << " spectra from 240 random parameter draws, max |mass - 1| = " << worst;
  return v;
}

Verdict criterion_4() {
  Verdict v;
  const double h = h_of_p();
  const auto p = pv({0.7, 0.3});
  const auto at = [&](int m) {
    const auto ws = clone1_spectrum(CloneParams::from_ratio(m, 2.0, p));
    return std::pair{estimate_Ec(ws, 0.01).rate, estimate_Ed(ws, 0.01).rate};
  };
  const auto [ec50, ed50] = at(50);
  const auto [ec200, ed200] = at(200);
  const double dc50 = std::abs(ec50 - h);
  const double dd50 = std::abs(ed50 - h);
  const double dc200 = std::abs(ec200 - h);
  const double dd200 = std::abs(ed200 - h);
  v.require(dc200 <= 0.06, "|Ec - H| <= 0.06 at m=200");
  v.require(dd200 <= 0.06, "|Ed - H| <= 0.06 at m=200");
  v.require(dc200 < dc50, "Ec deviation shrinks 50 -> 200");
  v.require(dd200 < dd50, "Ed deviation shrinks 50 -> 200");
  v.detail << "H(p)=" << h << "; m=50: Ec " << ec50 << " Ed " << ed50 << "; m=200: Ec " << ec200 << " (dev "
           << dc200 << ") Ed " << ed200 << " (dev " << dd200 << ")";
  return v;
}

Verdict criterion_5() {
  Verdict v;
  const auto p = pv({0.7, 0.3});
  std::vector<WeightedSpectrum> family;
  for (int m : {50, 100, 200}) family.push_back(clone1_spectrum(CloneParams::from_ratio(m, 2.0, p)));
  const std::vector<double> eps{0.001, 0.01, 0.05};
  const auto report = strong_converse_report(family, eps);
  v.require(report.last_gap <= 0.05, "gap <= 0.05 at m=200");
  v.require(report.epsilon_spread <= 0.02, "gap spread across epsilon <= 0.02");
  v.detail << "m=200 gaps:";
  for (const auto& row : report.rows) {
    if (row.n == report.rows.back().n) v.detail << " eps=" << row.epsilon << " -> " << row.gap;
  }
  v.detail << "; spread " << report.epsilon_spread << "; m=50 max gap " << report.first_gap;
  return v;
}

Verdict criterion_6() {
  Verdict v;
  const auto p = pv({0.7, 0.3});
  const double h = h_of_p();
  double zero_dev = 0.0;
  for (double R : {0.0, 0.3, 0.6, h}) {
    for (double r : {1.0, 2.0, 3.5}) {
      zero_dev = std::max(zero_dev, clone_dilution_exponent({R, r, p, 2001, 1e-6}).value);
    }
  }
  v.require(zero_dev <= 1e-6, "zero exponent below H(p)");

  int points = 0;
  double worst_order = -1e300;
  for (int i = 0; i < 10; ++i) {
    const double R = 0.5 + 0.5 * i / 9.0;
    for (double r : {1.0, 1.5, 2.0, 3.0, 5.0}) {
      const double clone = clone_dilution_exponent({R, r, p, 2001, 1e-6}).value;
      const double iid = iid_dilution_exponent(R, p);
      worst_order = std::max({worst_order, clone - iid / r, iid / r - iid});
      ++points;
    }
  }
  v.require(points == 50 && worst_order <= 1e-6, "clone <= iid/r <= iid on 50-point grid");

  const double kl = 0.5 * std::log2(0.5 / 0.7) + 0.5 * std::log2(0.5 / 0.3);
  const double iid1 = iid_dilution_exponent(1.0, p);
  v.require(std::abs(iid1 - 0.1258) <= 1e-4, "iid exponent at R=1 equals 0.1258 +- 1e-4");

  const double opt = clone_dilution_exponent({1.0, 2.0, p, 2001, 1e-6}).value;
  const double fin = finite_m_exponent_oracle(CloneParams::from_ratio(400, 2.0, p), 1.0);
  v.require(std::abs(fin - opt) <= 0.02, "finite-m oracle within 0.02 at m=400");
  v.detail << "max exponent below H(p) " << zero_dev << "; ordering slack " << worst_order << " over " << points
           << " points; iid(R=1)=" << iid1 << " (D((1/2,1/2)||p)=" << kl << "); optimizer(R=1,r=2)=" << opt
           << ", oracle(m=400)=" << fin;
  return v;
}

Verdict criterion_7() {
  Verdict v;
  const auto p = pv({0.7, 0.3});
  const std::int64_t trials = 100000;
  double worst_sigma = 0.0;
  for (const auto& [n, R] : std::vector<std::pair<int, double>>{{50, 0.95}, {200, 0.9}, {200, 0.85}}) {
    const auto bs = iid_block_spectrum(p, n);
    const auto run = simulate_dilution(bs, R, trials, 7 + static_cast<std::uint64_t>(n), 0);
    const double exact = dimension_threshold_mass(bs, R);
    const double rate = summarize(run).success_rate;
    const double sigma = std::sqrt(std::max(exact * (1 - exact), 1e-300) / trials);
    const double z = std::abs(rate - exact) / sigma;
    worst_sigma = std::max(worst_sigma, z);
    v.require(z <= 4.0, "dilution success n=" + std::to_string(n));
    for (const auto& t : run.results) {
      if (t.ebits > dilution_ebit_bound(n, 2, R) + 1e-9) {
        v.require(false, "ebit ledger bound");
        break;
      }
    }
  }
  const auto bs = iid_block_spectrum(p, 200);
  const auto run = simulate_distillation(BlockSampler(bs), trials, 1234, 0);
  const auto flat = flatten(bs, Measure::b_measure);
  const std::vector<double> levels{0.01, 0.05, 0.1};
  const auto summary = summarize(run, levels);
  double worst_q = 0.0;
  for (const auto& [level, value] : summary.yield_quantiles) {
    worst_q = std::max(worst_q, std::abs(value - estimate_Ed(flat, level).rate));
  }
  v.require(worst_q <= 0.05, "distillation yield quantiles vs estimate_Ed");
  v.detail << "dilution max |z| " << worst_sigma << " (limit 4); ebit ledger within bound; distillation n=200 "
           << "quantile deviation " << worst_q << " (limit 0.05)";
  return v;
}

Verdict criterion_8() {
  Verdict v;
  const double h = h_of_p();
  const auto p = pv({0.7, 0.3});
  double previous = 1e300;
  v.detail << "Ec(eps=0.01) flagged [merged]:";
  for (int m = 10; m <= 60; m += 10) {
    const auto sp = clone2_spectrum(CloneParams::from_ratio(m, 2.0, p));
    const double ec = estimate_Ec(sp.flagged(), 0.01).rate;
    const double merged = estimate_Ec(sp.merged(), 0.01).rate;
    v.require(ec <= h + 0.1, "m=" + std::to_string(m) + " Ec <= H(p)+0.1");
    v.require(ec < previous, "decreasing at m=" + std::to_string(m));
    previous = ec;
    v.detail << " m=" << m << ": " << ec << " [" << merged << "]";
  }
  v.detail << "; H(p)+0.1=" << h + 0.1;
  return v;
}

struct Criterion {
  int id;
  double time_limit_s;
  std::function<Verdict()> fn;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, 10.0, criterion_1},  {2, 60.0, criterion_2}, {3, 0.0, criterion_3},   {4, 30.0, criterion_4},
      {5, 0.0, criterion_5},   {6, 120.0, criterion_6}, {7, 60.0, criterion_7}, {8, 0.0, criterion_8},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.fn();
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0) {
      v.require(elapsed <= c.time_limit_s, "runtime limit " + std::to_string(c.time_limit_s) + " s");
    }
    std::printf("criterion %d: %s (%.2f s) %s\n", c.id, v.pass ? "PASS" : "FAIL", elapsed, (v.detail.str() + v.failures).c_str());
    std::fflush(stdout);
    all_pass = all_pass && v.pass;
  }
  return all_pass ? 0 : 1;
}
