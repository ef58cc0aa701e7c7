#include "entsym/dense_oracle.hpp"

#include "entsym/error.hpp"
#include "entsym/numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

namespace entsym {

namespace {

using cd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void check_cap(int d, int copies, const Budget& budget) {
  if (d < 1 || copies < 1) throw InvalidArgument("dense oracle: bad dimensions");
  const double dim = std::pow(static_cast<double>(d), 2.0 * copies);
  if (dim > static_cast<double>(budget.dense_cap)) {
    throw BudgetExceeded("dense oracle: Hilbert dimension " + std::to_string(static_cast<long long>(dim)) +
                         " exceeds cap " + std::to_string(budget.dense_cap));
  }
}

// Digits of x in base `base`, most significant first.
std::vector<int> digits(std::int64_t x, int base, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = count - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(x % base);
    x /= base;
  }
  return out;
}

std::int64_t from_digits(const std::vector<int>& dig, int base) {
  std::int64_t x = 0;
  for (int v : dig) x = x * base + v;
  return x;
}

// Average of the vector over all permutations of its `copies` subsystems,
// each of dimension `local`.
Vec symmetrize(const Vec& psi, int local, int copies) {
  std::vector<int> perm(static_cast<std::size_t>(copies));
  std::iota(perm.begin(), perm.end(), 0);
  Vec out = Vec::Zero(psi.size());
  double count = 0.0;
  do {
    for (Eigen::Index x = 0; x < psi.size(); ++x) {
      if (psi[x] == cd(0.0)) continue;
      const auto dig = digits(x, local, copies);
      std::vector<int> moved(dig.size());
      for (int i = 0; i < copies; ++i) moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = dig[static_cast<std::size_t>(i)];
      out[from_digits(moved, local)] += psi[x];
    }
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out / count;
}

// Interleaved (a1 b1 a2 b2 ...) vector reshaped to M[a-string][b-string].
Mat reshape_ab(const Vec& psi, int d, int copies) {
  const std::int64_t side = ipow(d, copies);
  Mat m = Mat::Zero(side, side);
  for (Eigen::Index x = 0; x < psi.size(); ++x) {
    if (psi[x] == cd(0.0)) continue;
    const auto pairs = digits(x, d * d, copies);
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (int s : pairs) {
      a = a * d + s / d;
      b = b * d + s % d;
    }
    m(a, b) += psi[x];
  }
  return m;
}

std::vector<double> sorted_eigenvalues(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> ev(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

std::vector<double> sorted_diagonal(const Mat& rho) {
  std::vector<double> diag(static_cast<std::size_t>(rho.rows()));
  for (Eigen::Index i = 0; i < rho.rows(); ++i) diag[static_cast<std::size_t>(i)] = rho(i, i).real();
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

int content_sum(const Partition& lambda) {
  int c = 0;
  for (int i = 0; i < lambda.d(); ++i) c += lambda[i] * (lambda[i] - 1) / 2 - i * lambda[i];
  return c;
}

// tr(rho P_lambda): P_lambda spans the eigenspace of sum_{i<j} SWAP_ij with
// eigenvalue equal to the content sum of lambda.
std::map<Partition, double> block_masses(const Mat& rho, int d, int copies) {
  const std::int64_t side = ipow(d, copies);
  Eigen::MatrixXd cls = Eigen::MatrixXd::Zero(side, side);
  for (std::int64_t x = 0; x < side; ++x) {
    const auto dig = digits(x, d, copies);
    for (int i = 0; i < copies; ++i) {
      for (int j = i + 1; j < copies; ++j) {
        auto swapped = dig;
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
        cls(from_digits(swapped, d), x) += 1.0;
      }
    }
  }

  std::map<int, Partition> by_content;
  for (const auto& lambda : enumerate_partitions(copies, d)) {
    const int c = content_sum(lambda);
    if (by_content.contains(c)) {
      throw UnsupportedDimension("dense oracle: content sums of " + by_content.at(c).to_string() + " and " +
                                 lambda.to_string() + " coincide");
    }
    by_content.emplace(c, lambda);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cls);
  std::map<Partition, double> mass;
  for (const auto& [c, lambda] : by_content) mass[lambda] = 0.0;
  for (Eigen::Index k = 0; k < side; ++k) {
    const int c = static_cast<int>(std::lround(solver.eigenvalues()[k]));
    const auto it = by_content.find(c);
    if (it == by_content.end()) throw std::logic_error("dense oracle: unexpected class-sum eigenvalue");
    const Eigen::VectorXcd v = solver.eigenvectors().col(k).cast<cd>();
    mass[it->second] += (v.adjoint() * rho * v)(0, 0).real();
  }
  return mass;
}

double phase_angle(std::span<const double> phases, const std::vector<int>& counts) {
  double angle = 0.0;
  for (std::size_t k = 0; k < counts.size() && k < phases.size(); ++k) angle += phases[k] * counts[k];
  return angle;
}

// Normalized symmetric state of the given type over `local` symbols, written
// in interleaved form through `embed` (symbol -> pair index).
void add_type_state(Vec& psi, const std::vector<int>& type, int local, cd coeff,
                    const std::function<int(int)>& embed, int pair_base) {
  std::vector<int> word;
  for (int s = 0; s < local; ++s) word.insert(word.end(), static_cast<std::size_t>(type[static_cast<std::size_t>(s)]), s);
  std::sort(word.begin(), word.end());
  std::vector<std::int64_t> indices;
  do {
    std::int64_t x = 0;
    for (int s : word) x = x * pair_base + embed(s);
    indices.push_back(x);
  } while (std::next_permutation(word.begin(), word.end()));
  const double norm = 1.0 / std::sqrt(static_cast<double>(indices.size()));
  for (auto x : indices) psi[x] += coeff * norm;
}

std::vector<TypeVector> compositions(int total, int parts) {
  std::vector<TypeVector> out;
  for_each_composition(total, parts, [&](const TypeVector& t) { out.push_back(t); });
  return out;
}

}  // namespace

DenseOracleResult dense_oracle_spectrum(const ProbVector& p, int n, const Budget& budget) {
  const int d = p.dim();
  check_cap(d, n, budget);
  Vec single = Vec::Zero(d * d);
  for (int k = 0; k < d; ++k) single[k * d + k] = std::sqrt(p[k]);
  Vec psi = single;
  for (int c = 1; c < n; ++c) {
    Vec next(psi.size() * single.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) next.segment(i * single.size(), single.size()) = psi[i] * single;
    psi = std::move(next);
  }
  psi = symmetrize(psi, d * d, n);
  const Mat m = reshape_ab(psi, d, n);
  const Mat rho = m * m.adjoint();

  DenseOracleResult out;
  out.raw.eigenvalues = sorted_eigenvalues(rho);
  out.raw.block_mass = block_masses(rho, d, n);

  out.flat.n = n;
  out.flat.source = "dense";
  for (double v : out.raw.eigenvalues) {
    if (v > 0.0) out.flat.entries.push_back({std::log2(v), 0.0});
  }
  out.block.n = n;
  out.block.d = d;
  out.block.source = "dense";
  for (const auto& [lambda, mass] : out.raw.block_mass) {
    Block b;
    b.lambda = lambda;
    b.dim_u = dim_u(lambda, d);
    b.dim_v = dim_v(lambda);
    b.log2_b = mass > 0.0 ? std::log2(mass) - log2_big(b.dim_v) : kNegInf;
    out.block.blocks.push_back(std::move(b));
  }
  std::sort(out.block.blocks.begin(), out.block.blocks.end(),
            [](const Block& a, const Block& b) { return b.lambda < a.lambda; });
  return out;
}

DenseSpectrum dense_clone1_oracle(const CloneParams& params, const Budget& budget, std::span<const double> phases) {
  const int d = params.d;
  const int m = params.m;
  check_cap(d, m, budget);
  const std::int64_t full = ipow(d * d, m);
  const std::int64_t side = ipow(d, m);
  const auto embed = [d](int s) { return s * d + s; };

  Mat rho = Mat::Zero(side, side);
  for (const auto& shift : compositions(m - params.n, d)) {
    Vec psi = Vec::Zero(full);
    for (const auto& m_vec : compositions(m, d)) {
      std::vector<int> n_counts(static_cast<std::size_t>(d));
      bool ok = true;
      for (int k = 0; k < d; ++k) {
        n_counts[static_cast<std::size_t>(k)] = m_vec[k] - shift[k];
        ok = ok && n_counts[static_cast<std::size_t>(k)] >= 0;
      }
      if (!ok) continue;
      const double amp = std::sqrt(alpha_sq(m_vec, TypeVector(n_counts), params));
      if (amp == 0.0) continue;
      const cd coeff = std::polar(amp, phase_angle(phases, n_counts));
      add_type_state(psi, std::vector<int>(m_vec.counts().begin(), m_vec.counts().end()), d, coeff, embed, d * d);
    }
    psi = symmetrize(psi, d * d, m);
    const Mat mm = reshape_ab(psi, d, m);
    rho += mm * mm.adjoint();
  }

  DenseSpectrum out;
  out.eigenvalues = sorted_eigenvalues(rho);
  out.block_mass = block_masses(rho, d, m);
  return out;
}

DenseClone2 dense_clone2_oracle(const CloneParams& params, const Budget& budget, std::span<const double> phases) {
  const int d = params.d;
  const int m = params.m;
  const int n = params.n;
  check_cap(d, m, budget);
  const int slots = d * d;
  const std::int64_t full = ipow(slots, m);
  const std::int64_t side = ipow(d, m);
  const auto embed = [](int s) { return s; };

  // |alpha~|^2 straight from the displayed product form.
  const LogFactorialTable lf(m + slots);
  const auto log2_alpha_tilde = [&](const std::vector<int>& mt, const std::vector<int>& nt) {
    double v = lf(m - n) + lf(n + slots - 1) - lf(m + slots - 1) + lf(n);
    for (int s = 0; s < slots; ++s) {
      v += lf.log2_binomial(mt[static_cast<std::size_t>(s)], nt[static_cast<std::size_t>(s)]);
      v -= lf(nt[static_cast<std::size_t>(s)]);
    }
    for (int k = 0; k < d; ++k) {
      const int c = nt[static_cast<std::size_t>(k * d + k)];
      if (c > 0) v += c * (params.p[k] > 0.0 ? std::log2(params.p[k]) : kNegInf);
    }
    return v;
  };

  Mat rho = Mat::Zero(side, side);
  std::map<TypeVector, Eigen::VectorXd> branch;
  const auto diagonals = compositions(n, d);
  for (const auto& diag : diagonals) branch.emplace(diag, Eigen::VectorXd::Zero(side));

  for (const auto& shift : compositions(m - n, slots)) {
    Vec psi = Vec::Zero(full);
    for (const auto& diag : diagonals) {
      std::vector<int> nt(static_cast<std::size_t>(slots), 0);
      for (int k = 0; k < d; ++k) nt[static_cast<std::size_t>(k * d + k)] = diag[k];
      std::vector<int> mt(static_cast<std::size_t>(slots));
      for (int s = 0; s < slots; ++s) mt[static_cast<std::size_t>(s)] = nt[static_cast<std::size_t>(s)] + shift[s];
      const double l2 = log2_alpha_tilde(mt, nt);
      if (l2 == kNegInf) continue;
      const cd coeff = std::polar(std::sqrt(std::exp2(l2)),
                                  phase_angle(phases, std::vector<int>(diag.counts().begin(), diag.counts().end())));
      Vec part = Vec::Zero(full);
      add_type_state(part, mt, slots, coeff, embed, slots);
      const Mat pm = reshape_ab(part, d, m);
      branch.at(diag) += (pm * pm.adjoint()).diagonal().real();
      psi += part;
    }
    psi = symmetrize(psi, slots, m);
    const Mat mm = reshape_ab(psi, d, m);
    rho += mm * mm.adjoint();
  }

  DenseClone2 out;
  out.eigenvalues = sorted_eigenvalues(rho);
  out.diagonal = sorted_diagonal(rho);
  for (auto& [diag, vec] : branch) {
    std::vector<double> v(vec.data(), vec.data() + vec.size());
    std::sort(v.begin(), v.end(), std::greater<>());
    out.branch_diagonals.emplace(diag, std::move(v));
  }
  return out;
}

}  // namespace entsym
