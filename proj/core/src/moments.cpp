#include "ffront/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ffront/errors.hpp"

namespace ffront::moments {

namespace {

using lattice::Complex;

constexpr double kImagTolerance = 1e-8;
constexpr double kTruncationTolerance = 1e-6;

// Elementary symmetric polynomials e_1..e_n from power sums p_1..p_n.
template <typename T>
std::vector<T> newton_elementary(const std::vector<T>& p, int n) {
  std::vector<T> e(static_cast<std::size_t>(n) + 1, T{});
  e[0] = T{1.0};
  for (int k = 1; k <= n; ++k) {
    T acc{};
    for (int j = 1; j <= k; ++j) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;
      acc += sign * e[static_cast<std::size_t>(k - j)] * p[static_cast<std::size_t>(j)];
    }
    e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
  }
  return e;
}

void check_lambda(double lambda) {
  if (!std::isfinite(lambda)) throw ValidationError("generating function: lambda must be finite");
}

}  // namespace

long front_index(double t, double s) {
  return static_cast<long>(std::floor(2.0 * t + 0.5 * s * std::cbrt(2.0 * t)));
}

FrontWindow FrontWindow::make(double t, double s) {
  if (!std::isfinite(t) || t < 2.0) {
    throw ValidationError("front window: t must be >= 2, got " + std::to_string(t));
  }
  if (!std::isfinite(s)) throw ValidationError("front window: s must be finite");
  FrontWindow w{t, s, front_index(t, s)};
  if (w.l < 1) {
    throw ValidationError("front window: cutoff l = " + std::to_string(w.l) + " < 1 for t=" +
                          std::to_string(t) + ", s=" + std::to_string(s));
  }
  return w;
}

double generating_q(double lambda, const lattice::KernelMatrix& kernel) {
  check_lambda(lambda);
  if (lambda == 0.0) return 1.0;
  Eigen::MatrixXcd a = lambda * kernel.entries;
  a.diagonal().array() += 1.0;
  const Complex det = a.partialPivLu().determinant();
  if (std::abs(det.imag()) > kImagTolerance * std::max(1.0, std::abs(det))) {
    throw InstabilityError("generating_q: determinant has imaginary part " + std::to_string(det.imag()) +
                           " at lambda=" + std::to_string(lambda) + ", t=" + std::to_string(kernel.t) +
                           ", l=" + std::to_string(kernel.l));
  }
  return det.real();
}

double generating_q(double lambda, double t, long l, const PeriodicPattern& pattern, QOptions options) {
  check_lambda(lambda);
  const auto kernel = lattice::kernel_matrix(pattern, t, l, options.dim);
  const double q = generating_q(lambda, kernel);
  if (options.verify_truncation) {
    const auto wider = lattice::kernel_matrix(pattern, t, l, kernel.dim + 50);
    const double q2 = generating_q(lambda, wider);
    if (std::abs(q2 - q) > kTruncationTolerance) {
      throw InstabilityError("generating_q: truncation unstable, dim " + std::to_string(kernel.dim) +
                             " -> " + std::to_string(wider.dim) + " moved Q by " +
                             std::to_string(std::abs(q2 - q)));
    }
  }
  return q;
}

MomentTable moments_from_kernel(const lattice::KernelMatrix& kernel, int n_max, bool alternating) {
  if (n_max < 1 || n_max > kMaxMomentOrder) {
    throw ValidationError("moments: n_max must be in [1, 8], got " + std::to_string(n_max));
  }
  MomentTable table;
  table.t = kernel.t;
  table.l = kernel.l;
  const auto n = static_cast<std::size_t>(n_max);
  table.values.resize(n);
  table.negligible.resize(n);

  std::vector<Complex> power(n + 1, Complex{});
  std::vector<double> abs_power(n + 1, 0.0);

  if (alternating) {
    // Conjugating by diag(i^{-m}) removes the phases i^{m-n} (-1)^{m+n}
    // and leaves the real symmetric kernel J_{m+n}(4t)/2.
    const Eigen::Index d = kernel.dim;
    Eigen::MatrixXd stripped(d, d);
    double residue = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) {
      for (Eigen::Index i = 0; i < d; ++i) {
        const Complex v = lattice::ipow(kernel.l + i) * kernel.entries(i, j) * lattice::ipow(-(kernel.l + j));
        residue = std::max(residue, std::abs(v.imag()));
        stripped(i, j) = v.real();
      }
    }
    const double asym = (stripped - stripped.transpose()).cwiseAbs().maxCoeff();
    if (residue > 1e-10 || asym > 1e-10) {
      throw InstabilityError("moments: phase-stripped alternating kernel is not real symmetric (imag " +
                             std::to_string(residue) + ", asym " + std::to_string(asym) + ")");
    }
    const Eigen::MatrixXd sym = 0.5 * (stripped + stripped.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) throw InstabilityError("moments: eigensolver failed");
    for (Eigen::Index k = 0; k < d; ++k) {
      const double mu = eig.eigenvalues()(k);
      double pw = 1.0;
      for (std::size_t r = 1; r <= n; ++r) {
        pw *= mu;
        power[r] += pw;
        abs_power[r] += std::abs(pw);
      }
    }
  } else {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(kernel.entries, false);
    if (eig.info() != Eigen::Success) throw InstabilityError("moments: eigensolver failed");
    for (Eigen::Index k = 0; k < kernel.dim; ++k) {
      const Complex mu = eig.eigenvalues()(k);
      Complex pw{1.0, 0.0};
      for (std::size_t r = 1; r <= n; ++r) {
        pw *= mu;
        power[r] += pw;
        abs_power[r] += std::abs(pw);
      }
    }
  }

  const auto e = newton_elementary(power, n_max);
  // The Newton recursion run on |mu|^i with all signs positive bounds the
  // magnitude of every term that cancels inside e_r.
  std::vector<double> scale(n + 1, 0.0);
  scale[0] = 1.0;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t i = 1; i <= r; ++i) scale[r] += scale[r - i] * abs_power[i];
    scale[r] /= static_cast<double>(r);
  }
  double factorial = 1.0;
  for (std::size_t r = 1; r <= n; ++r) {
    factorial *= static_cast<double>(r);
    const Complex m = factorial * e[r];
    table.values[r - 1] = m.real();
    table.imag_residue = std::max(table.imag_residue, std::abs(m.imag()));
    table.negligible[r - 1] = std::abs(e[r]) < 1e-14 * scale[r];
  }
  if (table.imag_residue > 1e-6) {
    throw InstabilityError("moments: moments are not real (imaginary residue " +
                           std::to_string(table.imag_residue) + ")");
  }
  return table;
}

MomentTable moment_table(double t, long l, int n_max, const PeriodicPattern& pattern) {
  const auto kernel = lattice::kernel_matrix(pattern, t, l);
  return moments_from_kernel(kernel, n_max, pattern.is_alternating());
}

MomentTable moment_table(const FrontWindow& window, int n_max, const PeriodicPattern& pattern) {
  auto table = moment_table(window.t, window.l, n_max, pattern);
  table.s = window.s;
  return table;
}

double lattice_g1(double lambda, double t, long l, const PeriodicPattern& pattern) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("lattice_g1: lambda must be >= 0, got " + std::to_string(lambda));
  }
  if (lambda == 0.0) return 1.0;
  const auto kernel = lattice::kernel_matrix(pattern, t, l);
  const double z = 2.0 * std::sqrt(lambda);
  return 0.5 * generating_q(z, kernel) + 0.5 * generating_q(-z, kernel);
}

double lattice_g2(double lambda, double t, long l, const PeriodicPattern& pattern) {
  if (!(lambda >= 0.0 && lambda < 2.0)) {
    throw ValidationError("lattice_g2: lambda must lie in [0, 2), got " + std::to_string(lambda));
  }
  if (lambda == 0.0) return 1.0;
  const auto kernel = lattice::kernel_matrix(pattern, t, l);
  const double w = std::sqrt(lambda / (2.0 - lambda));
  const double z = 2.0 * std::sqrt(lambda * (2.0 - lambda));
  double value = 0.5 * (1.0 + w) * generating_q(-z, kernel);
  if (w != 1.0) value += 0.5 * (1.0 - w) * generating_q(z, kernel);
  return value;
}

}  // namespace ffront::moments
