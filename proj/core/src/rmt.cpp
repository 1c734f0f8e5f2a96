#include "ffront/rmt.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "ffront/errors.hpp"
#include "ffront/specfun.hpp"

namespace ffront::rmt {

namespace {

constexpr double kDoublingTolerance = 1e-6;
constexpr double kMinS = -12.0;

double nystrom_det(double z, double s, int nodes, double window) {
  const auto rule = specfun::gauss_legendre(nodes, s, s + window);
  const Eigen::Index n = nodes;
  Eigen::VectorXd sw(n);
  for (Eigen::Index i = 0; i < n; ++i) sw(i) = std::sqrt(rule.weights[static_cast<std::size_t>(i)]);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      const double x = rule.nodes[static_cast<std::size_t>(i)];
      const double y = rule.nodes[static_cast<std::size_t>(j)];
      const double k = -0.5 * z * sw(i) * specfun::airy_ai(0.5 * (x + y)).ai * sw(j);
      a(i, j) = k;
      a(j, i) = k;
    }
    a(j, j) += 1.0;
  }
  return a.partialPivLu().determinant();
}

void check_fredholm_args(double z, double s) {
  if (!std::isfinite(z) || std::abs(z) > 4.0) {
    throw ValidationError("fredholm_h: |z| must be <= 4, got " + std::to_string(z));
  }
  if (!std::isfinite(s) || s < kMinS) {
    throw ValidationError("fredholm_h: s must be >= -12, got " + std::to_string(s));
  }
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

ClosureTerm make_term(int order, long long num, long long den) {
  const long long g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {order, num, den};
}

}  // namespace

SoftEdgeDeterminant fredholm_h(double z, double s, FredholmOptions options) {
  check_fredholm_args(z, s);
  if (options.nodes < 2 || options.nodes > (options.check_doubling ? 256 : 512)) {
    throw ValidationError("fredholm_h: node count out of range: " + std::to_string(options.nodes));
  }
  if (!(options.window > 0.0)) throw ValidationError("fredholm_h: window must be positive");

  SoftEdgeDeterminant out{z, s, 1.0, options.nodes};
  if (z == 0.0) return out;

  out.value = nystrom_det(z, s, options.nodes, options.window);
  if (options.check_doubling) {
    const double refined = nystrom_det(z, s, 2 * options.nodes, options.window);
    if (std::abs(refined - out.value) > kDoublingTolerance) {
      throw InstabilityError("fredholm_h: node doubling moved H(" + std::to_string(z) + ", " +
                             std::to_string(s) + ") by " + std::to_string(std::abs(refined - out.value)));
    }
  }
  return out;
}

double tw1_cdf(double s, int nodes) {
  return fredholm_h(1.0, s, {.nodes = nodes}).value;
}

double g_gse(double lambda, double s, int nodes) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 4.0) {
    throw ValidationError("g_gse: lambda must lie in [0, 4], got " + std::to_string(lambda));
  }
  if (lambda == 0.0) return 1.0;
  const double z = std::sqrt(lambda);
  return 0.5 * fredholm_h(z, s, {.nodes = nodes}).value + 0.5 * fredholm_h(-z, s, {.nodes = nodes}).value;
}

double g_goe(double lambda, double s, int nodes) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda >= 2.0) {
    throw ValidationError("g_goe: lambda must lie in [0, 2), got " + std::to_string(lambda));
  }
  if (lambda == 0.0) return 1.0;
  const double w = std::sqrt(lambda / (2.0 - lambda));
  const double z = std::sqrt(lambda * (2.0 - lambda));
  double value = 0.5 * (1.0 + w) * fredholm_h(z, s, {.nodes = nodes}).value;
  // At lambda = 1 the second weight vanishes and G_GOE reduces to F_1.
  if (w != 1.0) value += 0.5 * (1.0 - w) * fredholm_h(-z, s, {.nodes = nodes}).value;
  return value;
}

double r1(Ensemble ensemble, double x) {
  if (!std::isfinite(x) || x < -12.0 || x > 12.0) {
    throw ValidationError("r1: x must lie in [-12, 12], got " + std::to_string(x));
  }
  const auto [ai, aip] = specfun::airy_ai(x);
  const double aipp = x * ai;
  const double tail = specfun::airy_tail_integral(x);
  if (ensemble == Ensemble::GSE) {
    return 0.5 * aip * aip - 0.5 * ai * aipp - 0.25 * ai * tail;
  }
  return aip * aip - ai * aipp - 0.5 * ai * tail + 0.5 * ai;
}

double r1_integral(Ensemble ensemble, double s) {
  if (!std::isfinite(s) || s < kMinS) {
    throw ValidationError("r1_integral: s must be >= -12, got " + std::to_string(s));
  }
  // r1 is only defined up to 12; beyond that the density is far below 1e-20.
  const double end = std::min(s + 30.0, 12.0);
  if (end <= s) return 0.0;
  const int panels = static_cast<int>(std::ceil(end - s));
  const auto rule = specfun::composite_gauss_legendre(16, panels, s, end);
  return rule.integrate([ensemble](double x) { return r1(ensemble, x); });
}

double predicted_moment(int n, double s) {
  switch (n) {
    case 1:
      return 0.5 * (r1_integral(Ensemble::GOE, s) - 2.0 * r1_integral(Ensemble::GSE, s));
    case 2:
      return -0.5 * r1_integral(Ensemble::GSE, s);
    default:
      throw ValidationError("predicted_moment: only n = 1 and n = 2 are available, got " + std::to_string(n));
  }
}

std::vector<ClosureTerm> closure_coefficients(int n) {
  if (n < 1 || 2 * n > moments::kMaxMomentOrder) {
    throw ValidationError("closure_coefficients: n must lie in [1, 4], got " + std::to_string(n));
  }
  std::vector<ClosureTerm> terms;
  const long long nf = factorial(n);
  for (int k = 0; k <= n / 2; ++k) {
    const long long sign = ((k + n) % 2 == 0) ? 1 : -1;
    const long long num = sign * (1LL << (3 * n - 4 * k)) * factorial(n - k) * nf;
    const long long den = factorial(2 * n - 2 * k) * factorial(n - 2 * k) * factorial(k);
    terms.push_back(make_term(2 * n - 2 * k, num, den));
  }
  for (int k = 0; k <= (n - 1) / 2; ++k) {
    const long long sign = ((k + n) % 2 == 0) ? 1 : -1;
    const long long num = -sign * (1LL << (3 * n - 4 * k - 2)) * factorial(n - k - 1) * nf;
    const long long den = factorial(2 * n - 2 * k - 1) * factorial(n - 2 * k - 1) * factorial(k);
    terms.push_back(make_term(2 * n - 2 * k - 1, num, den));
  }
  return terms;
}

double moment_combination_lhs(int n, const moments::MomentTable& table) {
  if (n < 1 || table.max_order() < 2 * n) {
    throw ValidationError("moment_combination_lhs: need M_1..M_" + std::to_string(2 * n) + ", table has " +
                          std::to_string(table.max_order()));
  }
  double sum = 0.0;
  for (const auto& term : closure_coefficients(n)) {
    sum += static_cast<double>(term.numerator) / static_cast<double>(term.denominator) *
           table(term.moment_order);
  }
  return sum;
}

}  // namespace ffront::rmt
