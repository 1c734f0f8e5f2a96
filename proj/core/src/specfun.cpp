#include "ffront/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ffront/errors.hpp"

namespace ffront::specfun {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;

// Ai(0) and -Ai'(0).
constexpr double kAi0 = 0.355028053887817239260063186004;
constexpr double kMinusAip0 = 0.258819403792806798405183560189;

}  // namespace

double BesselRow::signed_order(long n) const {
  const long k = n < 0 ? -n : n;
  const double jk = values.at(static_cast<std::size_t>(k));
  return n < 0 ? negative_order(k, jk) : jk;
}

int bessel_full_order(double x) {
  return static_cast<int>(std::ceil(x + 12.0 * std::cbrt(x) + 20.0));
}

BesselRow bessel_j_row(double x, int n_max) {
  if (!std::isfinite(x) || x < 0.0) {
    throw ValidationError("bessel_j_row: argument must be finite and >= 0, got " +
                          std::to_string(x));
  }
  if (n_max < 0) throw ValidationError("bessel_j_row: n_max must be >= 0");

  const double big = std::max(static_cast<double>(n_max), std::ceil(x));
  const double start_d = big + std::ceil(10.0 * std::sqrt(std::max(big, 1.0))) + 10.0;
  if (start_d > static_cast<double>(std::numeric_limits<int>::max() - 2)) {
    throw ValidationError("bessel_j_row: recurrence start index overflows for n_max=" +
                          std::to_string(n_max) + ", x=" + std::to_string(x));
  }

  BesselRow row;
  row.argument = x;
  row.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

  if (x == 0.0) {
    row.values[0] = 1.0;
    return row;
  }

  if (x < 1e-100) {
    // Leading power-series term is exact in double precision here.
    double term = 1.0;
    for (int n = 0; n <= n_max; ++n) {
      row.values[static_cast<std::size_t>(n)] = term;
      term *= 0.5 * x / (n + 1);
    }
    return row;
  }

  const int start = static_cast<int>(start_d);
  double next = 0.0;  // f_{k+1}
  double cur = 1.0;   // f_k
  double norm = (start % 2 == 0) ? 2.0 * cur : 0.0;
  if (start <= n_max) row.values[static_cast<std::size_t>(start)] = cur;

  for (int k = start; k >= 1; --k) {
    double prev = (2.0 * k / x) * cur - next;  // f_{k-1}
    if (std::abs(prev) > kRescaleAbove) {
      prev *= kRescaleBy;
      cur *= kRescaleBy;
      norm *= kRescaleBy;
      const int lo = k;
      for (int j = lo; j <= n_max; ++j) row.values[static_cast<std::size_t>(j)] *= kRescaleBy;
    }
    next = cur;
    cur = prev;
    const int km1 = k - 1;
    if (km1 <= n_max) row.values[static_cast<std::size_t>(km1)] = cur;
    if (km1 == 0) {
      norm += cur;
    } else if (km1 % 2 == 0) {
      norm += 2.0 * cur;
    }
  }

  for (double& v : row.values) v /= norm;
  return row;
}

AiryValue airy_series(double x) {
  const double x3 = x * x * x;
  double a = 1.0;          // f terms
  double b = x;            // g terms
  double c = 0.5 * x * x;  // f' terms (starting at k = 1)
  double d = 1.0;          // g' terms
  double f = a, g = b, fp = c, gp = d;
  for (int k = 1; k < 200; ++k) {
    const double kk = k;
    a *= x3 / ((3 * kk - 1) * (3 * kk));
    b *= x3 / ((3 * kk) * (3 * kk + 1));
    d *= x3 / ((3 * kk - 2) * (3 * kk));
    if (k >= 2) c *= x3 / ((3 * kk - 3) * (3 * kk - 1));
    f += a;
    g += b;
    gp += d;
    if (k >= 2) fp += c;
    const double scale = std::max({std::abs(f), std::abs(g), std::abs(fp), std::abs(gp), 1.0});
    if (std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) < 1e-18 * scale && k > 3) break;
  }
  return {kAi0 * f - kMinusAip0 * g, kAi0 * fp - kMinusAip0 * gp};
}

AiryValue airy_asymptotic(double x) {
  constexpr int kMaxTerms = 40;
  const double z = std::abs(x);
  const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const double z14 = std::sqrt(std::sqrt(z));

  // u_k / zeta^k and v_k / zeta^k, truncated at the smallest term.
  double u[kMaxTerms];
  double v[kMaxTerms];
  u[0] = 1.0;
  v[0] = 1.0;
  int terms = 1;
  double uk = 1.0;
  for (int k = 1; k < kMaxTerms; ++k) {
    const double kk = k;
    uk *= (6 * kk - 5) * (6 * kk - 3) * (6 * kk - 1) / ((2 * kk - 1) * 216.0 * kk) / zeta;
    const double vk = -(6 * kk + 1) / (6 * kk - 1) * uk;
    if (std::abs(uk) > std::abs(u[k - 1]) || std::abs(vk) > std::abs(v[k - 1])) break;
    u[k] = uk;
    v[k] = vk;
    terms = k + 1;
    if (std::abs(uk) < 1e-18 && std::abs(vk) < 1e-18) break;
  }

  if (x > 0.0) {
    double su = 0.0, sv = 0.0, sign = 1.0;
    for (int k = 0; k < terms; ++k, sign = -sign) {
      su += sign * u[k];
      sv += sign * v[k];
    }
    const double e = std::exp(-zeta);
    return {0.5 * inv_sqrt_pi / z14 * e * su, -0.5 * inv_sqrt_pi * z14 * e * sv};
  }

  double ue = 0.0, uo = 0.0, ve = 0.0, vo = 0.0;
  for (int k = 0; k < terms; ++k) {
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      ue += sign * u[k];
      ve += sign * v[k];
    } else {
      uo += sign * u[k];
      vo += sign * v[k];
    }
  }
  const double phase = zeta - 0.25 * std::numbers::pi;
  const double cs = std::cos(phase);
  const double sn = std::sin(phase);
  return {inv_sqrt_pi / z14 * (cs * ue + sn * uo), inv_sqrt_pi * z14 * (sn * ve - cs * vo)};
}

AiryValue airy_ai(double x) {
  if (!std::isfinite(x) || std::abs(x) > kAiryDomain) {
    throw ValidationError("airy_ai: argument outside [-100, 100]: " + std::to_string(x));
  }
  if (x >= kAirySeriesMin && x <= kAirySeriesMax) return airy_series(x);
  return airy_asymptotic(x);
}

double airy_tail_integral(double x) {
  if (!std::isfinite(x) || x < -kAiryDomain + 1.0 || x > kAiryDomain - 41.0) {
    throw ValidationError("airy_tail_integral: argument out of range: " + std::to_string(x));
  }
  static const QuadratureRule unit16 = gauss_legendre(16, 0.0, 1.0);
  static const QuadratureRule unit20 = gauss_legendre(20, 0.0, 1.0);

  const auto panel = [](const QuadratureRule& unit, double a, double b) {
    const double h = b - a;
    double sum = 0.0;
    for (std::size_t i = 0; i < unit.size(); ++i) sum += unit.weights[i] * airy_ai(a + h * unit.nodes[i]).ai;
    return h * sum;
  };

  const double end = x + 40.0;
  double sum = 0.0;
  double a = x;
  // Oscillatory side: unit panels up to 0.
  if (a < 0.0) {
    const int n = static_cast<int>(std::ceil(-a));
    const double h = -a / n;
    for (int i = 0; i < n; ++i) sum += panel(unit16, a + i * h, a + (i + 1) * h);
    a = 0.0;
  }
  // Decaying side: geometrically growing panels.
  constexpr double widths[] = {1.0, 1.0, 2.0, 4.0, 8.0};
  for (double w : widths) {
    const double b = std::min(a + w, end);
    if (b <= a) break;
    sum += panel(unit20, a, b);
    a = b;
  }
  if (a < end) sum += panel(unit20, a, end);

  // int_end^inf Ai ~ exp(-zeta) / (2 sqrt(pi) end^{3/4}).
  const double zeta = 2.0 / 3.0 * end * std::sqrt(end);
  sum += std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(end, 0.75));
  return sum;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 2 || n > 512) throw ValidationError("gauss_legendre: n must be in [2, 512]");
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("gauss_legendre: need finite a < b");
  }
  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw InstabilityError("gauss_legendre: Newton iteration did not converge for root " +
                             std::to_string(i) + " of n=" + std::to_string(n));
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0, p1 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * z;
    rule.nodes[hi] = mid + half * z;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = mid;
  return rule;
}

QuadratureRule composite_gauss_legendre(int n, int panels, double a, double b) {
  if (panels < 1) throw ValidationError("composite_gauss_legendre: panels must be >= 1");
  const QuadratureRule unit = gauss_legendre(n, 0.0, 1.0);
  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  const double h = (b - a) / panels;
  rule.nodes.reserve(unit.size() * static_cast<std::size_t>(panels));
  rule.weights.reserve(rule.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (std::size_t i = 0; i < unit.size(); ++i) {
      rule.nodes.push_back(lo + h * unit.nodes[i]);
      rule.weights.push_back(h * unit.weights[i]);
    }
  }
  return rule;
}

}  // namespace ffront::specfun
