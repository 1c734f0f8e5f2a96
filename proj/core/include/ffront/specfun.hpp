#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ffront::specfun {

/// J_0(x) .. J_{n_max}(x) for one argument, produced by a single backward
/// recurrence sweep.
struct BesselRow {
  double argument = 0.0;
  std::vector<double> values;

  [[nodiscard]] int max_order() const { return static_cast<int>(values.size()) - 1; }
  [[nodiscard]] double operator[](std::size_t n) const { return values[n]; }

  /// J_n for any |n| <= max_order(), using J_{-n} = (-1)^n J_n.
  [[nodiscard]] double signed_order(long n) const;
};

/// J_{-n}(x) from J_n(x).
[[nodiscard]] constexpr double negative_order(long n, double jn) {
  return (n % 2 == 0) ? jn : -jn;
}

/// Backward (Miller) recurrence for J_0(x)..J_{n_max}(x), normalized with
/// J_0 + 2 sum_k J_{2k} = 1. The sweep starts at
/// max(n_max, x) + ceil(10 sqrt(max(n_max, x))) + 10.
///
/// Throws ValidationError for x < 0, non-finite x or n_max whose start index
/// would overflow int.
[[nodiscard]] BesselRow bessel_j_row(double x, int n_max);

/// Smallest n_max for which the row carries the full normalization
/// J_0^2 + 2 sum J_n^2 = 1 to double precision.
[[nodiscard]] int bessel_full_order(double x);

struct AiryValue {
  double ai = 0.0;
  double ai_prime = 0.0;
};

/// Switchover points between the Maclaurin series and the asymptotic
/// expansions. Chosen where both representations agree to better than 1e-10
/// (see the continuity test in tests/specfun_test.cpp).
inline constexpr double kAirySeriesMax = 5.0;
inline constexpr double kAirySeriesMin = -7.0;
/// Accepted argument range of airy_ai.
inline constexpr double kAiryDomain = 100.0;

/// Ai(x) and Ai'(x), absolute error below 1e-10 on [-30, 30].
[[nodiscard]] AiryValue airy_ai(double x);

/// The two regimes, exposed separately for the continuity check.
[[nodiscard]] AiryValue airy_series(double x);
[[nodiscard]] AiryValue airy_asymptotic(double x);

/// int_x^inf Ai(y) dy: composite Gauss-Legendre on [x, x + 40] plus the
/// leading asymptotic remainder beyond x + 40.
[[nodiscard]] double airy_tail_integral(double x);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = -1.0;
  double b = 1.0;

  [[nodiscard]] std::size_t size() const { return nodes.size(); }

  template <typename F>
  [[nodiscard]] double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// n-point Gauss-Legendre rule on [a, b], 2 <= n <= 512.
[[nodiscard]] QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite rule: [a, b] split into `panels` equal pieces of `n` nodes each.
[[nodiscard]] QuadratureRule composite_gauss_legendre(int n, int panels, double a, double b);

}  // namespace ffront::specfun
