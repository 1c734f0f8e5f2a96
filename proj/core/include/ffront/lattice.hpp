#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "ffront/pattern.hpp"
#include "ffront/specfun.hpp"

namespace ffront::lattice {

using Complex = std::complex<double>;

/// i^k, exact.
[[nodiscard]] Complex ipow(long k);

/// Half-width of the p-sum in the general-pattern correlator:
/// 2t + 12 (2t)^{1/3} + 30.
[[nodiscard]] double product_sum_window(double t);

/// Largest |m|, |n| accepted by the correlator routines.
inline constexpr long kMaxSiteIndex = 10'000'000;

/// Evaluates C_{m,n}(t) = <a^dag_m a_n>_t for one pattern and one time.
/// Bessel rows are computed once and extended on demand, so build one engine
/// per (pattern, t) when evaluating many entries.
class CorrelatorEngine {
 public:
  CorrelatorEngine(PeriodicPattern pattern, double t);

  [[nodiscard]] const PeriodicPattern& pattern() const { return pattern_; }
  [[nodiscard]] double time() const { return t_; }

  /// Closed form for alternating-equivalent patterns, product sum otherwise.
  [[nodiscard]] Complex operator()(long m, long n);

  /// 1/2 delta_{mn} + 1/2 i^{n+m} J_{n-m}(4t). Only valid for the
  /// alternating state; throws ValidationError otherwise.
  [[nodiscard]] Complex closed_form(long m, long n);

  /// i^{n-m} sum_p S_p J_{m-p}(2t) J_{n-p}(2t), truncated to the window
  /// where both Bessel factors are non-negligible.
  [[nodiscard]] Complex product_sum(long m, long n);

  /// Reserve Bessel orders so that indices up to `max_abs_index` are cheap.
  void reserve(long max_abs_index);

 private:
  double bessel_2t(long order);
  double bessel_4t(long order);

  PeriodicPattern pattern_;
  double t_;
  long window_;
  specfun::BesselRow row_2t_;
  specfun::BesselRow row_4t_;
};

/// Single-entry convenience wrapper. Throws ValidationError for t < 0 or
/// |m|, |n| > kMaxSiteIndex.
[[nodiscard]] Complex correlator(const PeriodicPattern& pattern, long m, long n, double t);

/// Anti-diagonal front of the alternating state at
/// m = floor(2t + x (2t)^{1/3} / 2).
struct FrontSample {
  long m = 0;
  /// 2 (2t)^{1/3} C_{m,-m}(t); C_{m,-m} is real for the alternating state.
  double lattice = 0.0;
  double airy = 0.0;
};

/// Requires t >= 2.
[[nodiscard]] FrontSample front_profile(double t, double x);

/// dim x dim block of C_{m,-n}(t) for m, n in [l, l + dim).
struct KernelMatrix {
  double t = 0.0;
  long l = 1;
  int dim = 0;
  Eigen::MatrixXcd entries;
};

inline constexpr int kMaxKernelDim = 5000;

/// max(8, ceil(4t + 12 (2t)^{1/3} + 40) - 2l).
[[nodiscard]] int default_kernel_dim(double t, long l);

/// Throws ValidationError for l < 1, t < 0, dim < 1 or dim > kMaxKernelDim.
[[nodiscard]] KernelMatrix kernel_matrix(const PeriodicPattern& pattern, double t, long l,
                                         std::optional<int> dim = std::nullopt);

}  // namespace ffront::lattice
