#include "ffront/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ffront/errors.hpp"

namespace ffront::lattice {

namespace {

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw ValidationError("correlator: time must be finite and >= 0, got " + std::to_string(t));
  }
}

void check_site(long m) {
  if (m > kMaxSiteIndex || m < -kMaxSiteIndex) {
    throw ValidationError("correlator: site index out of range: " + std::to_string(m));
  }
}

long grow(long needed) { return std::max(needed, 64L) + needed / 2; }

}  // namespace

Complex ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double product_sum_window(double t) { return 2.0 * t + 12.0 * std::cbrt(2.0 * t) + 30.0; }

CorrelatorEngine::CorrelatorEngine(PeriodicPattern pattern, double t)
    : pattern_(std::move(pattern)),
      t_(t),
      window_(0) {
  check_time(t);
  window_ = static_cast<long>(std::floor(product_sum_window(t)));
}

void CorrelatorEngine::reserve(long max_abs_index) {
  if (pattern_.is_alternating()) {
    const long need = 2 * max_abs_index;
    if (row_4t_.max_order() < need) row_4t_ = specfun::bessel_j_row(4.0 * t_, static_cast<int>(need));
  } else {
    const long need = max_abs_index + window_;
    if (row_2t_.max_order() < need) row_2t_ = specfun::bessel_j_row(2.0 * t_, static_cast<int>(need));
  }
}

double CorrelatorEngine::bessel_2t(long order) {
  const long k = order < 0 ? -order : order;
  if (row_2t_.max_order() < k) row_2t_ = specfun::bessel_j_row(2.0 * t_, static_cast<int>(grow(k)));
  return row_2t_.signed_order(order);
}

double CorrelatorEngine::bessel_4t(long order) {
  const long k = order < 0 ? -order : order;
  if (row_4t_.max_order() < k) row_4t_ = specfun::bessel_j_row(4.0 * t_, static_cast<int>(grow(k)));
  return row_4t_.signed_order(order);
}

Complex CorrelatorEngine::operator()(long m, long n) {
  return pattern_.is_alternating() ? closed_form(m, n) : product_sum(m, n);
}

Complex CorrelatorEngine::closed_form(long m, long n) {
  if (!pattern_.is_alternating()) {
    throw ValidationError("closed-form correlator requires the alternating pattern, got " +
                          pattern_.to_string());
  }
  check_site(m);
  check_site(n);
  Complex value = 0.5 * ipow(n + m) * bessel_4t(n - m);
  if (m == n) value += 0.5;
  return value;
}

Complex CorrelatorEngine::product_sum(long m, long n) {
  check_site(m);
  check_site(n);
  const long lo = std::max(m, n) - window_;
  const long hi = std::min(m, n) + window_;
  double sum = 0.0;
  for (long p = lo; p <= hi; ++p) {
    if (!pattern_.occupied(p)) continue;
    sum += bessel_2t(m - p) * bessel_2t(n - p);
  }
  return ipow(n - m) * sum;
}

Complex correlator(const PeriodicPattern& pattern, long m, long n, double t) {
  CorrelatorEngine engine(pattern, t);
  return engine(m, n);
}

FrontSample front_profile(double t, double x) {
  if (!std::isfinite(t) || t < 2.0) {
    throw ValidationError("front_profile: t must be >= 2, got " + std::to_string(t));
  }
  const double scale = std::cbrt(2.0 * t);
  FrontSample out;
  out.m = static_cast<long>(std::floor(2.0 * t + 0.5 * x * scale));
  CorrelatorEngine engine(PeriodicPattern::alternating(), t);
  out.lattice = 2.0 * scale * engine.closed_form(out.m, -out.m).real();
  out.airy = specfun::airy_ai(x).ai;
  return out;
}

int default_kernel_dim(double t, long l) {
  const double edge = std::ceil(4.0 * t + 12.0 * std::cbrt(2.0 * t) + 40.0);
  const double dim = edge - 2.0 * static_cast<double>(l);
  return static_cast<int>(std::max(8.0, std::min(dim, static_cast<double>(kMaxKernelDim) + 1.0)));
}

KernelMatrix kernel_matrix(const PeriodicPattern& pattern, double t, long l, std::optional<int> dim) {
  check_time(t);
  if (l < 1) throw ValidationError("kernel_matrix: l must be >= 1, got " + std::to_string(l));
  const int d = dim.value_or(default_kernel_dim(t, l));
  if (d < 1) throw ValidationError("kernel_matrix: dim must be >= 1");
  if (d > kMaxKernelDim) {
    throw ValidationError("kernel_matrix: dim " + std::to_string(d) + " exceeds " +
                          std::to_string(kMaxKernelDim));
  }

  KernelMatrix k;
  k.t = t;
  k.l = l;
  k.dim = d;
  k.entries.resize(d, d);

  CorrelatorEngine engine(pattern, t);
  engine.reserve(l + d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) k.entries(i, j) = engine(l + i, -(l + j));
  }
  return k;
}

}  // namespace ffront::lattice
