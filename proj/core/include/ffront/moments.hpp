#pragma once

#include <optional>
#include <vector>

#include "ffront/lattice.hpp"
#include "ffront/pattern.hpp"

namespace ffront::moments {

/// Lattice cutoff that follows the front: l = floor(2t + s (2t)^{1/3} / 2).
[[nodiscard]] long front_index(double t, double s);

struct FrontWindow {
  double t = 2.0;
  double s = 0.0;
  long l = 1;

  /// Throws ValidationError for t < 2 or when the cutoff falls below 1.
  static FrontWindow make(double t, double s);
};

struct QOptions {
  std::optional<int> dim;
  /// Re-evaluate with dim + 50 and throw InstabilityError if the value moves
  /// by more than 1e-6.
  bool verify_truncation = false;
};

/// det(I + lambda K) for an already assembled kernel. Throws InstabilityError
/// if the determinant has an imaginary part above 1e-8.
[[nodiscard]] double generating_q(double lambda, const lattice::KernelMatrix& kernel);

/// Q(lambda, t, l) = <exp(lambda F_l)>_t.
[[nodiscard]] double generating_q(double lambda, double t, long l,
                                  const PeriodicPattern& pattern = PeriodicPattern::alternating(),
                                  QOptions options = {});

inline constexpr int kMaxMomentOrder = 8;

/// M_1 .. M_{n_max} of F_l at time t.
struct MomentTable {
  double t = 0.0;
  long l = 1;
  std::optional<double> s;
  std::vector<double> values;
  /// |e_n| is below 1e-14 of the largest term cancelling inside the Newton
  /// recursion; M_n is round-off.
  std::vector<bool> negligible;
  /// Largest imaginary part seen in n! e_n.
  double imag_residue = 0.0;

  [[nodiscard]] int max_order() const { return static_cast<int>(values.size()); }
  /// M_n, 1-based.
  [[nodiscard]] double operator()(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

/// Moments from the kernel spectrum: elementary symmetric polynomials of the
/// eigenvalues via Newton's identities, M_n = n! e_n.
[[nodiscard]] MomentTable moments_from_kernel(const lattice::KernelMatrix& kernel, int n_max,
                                              bool alternating);

[[nodiscard]] MomentTable moment_table(double t, long l, int n_max,
                                       const PeriodicPattern& pattern = PeriodicPattern::alternating());
[[nodiscard]] MomentTable moment_table(const FrontWindow& window, int n_max,
                                       const PeriodicPattern& pattern = PeriodicPattern::alternating());

/// <cosh(2 sqrt(lambda) F_l)>, lambda >= 0.
[[nodiscard]] double lattice_g1(double lambda, double t, long l,
                                const PeriodicPattern& pattern = PeriodicPattern::alternating());

/// <cosh(2 sqrt(lambda(2-lambda)) F_l)> - sqrt(lambda/(2-lambda)) <sinh(...)>,
/// 0 <= lambda < 2.
[[nodiscard]] double lattice_g2(double lambda, double t, long l,
                                const PeriodicPattern& pattern = PeriodicPattern::alternating());

}  // namespace ffront::moments
