#pragma once

#include "ffront/moments.hpp"

namespace ffront::rmt {

/// H(z, s) = det[1 - (z/2) Ai((x+y)/2)] on L^2(s, inf).
struct SoftEdgeDeterminant {
  double z = 0.0;
  double s = 0.0;
  double value = 1.0;
  int nodes_used = 0;
};

struct FredholmOptions {
  int nodes = 64;
  /// Length of the truncated integration window [s, s + window].
  double window = 40.0;
  /// Recompute with 2 * nodes and throw InstabilityError if the value moves
  /// by more than 1e-6.
  bool check_doubling = true;
};

/// Nystrom discretization with a Gauss-Legendre rule on [s, s + window].
/// Requires |z| <= 4 and s >= -12.
[[nodiscard]] SoftEdgeDeterminant fredholm_h(double z, double s, FredholmOptions options = {});

/// GOE Tracy-Widom distribution F_1(s) = H(1, s).
[[nodiscard]] double tw1_cdf(double s, int nodes = 64);

/// Soft-edge GSE gap generating function, lambda in [0, 4].
[[nodiscard]] double g_gse(double lambda, double s, int nodes = 64);

/// Soft-edge GOE gap generating function, lambda in [0, 2).
[[nodiscard]] double g_goe(double lambda, double s, int nodes = 64);

enum class Ensemble { GOE, GSE };

/// One-point density R_1 at the soft edge, x in [-12, 12]. Ai'' is replaced
/// by x Ai.
[[nodiscard]] double r1(Ensemble ensemble, double x);

/// int_s^inf R_1(x) dx by composite Gauss-Legendre on [s, s + 30].
[[nodiscard]] double r1_integral(Ensemble ensemble, double s);

/// Soft-edge predictions for the first two moments:
///   M_1 ~ 1/2 int_s^inf (R_1^GOE - 2 R_1^GSE),  M_2 ~ -1/2 int_s^inf R_1^GSE.
[[nodiscard]] double predicted_moment(int n, double s);

/// Exact rational coefficient of one moment in the order-n closure identity.
struct ClosureTerm {
  int moment_order = 0;
  long long numerator = 0;
  long long denominator = 1;
};

/// Coefficients of the combination of M_{n}..M_{2n} whose soft-edge limit is
/// the n-fold integral of R_n^GOE. For n = 1 this is 2 M_1 - 4 M_2.
[[nodiscard]] std::vector<ClosureTerm> closure_coefficients(int n);

/// Evaluates the closure combination on a moment table holding at least
/// M_1..M_{2n}; throws ValidationError otherwise.
[[nodiscard]] double moment_combination_lhs(int n, const moments::MomentTable& table);

}  // namespace ffront::rmt
