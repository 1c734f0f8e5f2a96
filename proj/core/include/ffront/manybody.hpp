#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ffront/pattern.hpp"

namespace ffront::lattice {

/// Periodic ring with sites labelled -L .. L-1 (2L = sites) and unit hopping.
struct FiniteRing {
  int sites = 12;

  [[nodiscard]] int half() const { return sites / 2; }
};

inline constexpr int kMaxRingSites = 14;

/// <a^dag_a a_b>
struct TwoPoint {
  long a = 0;
  long b = 0;
};

/// <a^dag_a a_b a^dag_c a_d>
struct FourPoint {
  long a = 0;
  long b = 0;
  long c = 0;
  long d = 0;
};

using CorrelatorQuery = std::variant<TwoPoint, FourPoint>;

/// Exact many-body state on a small ring: the fixed-particle-number Fock
/// sector is built explicitly, the Hamiltonian is diagonalized densely and
/// the initial product state is evolved to time t. Nothing here uses the
/// single-particle machinery, which is what makes it an oracle for it.
class ManyBodyState {
 public:
  /// Throws ValidationError if the ring is odd, smaller than 2, larger than
  /// kMaxRingSites, or the pattern period does not divide the ring size.
  ManyBodyState(FiniteRing ring, const PeriodicPattern& pattern, double t);

  [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
  [[nodiscard]] int particles() const { return particles_; }
  [[nodiscard]] const FiniteRing& ring() const { return ring_; }

  /// <prod_k a^dag_{i_k} a_{j_k}> with the product ordered left to right.
  /// Site labels are taken modulo the ring size.
  [[nodiscard]] std::complex<double> expectation(std::span<const std::pair<long, long>> hops) const;

  [[nodiscard]] std::complex<double> two_point(long a, long b) const;
  [[nodiscard]] std::complex<double> four_point(long a, long b, long c, long d) const;

  /// <N> computed from the evolved state; equals particles() when number is
  /// conserved.
  [[nodiscard]] double total_number() const;

  [[nodiscard]] double norm() const { return state_.norm(); }

 private:
  [[nodiscard]] int bit_of(long site) const;
  /// a^dag_i a_j applied to a vector in the sector basis.
  [[nodiscard]] Eigen::VectorXcd apply_hop(int i, int j, const Eigen::VectorXcd& v) const;

  FiniteRing ring_;
  int particles_ = 0;
  std::vector<std::uint32_t> basis_;
  std::vector<int> index_of_;
  Eigen::VectorXcd state_;
};

/// Evaluates each query on the evolved ring state.
[[nodiscard]] std::vector<std::complex<double>> manybody_oracle(
    FiniteRing ring, const PeriodicPattern& pattern, double t,
    std::span<const CorrelatorQuery> points);

}  // namespace ffront::lattice
