#include "ffront/manybody.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "ffront/errors.hpp"

namespace ffront::lattice {

namespace {

// Sign of a^dag_i a_j on a basis state: parity of occupied bits strictly
// between i and j.
int hop_sign(std::uint32_t mask, int i, int j) {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  if (hi - lo < 2) return 1;
  const std::uint32_t between = ((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u);
  return (std::popcount(mask & between) % 2 == 0) ? 1 : -1;
}

}  // namespace

ManyBodyState::ManyBodyState(FiniteRing ring, const PeriodicPattern& pattern, double t)
    : ring_(ring) {
  if (ring.sites < 2 || ring.sites % 2 != 0) {
    throw ValidationError("ring: size must be an even integer >= 2, got " + std::to_string(ring.sites));
  }
  if (ring.sites > kMaxRingSites) {
    throw ValidationError("ring: " + std::to_string(ring.sites) + " sites exceeds the limit of " +
                          std::to_string(kMaxRingSites));
  }
  if (ring.sites % pattern.period() != 0) {
    throw ValidationError("ring: pattern period " + std::to_string(pattern.period()) +
                          " does not divide ring size " + std::to_string(ring.sites));
  }
  if (!std::isfinite(t)) throw ValidationError("ring: time must be finite");

  const int n_sites = ring.sites;
  const int half = ring.half();

  std::uint32_t initial = 0;
  for (long m = -half; m < half; ++m) {
    if (pattern.occupied(m)) initial |= 1u << bit_of(m);
  }
  particles_ = std::popcount(initial);

  index_of_.assign(std::size_t{1} << n_sites, -1);
  for (std::uint32_t mask = 0; mask < (1u << n_sites); ++mask) {
    if (std::popcount(mask) == particles_) {
      index_of_[mask] = static_cast<int>(basis_.size());
      basis_.push_back(mask);
    }
  }

  const auto dim = static_cast<Eigen::Index>(basis_.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  // H = -sum_m (a^dag_{m+1} a_m + h.c.), bond (m, m+1) with site L == -L.
  for (int b = 0; b < n_sites; ++b) {
    const int c = (b + 1) % n_sites;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const std::uint32_t mask = basis_[static_cast<std::size_t>(k)];
      for (auto [to, from] : {std::pair{c, b}, std::pair{b, c}}) {
        if (!(mask >> from & 1u) || (mask >> to & 1u)) continue;
        const std::uint32_t out = mask ^ (1u << from) ^ (1u << to);
        h(index_of_[out], k) -= hop_sign(mask, to, from);
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
  if (eig.info() != Eigen::Success) throw InstabilityError("ring: eigendecomposition failed");

  const Eigen::VectorXd overlap = eig.eigenvectors().row(index_of_[initial]).transpose();
  Eigen::VectorXcd phased(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    phased(k) = std::polar(overlap(k), -eig.eigenvalues()(k) * t);
  }
  state_ = eig.eigenvectors().cast<std::complex<double>>() * phased;
}

int ManyBodyState::bit_of(long site) const {
  const long n = ring_.sites;
  long shifted = (site + ring_.half()) % n;
  if (shifted < 0) shifted += n;
  return static_cast<int>(shifted);
}

Eigen::VectorXcd ManyBodyState::apply_hop(int i, int j, const Eigen::VectorXcd& v) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (v(k) == std::complex<double>{}) continue;
    const std::uint32_t mask = basis_[static_cast<std::size_t>(k)];
    if (!(mask >> j & 1u)) continue;
    if (i == j) {
      out(k) += v(k);
      continue;
    }
    if (mask >> i & 1u) continue;
    const std::uint32_t to = mask ^ (1u << j) ^ (1u << i);
    out(index_of_[to]) += static_cast<double>(hop_sign(mask, i, j)) * v(k);
  }
  return out;
}

std::complex<double> ManyBodyState::expectation(std::span<const std::pair<long, long>> hops) const {
  Eigen::VectorXcd v = state_;
  for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
    v = apply_hop(bit_of(it->first), bit_of(it->second), v);
  }
  return state_.dot(v);
}

std::complex<double> ManyBodyState::two_point(long a, long b) const {
  const std::pair<long, long> hops[] = {{a, b}};
  return expectation(hops);
}

std::complex<double> ManyBodyState::four_point(long a, long b, long c, long d) const {
  const std::pair<long, long> hops[] = {{a, b}, {c, d}};
  return expectation(hops);
}

double ManyBodyState::total_number() const {
  double n = 0.0;
  for (long m = -ring_.half(); m < ring_.half(); ++m) n += two_point(m, m).real();
  return n;
}

std::vector<std::complex<double>> manybody_oracle(FiniteRing ring, const PeriodicPattern& pattern, double t,
                                                  std::span<const CorrelatorQuery> points) {
  const ManyBodyState state(ring, pattern, t);
  std::vector<std::complex<double>> out;
  out.reserve(points.size());
  for (const auto& q : points) {
    out.push_back(std::visit(
        [&](const auto& p) -> std::complex<double> {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, TwoPoint>) {
            return state.two_point(p.a, p.b);
          } else {
            return state.four_point(p.a, p.b, p.c, p.d);
          }
        },
        q));
  }
  return out;
}

}  // namespace ffront::lattice
