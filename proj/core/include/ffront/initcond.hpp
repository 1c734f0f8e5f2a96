#pragma once

#include <vector>

#include "ffront/pattern.hpp"

namespace ffront::initcond {

/// Reduced fraction with a positive denominator.
struct Rational {
  long num = 0;
  long den = 1;

  [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Amplitude c of the J_{n-m}(4t) front term in the correlator,
/// c = (1/p) sum_j S_j (-1)^j for an even cell length p.
///
/// The value depends only on the infinite sequence, not on the chosen cell:
/// an odd-length cell is evaluated on its doubled (even) cell, where the
/// alternating sum cancels, so every odd-length cell gives c = 0.
[[nodiscard]] Rational front_coefficient_exact(const PeriodicPattern& pattern);
[[nodiscard]] double front_coefficient(const PeriodicPattern& pattern);

/// True iff the front coefficient is nonzero.
[[nodiscard]] bool admits_rmt_front(const PeriodicPattern& pattern);

struct Rescale {
  double a1 = 1.0;
  double a2 = 1.0;
};

/// A1 = (1/2) / c and A2 = A1^2 map the pattern's M_1, M_2 onto the
/// alternating-state curves. Throws ValidationError when c = 0.
[[nodiscard]] Rescale rescale_factors(const PeriodicPattern& pattern);

struct PatternReport {
  PeriodicPattern pattern;
  double coefficient = 0.0;
  bool admits_rmt = false;
  /// Present only when admits_rmt.
  Rescale rescale{};
};

[[nodiscard]] PatternReport classify(const PeriodicPattern& pattern);

inline constexpr int kMaxScanPeriod = 12;

/// Reports for every non-vacuum cell of exactly this length, in increasing
/// bit order (bit j of the index is S_j). Requires 1 <= period <= 12.
[[nodiscard]] std::vector<PatternReport> scan_period(int period);

struct ScanSummary {
  int period = 0;
  long total = 0;
  long admitting = 0;
  [[nodiscard]] long exceptional() const { return total - admitting; }
};

[[nodiscard]] ScanSummary summarize_period(int period);

}  // namespace ffront::initcond
