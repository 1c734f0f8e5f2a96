#include "ffront/initcond.hpp"

#include <numeric>
#include <string>

#include "ffront/errors.hpp"

namespace ffront::initcond {

Rational front_coefficient_exact(const PeriodicPattern& pattern) {
  const int p = pattern.period();
  if (p % 2 != 0) return {0, 1};
  long sum = 0;
  for (int j = 0; j < p; ++j) {
    if (pattern.cell()[static_cast<std::size_t>(j)] != 0) sum += (j % 2 == 0) ? 1 : -1;
  }
  if (sum == 0) return {0, 1};
  const long g = std::gcd(sum, static_cast<long>(p));
  return {sum / g, p / g};
}

double front_coefficient(const PeriodicPattern& pattern) { return front_coefficient_exact(pattern).value(); }

bool admits_rmt_front(const PeriodicPattern& pattern) { return front_coefficient_exact(pattern).num != 0; }

Rescale rescale_factors(const PeriodicPattern& pattern) {
  const Rational c = front_coefficient_exact(pattern);
  if (c.num == 0) {
    throw ValidationError("rescale_factors: pattern " + pattern.to_string() +
                          " has zero front coefficient");
  }
  const double a1 = 0.5 * static_cast<double>(c.den) / static_cast<double>(c.num);
  return {a1, a1 * a1};
}

PatternReport classify(const PeriodicPattern& pattern) {
  PatternReport report{pattern, front_coefficient(pattern), admits_rmt_front(pattern), {}};
  if (report.admits_rmt) report.rescale = rescale_factors(pattern);
  return report;
}

std::vector<PatternReport> scan_period(int period) {
  if (period < 1 || period > kMaxScanPeriod) {
    throw ValidationError("scan_period: period must lie in [1, 12], got " + std::to_string(period));
  }
  std::vector<PatternReport> out;
  out.reserve((std::size_t{1} << period) - 1);
  for (unsigned bits = 1; bits < (1u << period); ++bits) {
    std::vector<std::uint8_t> cell(static_cast<std::size_t>(period));
    for (int j = 0; j < period; ++j) cell[static_cast<std::size_t>(j)] = (bits >> j) & 1u;
    out.push_back(classify(PeriodicPattern(std::move(cell))));
  }
  return out;
}

ScanSummary summarize_period(int period) {
  ScanSummary summary{period, 0, 0};
  for (const auto& r : scan_period(period)) {
    ++summary.total;
    if (r.admits_rmt) ++summary.admitting;
  }
  return summary;
}

}  // namespace ffront::initcond
