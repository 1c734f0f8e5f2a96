#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ffront {

/// One unit cell S_0..S_{p-1} of a periodic product state. Site m of the
/// infinite lattice is occupied iff S_{m mod p} = 1 (non-negative modulus).
class PeriodicPattern {
 public:
  /// Throws ValidationError for an empty or all-zero cell.
  explicit PeriodicPattern(std::vector<std::uint8_t> cell);

  /// Parses a bit string such as "110100".
  static PeriodicPattern parse(std::string_view bits);

  /// Fermions on the even sites: cell [1, 0].
  static PeriodicPattern alternating() { return PeriodicPattern({1, 0}); }

  [[nodiscard]] int period() const { return static_cast<int>(cell_.size()); }
  [[nodiscard]] int occupied_count() const;
  [[nodiscard]] double filling() const { return static_cast<double>(occupied_count()) / period(); }
  [[nodiscard]] const std::vector<std::uint8_t>& cell() const { return cell_; }
  [[nodiscard]] bool occupied(long site) const;

  /// Smallest period of the underlying infinite sequence.
  [[nodiscard]] int minimal_period() const;
  /// Same infinite sequence as the alternating state.
  [[nodiscard]] bool is_alternating() const;

  /// Cell rotated left by k sites (the lattice shifted by -k).
  [[nodiscard]] PeriodicPattern rotated(int k) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const PeriodicPattern&, const PeriodicPattern&) = default;

 private:
  std::vector<std::uint8_t> cell_;
};

}  // namespace ffront
