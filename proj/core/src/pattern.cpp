#include "ffront/pattern.hpp"

#include <algorithm>
#include <numeric>

#include "ffront/errors.hpp"

namespace ffront {

PeriodicPattern::PeriodicPattern(std::vector<std::uint8_t> cell) : cell_(std::move(cell)) {
  if (cell_.empty()) throw ValidationError("pattern: empty unit cell");
  for (auto& bit : cell_) {
    if (bit > 1) throw ValidationError("pattern: occupations must be 0 or 1");
  }
  if (std::none_of(cell_.begin(), cell_.end(), [](auto b) { return b == 1; })) {
    throw ValidationError("pattern: vacuum cell (no occupied site)");
  }
}

PeriodicPattern PeriodicPattern::parse(std::string_view bits) {
  std::vector<std::uint8_t> cell;
  cell.reserve(bits.size());
  for (char c : bits) {
    if (c == '0' || c == '1') {
      cell.push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      throw ValidationError("pattern: invalid character '" + std::string(1, c) + "' in \"" +
                            std::string(bits) + "\"");
    }
  }
  return PeriodicPattern(std::move(cell));
}

int PeriodicPattern::occupied_count() const {
  return std::accumulate(cell_.begin(), cell_.end(), 0);
}

bool PeriodicPattern::occupied(long site) const {
  const long p = period();
  long r = site % p;
  if (r < 0) r += p;
  return cell_[static_cast<std::size_t>(r)] == 1;
}

int PeriodicPattern::minimal_period() const {
  const int p = period();
  for (int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (int i = d; i < p && ok; ++i) ok = cell_[static_cast<std::size_t>(i)] == cell_[static_cast<std::size_t>(i - d)];
    if (ok) return d;
  }
  return p;
}

bool PeriodicPattern::is_alternating() const {
  if (period() % 2 != 0) return false;
  for (int i = 0; i < period(); ++i) {
    if (cell_[static_cast<std::size_t>(i)] != (i % 2 == 0 ? 1 : 0)) return false;
  }
  return true;
}

PeriodicPattern PeriodicPattern::rotated(int k) const {
  const int p = period();
  std::vector<std::uint8_t> out(cell_.size());
  for (int i = 0; i < p; ++i) {
    int src = (i + k) % p;
    if (src < 0) src += p;
    out[static_cast<std::size_t>(i)] = cell_[static_cast<std::size_t>(src)];
  }
  return PeriodicPattern(std::move(out));
}

std::string PeriodicPattern::to_string() const {
  std::string s;
  s.reserve(cell_.size());
  for (auto b : cell_) s.push_back(static_cast<char>('0' + b));
  return s;
}

}  // namespace ffront
