#include <gtest/gtest.h>

#include "ffront/errors.hpp"
#include "ffront/pattern.hpp"

namespace {

using ffront::PeriodicPattern;
using ffront::ValidationError;

TEST(PeriodicPattern, AlternatingIsOneZero) {
  const auto alt = PeriodicPattern::alternating();
  EXPECT_EQ(alt.cell(), (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(alt.period(), 2);
  EXPECT_DOUBLE_EQ(alt.filling(), 0.5);
  EXPECT_TRUE(alt.is_alternating());
}

TEST(PeriodicPattern, ParseAndPrintRoundTrip) {
  const auto p = PeriodicPattern::parse("110100");
  EXPECT_EQ(p.cell(), (std::vector<std::uint8_t>{1, 1, 0, 1, 0, 0}));
  EXPECT_EQ(p.to_string(), "110100");
  EXPECT_EQ(p.occupied_count(), 3);
  EXPECT_DOUBLE_EQ(p.filling(), 0.5);
  EXPECT_EQ(PeriodicPattern::parse("1100"), PeriodicPattern({1, 1, 0, 0}));
}

TEST(PeriodicPattern, FillingInUnitInterval) {
  for (const char* bits : {"1", "10", "100", "1110", "11111111", "000001"}) {
    const auto p = PeriodicPattern::parse(bits);
    EXPECT_GT(p.filling(), 0.0);
    EXPECT_LE(p.filling(), 1.0);
  }
}

TEST(PeriodicPattern, OccupiedUsesNonNegativeModulus) {
  const auto p = PeriodicPattern::parse("110");
  EXPECT_TRUE(p.occupied(0));
  EXPECT_TRUE(p.occupied(1));
  EXPECT_FALSE(p.occupied(2));
  EXPECT_FALSE(p.occupied(-1));
  EXPECT_TRUE(p.occupied(-2));
  EXPECT_TRUE(p.occupied(-3));
  EXPECT_TRUE(p.occupied(3000001));
}

TEST(PeriodicPattern, MinimalPeriodAndAlternatingEquivalence) {
  EXPECT_EQ(PeriodicPattern::parse("1010").minimal_period(), 2);
  EXPECT_TRUE(PeriodicPattern::parse("101010").is_alternating());
  EXPECT_FALSE(PeriodicPattern::parse("01").is_alternating());
  EXPECT_FALSE(PeriodicPattern::parse("1").is_alternating());
  EXPECT_EQ(PeriodicPattern::parse("110110").minimal_period(), 3);
  EXPECT_EQ(PeriodicPattern::parse("110100").minimal_period(), 6);
}

TEST(PeriodicPattern, RotationShiftsLattice) {
  const auto p = PeriodicPattern::parse("1100");
  const auto r = p.rotated(1);
  EXPECT_EQ(r.to_string(), "1001");
  for (long m = -8; m <= 8; ++m) EXPECT_EQ(r.occupied(m), p.occupied(m + 1));
  EXPECT_EQ(p.rotated(4), p);
  EXPECT_EQ(p.rotated(-1).to_string(), "0110");
}

TEST(PeriodicPattern, RejectsInvalidCells) {
  EXPECT_THROW(PeriodicPattern({}), ValidationError);
  EXPECT_THROW(PeriodicPattern({0, 0, 0}), ValidationError);
  EXPECT_THROW(PeriodicPattern({1, 2}), ValidationError);
  EXPECT_THROW((void)PeriodicPattern::parse(""), ValidationError);
  EXPECT_THROW((void)PeriodicPattern::parse("10a1"), ValidationError);
  EXPECT_THROW((void)PeriodicPattern::parse("1 0"), ValidationError);
  EXPECT_THROW((void)PeriodicPattern::parse("0000"), ValidationError);
}

}  // namespace
