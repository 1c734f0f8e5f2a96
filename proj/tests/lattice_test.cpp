#include <gtest/gtest.h>

#include <cmath>

#include "ffront/errors.hpp"
#include "ffront/lattice.hpp"
#include "oracles.hpp"

namespace {

using namespace ffront;
using namespace ffront::lattice;

const char* const kPatterns[] = {"10", "01", "1", "1100", "111000", "110100", "100", "10110"};

// i^{n-m} sum_p S_p J_{m-p}(2t) J_{n-p}(2t) with Boost Bessel functions and a
// generous p window.
Complex product_sum_oracle(const PeriodicPattern& pattern, long m, long n, double t) {
  double sum = 0.0;
  const long w = static_cast<long>(2.0 * t) + 60;
  for (long p = std::min(m, n) - w; p <= std::max(m, n) + w; ++p) {
    if (pattern.occupied(p)) sum += oracle::bessel_j(m - p, 2.0 * t) * oracle::bessel_j(n - p, 2.0 * t);
  }
  return ipow(n - m) * sum;
}

TEST(Ipow, CyclesExactly) {
  EXPECT_EQ(ipow(0), Complex(1, 0));
  EXPECT_EQ(ipow(1), Complex(0, 1));
  EXPECT_EQ(ipow(2), Complex(-1, 0));
  EXPECT_EQ(ipow(-1), Complex(0, -1));
  EXPECT_EQ(ipow(4000001), Complex(0, 1));
}

TEST(Correlator, InitialAlternatingState) {
  const auto alt = PeriodicPattern::alternating();
  EXPECT_EQ(correlator(alt, 2, 2, 0.0), Complex(1.0, 0.0));
  EXPECT_EQ(correlator(alt, 1, 1, 0.0), Complex(0.0, 0.0));
  EXPECT_EQ(correlator(alt, 2, 4, 0.0), Complex(0.0, 0.0));
  for (long m = -5; m <= 5; ++m) {
    for (long n = -5; n <= 5; ++n) {
      const double expected = (m == n) ? (1.0 + (n % 2 == 0 ? 1.0 : -1.0)) / 2.0 : 0.0;
      EXPECT_NEAR(std::abs(correlator(alt, m, n, 0.0) - expected), 0.0, 1e-15);
    }
  }
}

TEST(Correlator, InitialGeneralPatternIsDiagonalOccupation) {
  for (const char* bits : kPatterns) {
    const auto p = PeriodicPattern::parse(bits);
    CorrelatorEngine engine(p, 0.0);
    for (long m = -7; m <= 7; ++m) {
      for (long n = -7; n <= 7; ++n) {
        const double expected = (m == n && p.occupied(m)) ? 1.0 : 0.0;
        EXPECT_NEAR(std::abs(engine(m, n) - expected), 0.0, 1e-15) << bits;
      }
    }
  }
}

TEST(Correlator, ClosedFormMatchesProductSum) {
  for (double t : {0.4, 5.0, 37.5}) {
    CorrelatorEngine engine(PeriodicPattern::alternating(), t);
    for (long m = -9; m <= 9; m += 2) {
      for (long n = -12; n <= 12; n += 3) {
        EXPECT_LT(std::abs(engine.closed_form(m, n) - engine.product_sum(m, n)), 1e-10) << m << "," << n;
      }
    }
  }
}

TEST(Correlator, ClosedFormMatchesBoost) {
  const double t = 12.25;
  CorrelatorEngine engine(PeriodicPattern::alternating(), t);
  for (long m = -30; m <= 30; m += 7) {
    for (long n = -30; n <= 30; n += 5) {
      const Complex expected = Complex(m == n ? 0.5 : 0.0, 0.0) + 0.5 * ipow(n + m) * oracle::bessel_j(n - m, 4 * t);
      EXPECT_LT(std::abs(engine.closed_form(m, n) - expected), 1e-12);
    }
  }
}

TEST(Correlator, GeneralPatternMatchesBoostProductSum) {
  for (const char* bits : {"110100", "111000", "100"}) {
    const auto p = PeriodicPattern::parse(bits);
    for (double t : {1.3, 9.0}) {
      CorrelatorEngine engine(p, t);
      for (long m = -11; m <= 11; m += 4) {
        for (long n = -10; n <= 10; n += 5) {
          EXPECT_LT(std::abs(engine(m, n) - product_sum_oracle(p, m, n, t)), 1e-12) << bits;
        }
      }
    }
  }
}

TEST(Correlator, ParticleConservationOverPeriods) {
  for (const char* bits : kPatterns) {
    const auto p = PeriodicPattern::parse(bits);
    for (double t : {0.7, 6.0, 40.0}) {
      CorrelatorEngine engine(p, t);
      for (long start : {-13L, 0L, 21L}) {
        for (int cells : {1, 3}) {
          double sum = 0.0;
          const long len = static_cast<long>(cells) * p.period();
          for (long m = start; m < start + len; ++m) sum += engine(m, m).real();
          EXPECT_NEAR(sum, p.filling() * static_cast<double>(len), 1e-8) << bits << " t=" << t;
        }
      }
    }
  }
}

TEST(Correlator, HermitianBoundedAndRealDensity) {
  for (const char* bits : kPatterns) {
    const auto p = PeriodicPattern::parse(bits);
    for (double t : {0.5, 3.0, 20.0}) {
      CorrelatorEngine engine(p, t);
      for (long m = -8; m <= 8; ++m) {
        const Complex nm = engine(m, m);
        EXPECT_LT(std::abs(nm.imag()), 1e-14);
        EXPECT_GE(nm.real(), -1e-14);
        EXPECT_LE(nm.real(), 1.0 + 1e-14);
        for (long n = -8; n <= 8; ++n) {
          const Complex c = engine(m, n);
          EXPECT_LT(std::abs(c - std::conj(engine(n, m))), 1e-14);
          EXPECT_LE(std::abs(c), 1.0 + 1e-14);
        }
      }
    }
  }
}

TEST(Correlator, TranslationCovarianceInModulus) {
  for (const char* bits : kPatterns) {
    const auto p = PeriodicPattern::parse(bits);
    CorrelatorEngine engine(p, 4.5);
    for (long m = -6; m <= 6; m += 3) {
      for (long n = -6; n <= 6; n += 2) {
        EXPECT_NEAR(std::abs(engine(m + p.period(), n + p.period())), std::abs(engine(m, n)), 1e-13) << bits;
      }
    }
  }
}

TEST(Correlator, ProjectorSumRule) {
  // Product states of filled orbitals give idempotent C: sum_m |C_mn|^2 = C_nn.
  for (const char* bits : {"10", "110100"}) {
    const auto p = PeriodicPattern::parse(bits);
    const double t = 6.0;
    CorrelatorEngine engine(p, t);
    for (long n : {-3L, 0L, 2L, 7L}) {
      double sum = 0.0;
      for (long m = n - 80; m <= n + 80; ++m) sum += std::norm(engine(m, n));
      EXPECT_NEAR(sum, engine(n, n).real(), 1e-8) << bits;
    }
  }
}

TEST(Correlator, RejectsBadInput) {
  const auto alt = PeriodicPattern::alternating();
  EXPECT_THROW((void)correlator(alt, 0, 0, -0.1), ValidationError);
  EXPECT_THROW((void)correlator(alt, 0, 0, std::nan("")), ValidationError);
  EXPECT_THROW((void)correlator(alt, kMaxSiteIndex + 1, 0, 1.0), ValidationError);
  EXPECT_THROW((void)correlator(alt, 0, -kMaxSiteIndex - 1, 1.0), ValidationError);
  CorrelatorEngine engine(PeriodicPattern::parse("1100"), 1.0);
  EXPECT_THROW((void)engine.closed_form(1, 2), ValidationError);
}

TEST(Correlator, LargeIndicesWithinRange) {
  const auto alt = PeriodicPattern::alternating();
  const Complex c = correlator(alt, kMaxSiteIndex, kMaxSiteIndex, 3.0);
  EXPECT_NEAR(c.real(), 0.5 + 0.5 * oracle::bessel_j(0, 12.0), 1e-12);
}

TEST(FrontProfile, EvanescentSideIsSmall) {
  for (double t : {100.0, 1000.0}) EXPECT_LT(std::abs(front_profile(t, 10.0).lattice), 1e-2);
}

TEST(FrontProfile, ApproachesAiryWithTime) {
  const auto sup_error = [](double t) {
    double worst = 0.0;
    for (double x = -8.0; x <= 6.0 + 1e-9; x += 0.05) {
      const auto f = front_profile(t, x);
      worst = std::max(worst, std::abs(f.lattice - f.airy));
    }
    return worst;
  };
  const double e10 = sup_error(10.0);
  const double e100 = sup_error(100.0);
  const double e1000 = sup_error(1000.0);
  EXPECT_LT(e1000, e100);
  EXPECT_LT(e100, e10);
}

TEST(FrontProfile, LatticeValueIsScaledAntiDiagonal) {
  const double t = 50.0;
  const auto f = front_profile(t, -1.5);
  EXPECT_EQ(f.m, static_cast<long>(std::floor(2 * t - 0.75 * std::cbrt(2 * t))));
  EXPECT_NEAR(f.lattice, 2.0 * std::cbrt(2 * t) * 0.5 * oracle::bessel_j(2 * f.m, 4 * t), 1e-12);
  EXPECT_NEAR(f.airy, oracle::ai(-1.5), 1e-12);
}

TEST(FrontProfile, PeakNearTwoT) {
  for (double t : {20.0, 200.0}) {
    CorrelatorEngine engine(PeriodicPattern::alternating(), t);
    long peak = 0;
    double best = -1.0;
    for (long m = 1; m <= static_cast<long>(3 * t); ++m) {
      const double v = std::abs(engine(m, -m));
      if (v > best) {
        best = v;
        peak = m;
      }
    }
    EXPECT_LE(std::abs(static_cast<double>(peak) - 2 * t), 2 * std::cbrt(2 * t)) << t;
  }
}

TEST(FrontProfile, RejectsEarlyTimes) { EXPECT_THROW((void)front_profile(1.5, 0.0), ValidationError); }

TEST(KernelMatrix, ZeroAtTimeZero) {
  for (const char* bits : {"10", "110100"}) {
    const auto k = kernel_matrix(PeriodicPattern::parse(bits), 0.0, 1, 12);
    EXPECT_EQ(k.entries.cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(KernelMatrix, AlternatingEntriesAndSymmetricModulus) {
  const double t = 8.0;
  const long l = 5;
  const auto k = kernel_matrix(PeriodicPattern::alternating(), t, l, 30);
  for (int i = 0; i < 30; ++i) {
    for (int j = 0; j < 30; ++j) {
      const long m = l + i, n = -(l + j);
      const Complex expected = 0.5 * ipow(n + m) * oracle::bessel_j(n - m, 4 * t);
      EXPECT_LT(std::abs(k.entries(i, j) - expected), 1e-13);
      EXPECT_NEAR(std::abs(k.entries(i, j)), std::abs(k.entries(j, i)), 1e-15);
    }
  }
}

TEST(KernelMatrix, EntriesAreAntiDiagonalCorrelators) {
  const auto p = PeriodicPattern::parse("110100");
  const auto k = kernel_matrix(p, 3.0, 2, 10);
  CorrelatorEngine engine(p, 3.0);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) EXPECT_LT(std::abs(k.entries(i, j) - engine(2 + i, -(2 + j))), 1e-15);
  }
}

TEST(KernelMatrix, DefaultDimensionAndTail) {
  EXPECT_EQ(default_kernel_dim(100.0, 190), static_cast<int>(std::ceil(400 + 12 * std::cbrt(200.0) + 40)) - 380);
  EXPECT_EQ(default_kernel_dim(2.0, 1000), 8);
  const double t = 60.0;
  const long l = 100;
  const int dim = default_kernel_dim(t, l) + 60;
  const auto k = kernel_matrix(PeriodicPattern::alternating(), t, l, dim);
  const double edge = 4 * t + 12 * std::cbrt(2 * t) + 40;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (static_cast<double>(2 * l + i + j) > edge) EXPECT_LT(std::abs(k.entries(i, j)), 1e-12);
    }
  }
}

TEST(KernelMatrix, TruncationStable) {
  for (const char* bits : {"10", "111000"}) {
    const auto p = PeriodicPattern::parse(bits);
    const double t = 40.0;
    const long l = 75;
    const auto a = kernel_matrix(p, t, l);
    const auto b = kernel_matrix(p, t, l, a.dim + 50);
    EXPECT_LT(std::abs(b.entries.norm() - a.entries.norm()), 1e-10) << bits;
  }
}

TEST(KernelMatrix, Deterministic) {
  const auto p = PeriodicPattern::parse("110100");
  const auto a = kernel_matrix(p, 25.0, 40);
  const auto b = kernel_matrix(p, 25.0, 40);
  EXPECT_TRUE(a.entries == b.entries);
}

TEST(KernelMatrix, RejectsBadInput) {
  const auto alt = PeriodicPattern::alternating();
  EXPECT_THROW((void)kernel_matrix(alt, 1.0, 0), ValidationError);
  EXPECT_THROW((void)kernel_matrix(alt, 1.0, 1, 0), ValidationError);
  EXPECT_THROW((void)kernel_matrix(alt, 1.0, 1, kMaxKernelDim + 1), ValidationError);
  EXPECT_THROW((void)kernel_matrix(alt, -1.0, 1), ValidationError);
  // The default truncation at very long times exceeds the cap.
  EXPECT_THROW((void)kernel_matrix(alt, 5000.0, 1), ValidationError);
}

}  // namespace
