#include <gtest/gtest.h>

#include "wiretap/bounds.hpp"
#include "wiretap/scheme.hpp"

using namespace wiretap;

TEST(UpperBounds, TightAlignedInstance) {
  const auto b = upper_bounds(ChannelParams(10, 8, 10));
  EXPECT_EQ(b.ub1, Rational(6));
  EXPECT_EQ(b.ub2, Rational(10));
  EXPECT_EQ(b.ub3, Rational(8));
  EXPECT_EQ(b.min_ub, Rational(6));
}

TEST(UpperBounds, HelperInvisibleAtReceiver) {
  // n21 = 0: the helper jams the eavesdropper without touching Y1, so no bound bites below n11.
  // ub3 = 0 + 0 + [10 - 0 - (10 - 10 + 0)^+]^+ = 10
  const auto b = upper_bounds(ChannelParams(10, 0, 10));
  EXPECT_EQ(b.ub1, Rational(10));
  EXPECT_EQ(b.ub3, Rational(10));
  EXPECT_EQ(b.min_ub, Rational(10));
}

TEST(UpperBounds, EavesdropperOnlyTermOfUb3) {
  // ub3 = 2 + 0 + [6 - 2 - (6 - 5 + 2)^+]^+ = 2 + 1 = 3
  EXPECT_EQ(upper_bounds(ChannelParams(5, 2, 6)).ub3, Rational(3));
}

TEST(UpperBounds, HalfIntegersStayExact) {
  // ub1 = 0 + (9 - 0)/2 + (9 - 8)/2 = 5
  EXPECT_EQ(upper_bounds(ChannelParams(9, 8, 9)).ub1, Rational(5));
  // ub1 = 0 + 9/2 + 0 = 9/2
  EXPECT_EQ(upper_bounds(ChannelParams(9, 9, 9)).ub1, Rational(9, 2));
}

TEST(UpperBounds, InvariantsOverGrid) {
  for (int n11 = 0; n11 <= 30; ++n11)
    for (int n21 = 0; n21 <= 30; ++n21)
      for (int n2 = 0; n2 <= 30; ++n2) {
        const ChannelParams p(n11, n21, n2);
        const auto b = upper_bounds(p);
        EXPECT_EQ(b.ub2, Rational(n11));
        EXPECT_GE(b.ub1, 0);
        EXPECT_GE(b.ub3, 0);
        EXPECT_EQ(b.min_ub, std::min({b.ub1, b.ub2, b.ub3}));
        EXPECT_EQ((b.ub1 * 2).denominator(), 1);
        // the middle term of ub1 only sees max{n11, n21}
        const int rp = std::max(0, n11 - n2);
        const Rational middle(std::max(n21, n11) - rp, 2);
        EXPECT_EQ(b.ub1, Rational(rp) + middle + Rational(std::max(0, n2 - n21), 2));
      }
}

TEST(UpperBounds, AchievabilityNeverExceedsConverse) {
  long violations = 0;
  for (int n11 = 0; n11 <= 30; ++n11)
    for (int n21 = 0; n21 <= 30; ++n21)
      for (int n2 = 0; n2 <= 30; ++n2) {
        const ChannelParams p(n11, n21, n2);
        violations += Rational(r_achievable(p).r_ach) > upper_bounds(p).min_ub;
      }
  EXPECT_EQ(violations, 0);
}

TEST(GaussianUpperBounds, ZeroConstantIsDeterministic) {
  const ChannelParams p(13, 9, 11);
  const auto g = gaussian_upper_bounds(p, Rational(0));
  const auto d = upper_bounds(p);
  EXPECT_EQ(g.ub1, d.ub1);
  EXPECT_EQ(g.ub2, d.ub2);
  EXPECT_EQ(g.ub3, d.ub3);
  EXPECT_EQ(g.min_ub, d.min_ub);
}

TEST(GaussianUpperBounds, AddsConstant) {
  EXPECT_EQ(gaussian_upper_bounds(ChannelParams(10, 8, 10), Rational(42)).min_ub, Rational(48));
  EXPECT_EQ(gaussian_upper_bounds(ChannelParams(4, 8, 4), Rational(1, 2)).ub2, Rational(9, 2));
  EXPECT_THROW(gaussian_upper_bounds(ChannelParams(4, 8, 4), Rational(-1)), parameter_error);
}

TEST(RationalText, ParseAndFormat) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.05"), Rational(1, 20));
  EXPECT_EQ(parse_rational("-0.75"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1e2"), Rational(100));
  EXPECT_EQ(parse_rational(".5"), Rational(1, 2));
  for (const char *bad : {"", "abc", "1/0", "1/", "1.2.3", "--1", "1e", "0x10"})
    EXPECT_THROW(parse_rational(bad), parameter_error) << bad;

  EXPECT_EQ(to_exact_string(Rational(9, 2)), "9/2");
  EXPECT_EQ(to_exact_string(Rational(6)), "6");
  EXPECT_EQ(to_fixed_string(Rational(9, 2)), "4.500000");
}
