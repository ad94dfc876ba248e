#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wiretap/ldm.hpp"

using namespace wiretap;

namespace {

BitVector bits(const char *s) { return BitVector::from_string(s); }

BitVector random_vector(int n, std::mt19937_64 &rng) {
  BitVector v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v.set_level(static_cast<std::size_t>(i), rng() & 1U);
  return v;
}

Gf2Matrix random_matrix(int r, int c, std::mt19937_64 &rng) {
  Gf2Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, rng() & 1U);
  return m;
}

// |row space| = 2^rank, counted by enumerating every subset of rows.
int rank_by_enumeration(const Gf2Matrix &m) {
  std::set<std::vector<bool>> span;
  for (unsigned mask = 0; mask < (1U << m.rows()); ++mask) {
    std::vector<bool> v(static_cast<std::size_t>(m.cols()), false);
    for (int r = 0; r < m.rows(); ++r)
      if (mask >> r & 1U)
        for (int c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = v[static_cast<std::size_t>(c)] ^ m.get(r, c);
    span.insert(v);
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < span.size()) ++rank;
  return rank;
}

} // namespace

TEST(DownShift, FullGainIsIdentity) { EXPECT_EQ(down_shift(bits("101"), 3, 3), bits("101")); }

TEST(DownShift, GainOneOfThreeShiftsTwo) { EXPECT_EQ(down_shift(bits("110"), 1, 3), bits("001")); }

TEST(DownShift, ZeroGainTruncatesEverything) { EXPECT_EQ(down_shift(bits("111"), 0, 3), bits("000")); }

TEST(DownShift, MatchesShiftMatrixProduct) {
  std::mt19937_64 rng(11);
  for (int q = 1; q <= 12; ++q)
    for (int n = 0; n <= q; ++n) {
      const auto x = random_vector(q, rng);
      EXPECT_EQ(down_shift(x, n, q), Gf2Matrix::shift(q - n, q) * x);
    }
}

TEST(DownShift, RejectsBadArguments) {
  EXPECT_THROW(down_shift(bits("101"), 4, 3), parameter_error);
  EXPECT_THROW(down_shift(bits("101"), -1, 3), parameter_error);
  EXPECT_THROW(down_shift(bits("10"), 1, 3), parameter_error);
}

TEST(DownShift, Composition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const int q = 1 + static_cast<int>(rng() % 32);
    const int e1 = static_cast<int>(rng() % (q + 1));
    const int e2 = static_cast<int>(rng() % (q + 1 - e1));
    const auto x = random_vector(q, rng);
    const auto twice = down_shift(down_shift(x, q - e1, q), q - e2, q);
    EXPECT_EQ(twice, down_shift(x, q - (e1 + e2), q));
  }
}

TEST(LdmChannel, ZeroInputs) {
  const ChannelParams p(3, 1, 2);
  const auto out = ldm_channel(BitVector(3), BitVector(3), p);
  EXPECT_TRUE(out.y1.is_zero());
  EXPECT_TRUE(out.y2.is_zero());
}

TEST(LdmChannel, HandEvaluatedY1) {
  const ChannelParams p(3, 1, 3);
  EXPECT_EQ(ldm_channel(bits("101"), bits("110"), p).y1, bits("100"));
}

TEST(LdmChannel, SilentHelperLeavesShiftedUserAtEve) {
  std::mt19937_64 rng(5);
  for (int n11 = 0; n11 <= 8; ++n11)
    for (int n21 = 0; n21 <= 8; ++n21) {
      const ChannelParams p(n11, n21, n11);
      const auto x1 = random_vector(p.q(), rng);
      EXPECT_EQ(ldm_channel(x1, BitVector(static_cast<std::size_t>(p.q())), p).y2, down_shift(x1, n11, p.q()));
    }
}

TEST(LdmChannel, Linearity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const ChannelParams p(static_cast<int>(rng() % 20), static_cast<int>(rng() % 20), static_cast<int>(rng() % 20));
    const int q = p.q();
    const auto a = random_vector(q, rng), b = random_vector(q, rng);
    const auto c = random_vector(q, rng), d = random_vector(q, rng);
    const auto lhs = ldm_channel(a ^ b, c ^ d, p);
    const auto r1 = ldm_channel(a, c, p), r2 = ldm_channel(b, d, p);
    EXPECT_EQ(lhs.y1, r1.y1 ^ r2.y1);
    EXPECT_EQ(lhs.y2, r1.y2 ^ r2.y2);
  }
}

TEST(LdmChannel, EavesdropperGainsAreSymmetric) {
  for (int q = 1; q <= 10; ++q)
    for (int n2 = 1; n2 <= q; ++n2) {
      const ChannelParams p(q, 0, n2);
      BitVector x(static_cast<std::size_t>(q));
      x.set_level(1, true);
      const BitVector zero(static_cast<std::size_t>(q));
      const auto from_user = ldm_channel(x, zero, p).y2;
      const auto from_helper = ldm_channel(zero, x, p).y2;
      EXPECT_EQ(from_user.top_level(), from_helper.top_level());
      EXPECT_EQ(from_user, from_helper);
    }
}

TEST(LdmChannel, LengthMismatch) {
  EXPECT_THROW(ldm_channel(bits("10"), bits("101"), ChannelParams(3, 1, 2)), parameter_error);
}

TEST(LdmChannel, DegenerateEmptyInstance) {
  const auto out = ldm_channel(BitVector(), BitVector(), ChannelParams(0, 0, 0));
  EXPECT_TRUE(out.y1.empty());
  EXPECT_TRUE(out.y2.empty());
}

TEST(ChannelParams, DerivedQuantities) {
  const ChannelParams p(10, 8, 12);
  EXPECT_EQ(p.q(), 12);
  EXPECT_EQ(p.delta(), 2);
  EXPECT_EQ(p.n12(), 12);
  EXPECT_EQ(p.n22(), 12);
  EXPECT_EQ(ChannelParams(3, 7, 0).delta(), 4);
  EXPECT_THROW(ChannelParams(-1, 0, 0), parameter_error);
}

TEST(Gf2Rank, SmallExamples) {
  EXPECT_EQ(gf2_rank(Gf2Matrix::identity(3)), 3);
  EXPECT_EQ(gf2_rank(Gf2Matrix(4, 5)), 0);
  Gf2Matrix ones(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) ones.set(r, c, true);
  EXPECT_EQ(gf2_rank(ones), 1);
  EXPECT_EQ(gf2_rank(Gf2Matrix()), 0);
}

TEST(Gf2Rank, AgreesWithRowSpaceEnumeration) {
  std::mt19937_64 rng(13);
  for (int r = 0; r <= 6; ++r)
    for (int c = 0; c <= 6; ++c)
      for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_matrix(r, c, rng);
        EXPECT_EQ(gf2_rank(m), rank_by_enumeration(m)) << r << "x" << c;
      }
}

TEST(Gf2Rank, PackedColumnsAgreeWithDense) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 64), c = static_cast<int>(rng() % 40);
    const auto m = random_matrix(r, c, rng);
    std::vector<std::uint64_t> cols;
    for (int j = 0; j < c; ++j) cols.push_back(m.column_mask(j));
    EXPECT_EQ(gf2_rank(cols), gf2_rank(m));
  }
}

TEST(Gf2Rank, WideMatricesSpanSeveralWords) {
  std::mt19937_64 rng(19);
  const auto m = random_matrix(5, 150, rng);
  EXPECT_EQ(gf2_rank(m), rank_by_enumeration(m));
  const auto tall = random_matrix(130, 3, rng);
  EXPECT_LE(gf2_rank(tall), 3);
}

TEST(Gf2Solve, RecoversConsistentSystems) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 12), c = 1 + static_cast<int>(rng() % 12);
    const auto m = random_matrix(r, c, rng);
    const auto x = random_vector(c, rng);
    const auto y = m * x;
    const auto sol = solve(m, y);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, y);
  }
  Gf2Matrix z(2, 1);
  EXPECT_FALSE(solve(z, bits("10")).has_value());
}

TEST(BitVector, StringRoundTripAndErrors) {
  EXPECT_EQ(bits("0110").to_string(), "0110");
  EXPECT_THROW(BitVector::from_string("012"), parameter_error);
  EXPECT_EQ(bits("0010").top_level(), 3u);
  EXPECT_FALSE(bits("000").top_level().has_value());
}
