#include "chardeg/alt_bounds.hpp"

#include <gtest/gtest.h>

using namespace chardeg;

namespace {

// Brute-force maxima over all partitions, recomputed here.
struct Maxima {
  BigNat sym = 0, alt = 0, d = 0;
};

Maxima brute_maxima(int n) {
  Maxima m;
  for (const auto &p : enumerate_partitions(n)) {
    const BigNat f = degree(p);
    const bool sc = conjugate(p) == p;
    m.sym = std::max(m.sym, f);
    m.alt = std::max(m.alt, sc ? BigNat(f / 2) : f);
    if (!sc) m.d = std::max(m.d, f);
  }
  return m;
}

} // namespace

TEST(AltBounds, SmallValues) {
  EXPECT_EQ(b_sym(5).value, 6);
  EXPECT_EQ(b_alt(5).value, 5);
  EXPECT_EQ(d_alt(5).value, 5);
  EXPECT_EQ(b_sym(6).value, 16);
  EXPECT_EQ(d_alt(6).value, 10);  // (4,1,1); the S_6-extendible value
  EXPECT_EQ(b_alt(6).value, 10);  // (3,2,1) has f = 16, splitting as 8+8
  EXPECT_EQ(b_sym(7).value, 35);
}

TEST(AltBounds, MaximaMatchBruteForce) {
  for (int n = 5; n <= 22; ++n) {
    const auto m = brute_maxima(n);
    const auto rep = verify_cube_bound(n);
    ASSERT_EQ(rep.b_sym.value, m.sym) << n;
    ASSERT_EQ(rep.b_alt.value, m.alt) << n;
    ASSERT_EQ(rep.d_alt.value, m.d) << n;
    ASSERT_EQ(degree(rep.d_alt.witness), m.d);
    ASSERT_FALSE(is_self_conjugate(rep.d_alt.witness));
    ASSERT_EQ(b_sym(n).value, m.sym);
    ASSERT_EQ(d_alt(n).value, m.d);
  }
}

TEST(AltBounds, OrderingOfStatistics) {
  for (int n = 5; n <= 30; ++n) {
    const auto rep = verify_cube_bound(n);
    ASSERT_LE(rep.d_alt.value, rep.b_alt.value);
    ASSERT_LE(rep.b_alt.value, rep.b_sym.value);
    ASSERT_EQ(rep.alt_order, factorial(n) / 2);
  }
}

TEST(AltBounds, CubeBoundThroughSixty) {
  for (int n = 5; n <= 60; ++n) {
    const auto rep = verify_cube_bound(n);
    ASSERT_TRUE(rep.cube_check) << n;
    ASSERT_EQ(rep.d_alt_cubed, ipow(rep.d_alt.value, 3));
    ASSERT_EQ(rep.aut_incomplete, n == 6);
  }
  EXPECT_THROW(verify_cube_bound(4), InputError);
}

TEST(AltBounds, InductionStepAtThirty) {
  const auto r = verify_induction_step(30);
  EXPECT_EQ(r.ceil_sqrt_2n, 8);
  EXPECT_EQ(r.ceil_sqrt_2n2, 8);
  EXPECT_EQ(r.case1.verdict, Verdict::Holds);   // 31/8 = 3.875 > 31^(1/3)
  EXPECT_EQ(r.case2a.lhs, "24/7");
  EXPECT_EQ(r.case2a.verdict, Verdict::Holds);
  EXPECT_EQ(r.case2b.verdict, Verdict::Holds);  // (25 - 7 * 30^(-1/3))/7 ~ 3.2496 > 3.1414
  EXPECT_TRUE(r.all_hold());
  EXPECT_THROW(verify_induction_step(29), InputError);
}

TEST(AltBounds, InductionStepCaseTwoBFailsAtThirtyThree) {
  // c = c' = 9: (36 - 9 - 8 * 33^(-1/3))/8 ~ 3.063 < 34^(1/3) ~ 3.240.
  const auto r = verify_induction_step(33);
  EXPECT_EQ(r.case1.verdict, Verdict::Holds);
  EXPECT_EQ(r.case2a.verdict, Verdict::Holds);
  EXPECT_EQ(r.case2b.verdict, Verdict::Fails);
}

TEST(AltBounds, InductionCasesDecideEverywhere) {
  // Every case is decided; case (1) and (2a) hold on the whole range, and
  // case (2b) agrees with a floating-point evaluation well away from ties.
  for (int n = 30; n <= 1000; ++n) {
    const auto r = verify_induction_step(n);
    ASSERT_EQ(r.case1.verdict, Verdict::Holds) << n;
    ASSERT_EQ(r.case2a.verdict, Verdict::Holds) << n;
    ASSERT_NE(r.case2b.verdict, Verdict::Undecided) << n;
    const double c = static_cast<double>(r.ceil_sqrt_2n), c2 = static_cast<double>(r.ceil_sqrt_2n2);
    const double lhs = (n + 3 - c2 - (c - 1) * std::cbrt(1.0 / n)) / (c - 1);
    const double rhs = std::cbrt(n + 1.0);
    if (std::abs(lhs - rhs) > 1e-6) { ASSERT_EQ(r.case2b.verdict == Verdict::Holds, lhs > rhs) << n; }
  }
}

TEST(AltBounds, RectangleScan) {
  const auto s = rectangle_scan(16, ExactRational(1, 4));
  EXPECT_EQ(s.best, Partition({4, 4, 4, 4}));
  EXPECT_EQ(s.best_degree, 24024);
  EXPECT_EQ(s.rectangles.size(), 5u);  // 1x16, 2x8, 4x4, 8x2, 16x1
  // 24024^4 > 16! since 24024^4 ~ 3.3e17 > 2.1e13.
  EXPECT_TRUE(s.exceeds);
  const auto prime = rectangle_scan(29, ExactRational(1, 4));
  EXPECT_EQ(prime.best_degree, 1);
  EXPECT_FALSE(prime.exceeds);
  EXPECT_THROW(rectangle_scan(10, ExactRational(1, 2)), InputError);
  EXPECT_THROW(rectangle_scan(10, ExactRational(0)), InputError);
}

TEST(AltBounds, RectangleScanMatchesDirectComparison) {
  for (int n = 4; n <= 36; ++n) {
    const auto s = rectangle_scan(n, ExactRational(1, 4));
    BigNat best = 0;
    for (int a = 1; a <= n; ++a)
      if (n % a == 0) best = std::max(best, degree(Partition(std::vector<int>(a, n / a))));
    ASSERT_EQ(s.best_degree, best);
    ASSERT_EQ(s.exceeds, ipow(best, 4) > factorial(n)) << n;
  }
}
