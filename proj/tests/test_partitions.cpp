#include "chardeg/partitions.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace chardeg;

namespace {

// p(n) via Euler's pentagonal recurrence.
std::vector<long long> euler_partition_counts(int limit) {
  std::vector<long long> p(limit + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= limit; ++n)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  return p;
}

// Number of standard Young tableaux by removing the largest entry: f(lambda) =
// sum over removable corners of f(lambda minus corner). Memoised on parts.
BigNat syt_count(const std::vector<int> &parts, std::map<std::vector<int>, BigNat> &memo) {
  if (parts.empty()) return 1;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  BigNat total = 0;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const int next = r + 1 < parts.size() ? parts[r + 1] : 0;
    if (parts[r] == next) continue;
    std::vector<int> smaller = parts;
    if (--smaller[r] == 0) smaller.pop_back();
    total += syt_count(smaller, memo);
  }
  return memo[parts] = total;
}

} // namespace

TEST(Partitions, RejectsMalformed) {
  EXPECT_THROW(Partition({2, 3}), InputError);
  EXPECT_THROW(Partition({3, 0}), InputError);
  EXPECT_EQ(Partition({3, 1, 1}).to_string(), "(3,1,1)");
  EXPECT_EQ(Partition({3, 1, 1}).size(), 5);
}

TEST(Partitions, CountsMatchEulerRecurrence) {
  const auto expected = euler_partition_counts(40);
  for (int n = 0; n <= 40; ++n) EXPECT_EQ(static_cast<long long>(enumerate_partitions(n).size()), expected[n]) << n;
  EXPECT_EQ(enumerate_partitions(30).size(), 5604u);
}

TEST(Partitions, ReverseLexOrderAndValidity) {
  const auto parts = enumerate_partitions(12);
  EXPECT_EQ(parts.front(), Partition({12}));
  EXPECT_EQ(parts.back(), Partition(std::vector<int>(12, 1)));
  for (std::size_t i = 1; i < parts.size(); ++i) ASSERT_TRUE(reverse_lex_before(parts[i - 1], parts[i]));
  for (const auto &p : parts) ASSERT_EQ(p.size(), 12);
}

TEST(Partitions, ConjugateIsInvolution) {
  for (int n = 1; n <= 16; ++n)
    for (const auto &p : enumerate_partitions(n)) {
      ASSERT_EQ(conjugate(conjugate(p)), p);
      ASSERT_EQ(conjugate(p).size(), n);
    }
  EXPECT_EQ(conjugate(Partition({4, 2, 1})), Partition({3, 2, 1, 1}));
  EXPECT_TRUE(is_self_conjugate(Partition({3, 2, 1})));
}

TEST(Partitions, HookTable) {
  const auto h = hook_table(Partition({3, 1}));
  EXPECT_EQ(h.rows, (std::vector<std::vector<int>>{{4, 2, 1}, {1}}));
  EXPECT_EQ(h.cell_count(), 4);
  EXPECT_EQ(hook_table(Partition({2, 2})).multiset(), (std::vector<int>{1, 2, 2, 3}));
}

TEST(Partitions, DegreesMatchTableauxCount) {
  std::map<std::vector<int>, BigNat> memo;
  EXPECT_EQ(degree(Partition({3, 2})), 5);
  EXPECT_EQ(degree(Partition({4, 2, 1})), 35);
  EXPECT_EQ(degree(Partition({4, 4, 4, 4})), 24024);
  for (int n = 1; n <= 18; ++n)
    for (const auto &p : enumerate_partitions(n)) ASSERT_EQ(degree(p), syt_count(p.parts(), memo)) << p.to_string();
}

TEST(Partitions, SumOfSquaresIsFactorial) {
  for (int n = 1; n <= 25; ++n) {
    BigNat total = 0;
    for_each_partition(n, [&](const Partition &p) { total += degree(p) * degree(p); });
    ASSERT_EQ(total, factorial(n)) << n;
  }
}

TEST(Partitions, ConjugateHasSameDegree) {
  for (int n = 1; n <= 18; ++n)
    for (const auto &p : enumerate_partitions(n)) ASSERT_EQ(degree(p), degree(conjugate(p)));
}

TEST(Partitions, AltDegrees) {
  EXPECT_EQ(alt_degree(Partition({3, 2, 1})), 8);  // f = 16 splits
  EXPECT_EQ(alt_degree(Partition({4, 1})), 4);
  // Sum of squared A_n-degrees is n!/2: self-conjugate lambda contributes two
  // constituents, a conjugate pair {lambda, lambda'} contributes one.
  for (int n = 2; n <= 20; ++n) {
    BigNat total = 0;
    for_each_partition(n, [&](const Partition &p) {
      const BigNat d = alt_degree(p);
      if (is_self_conjugate(p))
        total += 2 * d * d;
      else if (reverse_lex_before(p, conjugate(p)))
        total += d * d;
    });
    ASSERT_EQ(total, factorial(n) / 2) << n;
  }
}

TEST(Partitions, BranchingRule) {
  for (int n = 1; n <= 15; ++n)
    for (const auto &p : enumerate_partitions(n)) {
      BigNat down = 0, up = 0;
      for (const auto &node : removable(p)) down += degree(node.result);
      for (const auto &node : addable(p)) up += degree(node.result);
      ASSERT_EQ(down, degree(p)) << p.to_string();
      ASSERT_EQ(up, (n + 1) * degree(p)) << p.to_string();
    }
}

TEST(Partitions, CornerCountsAndBounds) {
  for (int n = 1; n <= 30; ++n)
    for_each_partition(n, [&](const Partition &p) {
      const auto a = addable(p).size(), r = removable(p).size();
      ASSERT_EQ(a, r + 1);
      // |A| < sqrt(2n) + 1 and |R| < sqrt(2n), compared on integers.
      ASSERT_LT(r * r, static_cast<std::size_t>(2 * n));
      for (const auto &node : addable(p)) ASSERT_EQ(node.result.size(), n + 1);
      for (const auto &node : removable(p)) ASSERT_EQ(node.result.size(), n - 1);
    });
  const auto corners = addable(Partition({2, 1}));
  ASSERT_EQ(corners.size(), 3u);
  EXPECT_EQ(corners[0].row, 0);
  EXPECT_EQ(corners[0].column, 2);
  EXPECT_EQ(corners[2].result, Partition({2, 1, 1}));
}
