#include "chardeg/exact_arith.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace chardeg;

namespace {

// Trial-division p-part, independent of the library's loop.
BigNat slow_p_part(std::uint64_t n, std::uint64_t p) {
  BigNat out = 1;
  for (std::uint64_t d = n; d > 0 && d % p == 0; d /= p) out *= p;
  return out;
}

} // namespace

TEST(ExactArith, FactorialAndPowers) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
  EXPECT_EQ(ipow(BigNat(3), 0), 1);
  EXPECT_EQ(ipow(BigNat(2), 100).str(), "1267650600228229401496703205376");
  EXPECT_EQ(rpow(ExactRational(2, 3), 3), ExactRational(8, 27));
}

TEST(ExactArith, Primes) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}));
  EXPECT_EQ(prime_divisors(BigNat(432)), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(prime_divisors(BigNat(7920)), (std::vector<std::uint64_t>{2, 3, 5, 11}));
  EXPECT_TRUE(prime_divisors(BigNat(1)).empty());
}

TEST(ExactArith, PPartMatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 2000; ++n)
    for (std::uint64_t p : {2, 3, 5, 7, 11}) ASSERT_EQ(p_part(BigNat(n), p), slow_p_part(n, p)) << n << " " << p;
  EXPECT_EQ(p_part(BigNat(432), 3), 27);
  EXPECT_EQ(pi_part(BigNat(432), {2, 3}), 432);
  EXPECT_EQ(pi_part(BigNat(7920), {2, 11}), 176);
  EXPECT_THROW(p_part(BigNat(0), 2), InputError);
}

TEST(ExactArith, PPartTimesComplementIsN) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const BigNat n = rng() % 1'000'000 + 1;
    for (auto p : prime_divisors(n)) {
      const BigNat part = p_part(n, p);
      EXPECT_EQ(n % part, 0);
      EXPECT_NE((n / part) % p, 0);
    }
  }
}

TEST(ExactArith, IntegerRoots) {
  EXPECT_EQ(integer_root(BigNat(0), 3), 0);
  EXPECT_EQ(integer_root(BigNat(26), 3), 2);
  EXPECT_EQ(integer_root(BigNat(27), 3), 3);
  EXPECT_EQ(integer_root(BigNat(1296), 2), 36);
  EXPECT_EQ(integer_root(BigNat(4608), 2), 67);
  EXPECT_EQ(ceil_sqrt(BigNat(60)), 8);
  EXPECT_EQ(ceil_sqrt(BigNat(64)), 8);
  EXPECT_EQ(ceil_sqrt(BigNat(66)), 9);
  for (unsigned deg : {2u, 3u})
    for (std::uint64_t n = 0; n < 3000; ++n) {
      const BigNat r = integer_root(BigNat(n), deg);
      ASSERT_LE(ipow(r, deg), n);
      ASSERT_GT(ipow(r + 1, deg), n);
    }
}

TEST(ExactArith, CompareToRoot) {
  EXPECT_EQ(compare_to_root(ExactRational(3), ExactRational(27), 3), Ordering::Equal);
  EXPECT_EQ(compare_to_root(ExactRational(31, 10), ExactRational(31), 3), Ordering::Less);
  EXPECT_EQ(compare_to_root(ExactRational(315, 100), ExactRational(31), 3), Ordering::Greater);
  EXPECT_EQ(compare_to_root(ExactRational(-1), ExactRational(2), 2), Ordering::Less);
  EXPECT_THROW(compare_to_root(ExactRational(1), ExactRational(2), 4), InputError);
}

TEST(ExactArith, RootBoundsAreCertifiedAndNarrow) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const ExactRational radicand(BigNat(rng() % 100000 + 1), BigNat(rng() % 97 + 1));
    const ExactRational tol(1, BigNat(1) << (rng() % 40 + 1));
    for (unsigned deg : {2u, 3u}) {
      const auto r = root_bounds(radicand, deg, tol);
      ASSERT_TRUE(r.certified());
      ASSERT_LE(r.width(), tol);
    }
  }
  const auto exact = root_bounds(ExactRational(8), 3, ExactRational(1, 4));
  EXPECT_EQ(exact.low, 2);
  EXPECT_EQ(exact.high, 2);
}

TEST(ExactArith, RefineUntilDecided) {
  int calls = 0;
  const Verdict v = refine_until_decided([&](const ExactRational &tol) {
    ++calls;
    return tol < ExactRational(1, 1000) ? Verdict::Holds : Verdict::Undecided;
  });
  EXPECT_EQ(v, Verdict::Holds);
  EXPECT_EQ(calls, 7);  // 1/16 halved until below 1/1000
  EXPECT_EQ(refine_until_decided([](const ExactRational &) { return Verdict::Undecided; }), Verdict::Undecided);
}

TEST(ExactArith, Decimal) {
  EXPECT_EQ(to_decimal(ExactRational(11, 432)), "11/432");
  EXPECT_EQ(to_decimal(ExactRational(6, 3)), "2");
  EXPECT_EQ(to_decimal(BigNat(5)), "5");
}
