#pragma once

// Exact integer / rational arithmetic used by every verdict in the toolkit.
// Nothing here touches floating point: comparisons against square and cube
// roots are decided by powering the rational side, and root enclosures are
// certified by powering their endpoints.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chardeg {

using BigNat = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Raised when an operation is handed arguments outside its domain.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal mathematical invariant fails (e.g. a hook product
/// that does not divide n!). Always a bug, never a user error.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class Ordering { Less, Equal, Greater };

/// Three-way verdict for inequalities that may need refinement.
enum class Verdict { Holds, Fails, Undecided };

inline const char *to_string(Ordering o) {
  switch (o) {
  case Ordering::Less: return "Less";
  case Ordering::Equal: return "Equal";
  case Ordering::Greater: return "Greater";
  }
  return "?";
}

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::Undecided: return "undecided";
  }
  return "?";
}

template <class T> Ordering compare(const T &a, const T &b) {
  if (a < b) return Ordering::Less;
  if (b < a) return Ordering::Greater;
  return Ordering::Equal;
}

inline std::string to_decimal(const BigNat &n) { return n.str(); }

inline std::string to_decimal(const ExactRational &r) {
  const BigNat num = boost::multiprecision::numerator(r);
  const BigNat den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline ExactRational make_rational(const BigNat &num, const BigNat &den) {
  if (den == 0) throw InputError("rational with zero denominator");
  return ExactRational(num, den);
}

inline BigNat ipow(BigNat base, unsigned exponent) {
  return boost::multiprecision::pow(std::move(base), exponent);
}

inline ExactRational rpow(const ExactRational &base, unsigned exponent) {
  ExactRational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

inline BigNat factorial(unsigned n) {
  BigNat result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime divisors of n in increasing order (trial division).
inline std::vector<std::uint64_t> prime_divisors(BigNat n) {
  if (n < 1) throw InputError("prime_divisors: argument must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; BigNat(d) * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (n > std::numeric_limits<std::uint64_t>::max())
      throw InputError("prime_divisors: cofactor exceeds 64 bits");
    primes.push_back(static_cast<std::uint64_t>(n));
  }
  return primes;
}

/// Largest power of the prime p dividing n.
inline BigNat p_part(const BigNat &n, std::uint64_t p) {
  if (n < 1) throw InputError("p_part: n must be positive");
  if (!is_prime(p)) throw InputError("p_part: " + std::to_string(p) + " is not prime");
  BigNat rest = n;
  BigNat part = 1;
  while (rest % p == 0) {
    rest /= p;
    part *= p;
  }
  return part;
}

inline BigNat pi_part(const BigNat &n, const std::set<std::uint64_t> &primes) {
  if (n < 1) throw InputError("pi_part: n must be positive");
  BigNat part = 1;
  for (auto p : primes) part *= p_part(n, p);
  return part;
}

/// floor(n^(1/degree)) for degree 2 or 3.
inline BigNat integer_root(const BigNat &n, unsigned degree) {
  if (n < 0) throw InputError("integer_root: negative radicand");
  if (degree == 2) return boost::multiprecision::sqrt(n);
  if (degree != 3) throw InputError("integer_root: degree must be 2 or 3");
  if (n < 2) return n;
  // Bisection on [lo, hi) with lo^3 <= n < hi^3.
  BigNat lo = 1;
  BigNat hi = BigNat(1) << (boost::multiprecision::msb(n) / 3 + 1);
  while (hi - lo > 1) {
    BigNat mid = (lo + hi) / 2;
    if (mid * mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// Smallest integer not smaller than sqrt(n).
inline BigNat ceil_sqrt(const BigNat &n) {
  BigNat r = integer_root(n, 2);
  return r * r == n ? r : r + 1;
}

/// Exact ordering of x versus radicand^(1/degree).
inline Ordering compare_to_root(const ExactRational &x, const ExactRational &radicand,
                                unsigned degree) {
  if (degree != 2 && degree != 3) throw InputError("compare_to_root: degree must be 2 or 3");
  if (radicand < 0) throw InputError("compare_to_root: negative radicand");
  if (x < 0) return Ordering::Less;
  return compare(rpow(x, degree), radicand);
}

/// Certified enclosure low <= radicand^(1/degree) <= high.
struct RootInterval {
  ExactRational low;
  ExactRational high;
  ExactRational radicand;
  unsigned degree = 2;

  ExactRational width() const { return high - low; }
  bool certified() const {
    return rpow(low, degree) <= radicand && radicand <= rpow(high, degree) && low >= 0;
  }
};

/// Encloses radicand^(1/degree) in an interval of width <= tolerance by taking
/// an integer root of radicand scaled by 2^(k*degree).
inline RootInterval root_bounds(const ExactRational &radicand, unsigned degree,
                                const ExactRational &tolerance) {
  if (degree != 2 && degree != 3) throw InputError("root_bounds: degree must be 2 or 3");
  if (radicand < 0) throw InputError("root_bounds: negative radicand");
  if (tolerance <= 0) throw InputError("root_bounds: tolerance must be positive");
  RootInterval out{0, 0, radicand, degree};
  if (radicand == 0) return out;

  unsigned bits = 0;
  while (ExactRational(1, BigNat(1) << bits) > tolerance) ++bits;
  const BigNat scale = BigNat(1) << bits;
  const BigNat num = boost::multiprecision::numerator(radicand);
  const BigNat den = boost::multiprecision::denominator(radicand);
  const BigNat scaled = num * ipow(scale, degree) / den;
  const BigNat m = integer_root(scaled, degree);
  out.low = ExactRational(m, scale);
  const bool exact = ipow(m, degree) * den == num * ipow(scale, degree);
  out.high = exact ? out.low : ExactRational(m + 1, scale);
  return out;
}

/// Hard cap on tolerance halvings when deciding an interval comparison.
inline constexpr int kMaxRefinements = 64;

/// Repeatedly calls `attempt(tolerance)` with halving tolerance until it
/// returns Holds or Fails. `attempt` must return Undecided when its enclosures
/// overlap. After kMaxRefinements halvings the result is Undecided.
template <class Attempt>
Verdict refine_until_decided(Attempt &&attempt, ExactRational tolerance = ExactRational(1, 16)) {
  for (int i = 0; i <= kMaxRefinements; ++i) {
    const Verdict v = attempt(tolerance);
    if (v != Verdict::Undecided) return v;
    tolerance /= 2;
  }
  return Verdict::Undecided;
}

} // namespace chardeg
