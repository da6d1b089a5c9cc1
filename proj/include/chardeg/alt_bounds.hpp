#pragma once

// Largest character degrees of S_n and A_n and the exact checks that the
// largest S_n-extendible degree of A_n is at least (n!/2)^(1/3).

#include "chardeg/exact_arith.hpp"
#include "chardeg/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chardeg {

struct DegreeMax {
  BigNat value = 0;
  Partition witness;
};

namespace detail {

// First partition (in reverse-lex order) maximising `score`; partitions for
// which `score` returns nullopt are ignored.
template <class Score> DegreeMax max_over_partitions(int n, Score &&score) {
  DegreeMax best;
  bool found = false;
  for_each_partition(n, [&](const Partition &lambda) {
    std::optional<BigNat> s = score(lambda);
    if (s && (!found || *s > best.value)) {
      best.value = *s;
      best.witness = lambda;
      found = true;
    }
  });
  return best;
}

} // namespace detail

/// b(S_n) with its first witness in canonical order.
inline DegreeMax b_sym(int n) {
  if (n < 1) throw InputError("b_sym: n must be >= 1");
  return detail::max_over_partitions(n, [](const Partition &l) -> std::optional<BigNat> {
    return degree(l);
  });
}

/// b(A_n) = max over lambda of the A_n-degree labelled by lambda.
inline DegreeMax b_alt(int n) {
  if (n < 1) throw InputError("b_alt: n must be >= 1");
  return detail::max_over_partitions(n, [](const Partition &l) -> std::optional<BigNat> {
    return alt_degree(l);
  });
}

/// Largest degree of an A_n-irreducible that extends to S_n, i.e. the largest
/// f_lambda over non-self-conjugate lambda. Equals d(A_n) for n != 6.
inline DegreeMax d_alt(int n) {
  if (n < 5) throw InputError("d_alt: n must be >= 5");
  return detail::max_over_partitions(n, [](const Partition &l) -> std::optional<BigNat> {
    if (is_self_conjugate(l)) return std::nullopt;
    return degree(l);
  });
}

struct AltBoundReport {
  int n = 0;
  DegreeMax b_sym;
  DegreeMax b_alt;
  DegreeMax d_alt;
  BigNat alt_order;       // n!/2
  BigNat d_alt_cubed;
  bool cube_check = false; // d_alt^3 >= n!/2
  // n = 6: Aut(A_6) is larger than S_6, so d_alt is only the S_6-extendible value.
  bool aut_incomplete = false;
};

/// Computes b(S_n), b(A_n), d(A_n) in one pass and decides d^3 >= n!/2.
inline AltBoundReport verify_cube_bound(int n) {
  if (n < 5) throw InputError("verify_cube_bound: n must be >= 5");
  AltBoundReport report;
  report.n = n;
  bool first = true;
  for_each_partition(n, [&](const Partition &lambda) {
    const BigNat f = degree(lambda);
    const bool self_conj = is_self_conjugate(lambda);
    const BigNat f_alt = self_conj ? BigNat(f / 2) : f;
    if (first || f > report.b_sym.value) report.b_sym = {f, lambda};
    if (first || f_alt > report.b_alt.value) report.b_alt = {f_alt, lambda};
    if (!self_conj && f > report.d_alt.value) report.d_alt = {f, lambda};
    first = false;
  });
  report.alt_order = factorial(n) / 2;
  report.d_alt_cubed = ipow(report.d_alt.value, 3);
  report.cube_check = report.d_alt_cubed >= report.alt_order;
  report.aut_incomplete = (n == 6);
  return report;
}

/// One displayed sufficient inequality of the induction step
/// "rational-or-interval expression >= (n+1)^(1/3)".
struct InductionCase {
  std::string name;
  Verdict verdict = Verdict::Undecided;
  std::string lhs;  // exact rational, or certified [low, high]
  std::string rhs;  // "(n+1)^(1/3)" enclosure used for the decision
};

struct InductionStepReport {
  int n = 0;
  BigNat ceil_sqrt_2n;    // ceil(sqrt(2n))
  BigNat ceil_sqrt_2n2;   // ceil(sqrt(2n+2))
  InductionCase case1;
  InductionCase case2a;
  InductionCase case2b;

  bool all_hold() const {
    return case1.verdict == Verdict::Holds && case2a.verdict == Verdict::Holds &&
           case2b.verdict == Verdict::Holds;
  }
};

namespace detail {

inline InductionCase rational_vs_cube_root(std::string name, const ExactRational &x, int n_plus_1) {
  InductionCase c;
  c.name = std::move(name);
  c.lhs = to_decimal(x);
  c.rhs = std::to_string(n_plus_1) + "^(1/3)";
  const Ordering o = compare_to_root(x, ExactRational(n_plus_1), 3);
  c.verdict = (o == Ordering::Less) ? Verdict::Fails : Verdict::Holds;
  return c;
}

} // namespace detail

/// Checks, for n >= 30, the three inequalities that drive the step
/// d(A_{n+1}) >= (n+1)^(1/3) d(A_n):
///   (1)  (n+1)/c                              >= (n+1)^(1/3)
///   (2a) (n+2-c')/(c-1)                       >= (n+1)^(1/3)
///   (2b) (n+3-c'-(c-1) n^(-1/3))/(c-1)        >= (n+1)^(1/3)
/// with c = ceil(sqrt(2n)) and c' = ceil(sqrt(2n+2)). (1) and (2a) are exact
/// rational-vs-root comparisons; (2b) uses certified cube-root enclosures.
inline InductionStepReport verify_induction_step(int n) {
  if (n < 30) throw InputError("verify_induction_step: n must be >= 30");
  InductionStepReport r;
  r.n = n;
  r.ceil_sqrt_2n = ceil_sqrt(BigNat(2 * n));
  r.ceil_sqrt_2n2 = ceil_sqrt(BigNat(2 * n + 2));
  const BigNat &c = r.ceil_sqrt_2n;
  const BigNat &c2 = r.ceil_sqrt_2n2;

  r.case1 = detail::rational_vs_cube_root("case 1", ExactRational(BigNat(n + 1), c), n + 1);
  r.case2a = detail::rational_vs_cube_root(
      "case 2a", ExactRational(BigNat(n + 2) - c2, c - 1), n + 1);

  // (A - B t)/C with t = n^(-1/3) in [1/high, 1/low] of the n^(1/3) enclosure.
  const ExactRational a(BigNat(n + 3) - c2);
  const ExactRational b(c - 1);
  r.case2b.name = "case 2b";
  r.case2b.verdict = refine_until_decided([&](const ExactRational &tol) {
    const RootInterval root_n = root_bounds(ExactRational(n), 3, tol);
    const RootInterval root_n1 = root_bounds(ExactRational(n + 1), 3, tol);
    const ExactRational lhs_low = (a - b / root_n.low) / b;
    const ExactRational lhs_high = (a - b / root_n.high) / b;
    r.case2b.lhs = "[" + to_decimal(lhs_low) + ", " + to_decimal(lhs_high) + "]";
    r.case2b.rhs = "[" + to_decimal(root_n1.low) + ", " + to_decimal(root_n1.high) + "]";
    if (lhs_low >= root_n1.high) return Verdict::Holds;
    if (lhs_high < root_n1.low) return Verdict::Fails;
    return Verdict::Undecided;
  });
  return r;
}

struct RectangleScan {
  int n = 0;
  ExactRational delta;
  ExactRational exponent;  // 1/2 - delta
  std::vector<std::pair<Partition, BigNat>> rectangles;  // canonical order
  Partition best;
  BigNat best_degree = 0;
  bool exceeds = false;  // best_degree > (n!)^(1/2 - delta)
};

/// Scans the rectangular partitions (b^a), ab = n, and decides
/// f > (n!)^(p/q) exactly as f^q > (n!)^p where p/q = 1/2 - delta.
inline RectangleScan rectangle_scan(int n, const ExactRational &delta) {
  if (n < 4) throw InputError("rectangle_scan: n must be >= 4");
  if (delta <= 0 || delta >= ExactRational(1, 2))
    throw InputError("rectangle_scan: delta must lie in (0, 1/2)");
  RectangleScan scan;
  scan.n = n;
  scan.delta = delta;
  scan.exponent = ExactRational(1, 2) - delta;
  for (int rows = 1; rows <= n; ++rows) {
    if (n % rows != 0) continue;
    Partition rect(std::vector<int>(rows, n / rows));
    BigNat f = degree(rect);
    if (scan.rectangles.empty() || f > scan.best_degree) {
      scan.best = rect;
      scan.best_degree = f;
    }
    scan.rectangles.emplace_back(std::move(rect), std::move(f));
  }
  const BigNat p = boost::multiprecision::numerator(scan.exponent);
  const BigNat q = boost::multiprecision::denominator(scan.exponent);
  scan.exceeds = ipow(scan.best_degree, static_cast<unsigned>(q)) >
                 ipow(factorial(n), static_cast<unsigned>(p));
  return scan;
}

} // namespace chardeg
