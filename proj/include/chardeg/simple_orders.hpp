#pragma once

// Orders of the finite simple groups of Lie type, the Steinberg degree
// |S|_p versus |S|^(1/3), PSL(2,q) / SL(2,2^f) tightness data, and the
// bundled sporadic table.

#include "chardeg/exact_arith.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace chardeg {

enum class LieFamily { A, B, C, D, A2, B2_2, D2, D4_3, G2, F4, E6, E6_2, E7, E8, G2_2, F4_2 };

struct LieFamilyInfo {
  LieFamily family;
  const char *label;   // as written in names: "2A", "3D4", "2B2", ...
  int fixed_rank;      // 0 for the classical families
};

inline constexpr std::array<LieFamilyInfo, 16> kLieFamilies{{
    {LieFamily::A, "A", 0},       {LieFamily::B, "B", 0},       {LieFamily::C, "C", 0},
    {LieFamily::D, "D", 0},       {LieFamily::A2, "2A", 0},     {LieFamily::B2_2, "2B2", 2},
    {LieFamily::D2, "2D", 0},     {LieFamily::D4_3, "3D4", 4},  {LieFamily::G2, "G2", 2},
    {LieFamily::F4, "F4", 4},     {LieFamily::E6, "E6", 6},     {LieFamily::E6_2, "2E6", 6},
    {LieFamily::E7, "E7", 7},     {LieFamily::E8, "E8", 8},     {LieFamily::G2_2, "2G2", 2},
    {LieFamily::F4_2, "2F4", 4},
}};

inline const LieFamilyInfo &family_info(LieFamily f) {
  for (const auto &info : kLieFamilies)
    if (info.family == f) return info;
  throw InputError("unknown Lie family");
}

struct LieSpec {
  LieFamily family = LieFamily::A;
  int rank = 1;
  std::uint64_t q = 2;

  /// Lie notation, e.g. "A1(7)", "2A2(3)", "3D4(2)", "2B2(8)".
  std::string name() const {
    const auto &info = family_info(family);
    std::string out = info.label;
    if (info.fixed_rank == 0) out += std::to_string(rank);
    return out + "(" + std::to_string(q) + ")";
  }
};

struct PrimePower {
  std::uint64_t p = 0;
  unsigned exponent = 0;
};

/// Decomposes q = p^e, or nullopt if q is not a prime power.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  PrimePower pp{p, 0};
  while (q % p == 0) {
    q /= p;
    ++pp.exponent;
  }
  if (q != 1) return std::nullopt;
  return pp;
}

/// Parses "A1(7)", "2A3(4)", "B2(3)", "3D4(2)", "G2(5)", "2B2(8)", "E8(2)".
inline LieSpec parse_lie_spec(const std::string &text) {
  static const std::regex pattern(R"(^\s*(2A|2B2|2D|3D4|2E6|2G2|2F4|G2|F4|E6|E7|E8|A|B|C|D)(\d*)\((\d+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("cannot parse Lie type '" + text + "'");
  LieSpec spec;
  const std::string label = m[1];
  bool found = false;
  for (const auto &info : kLieFamilies)
    if (label == info.label) {
      spec.family = info.family;
      found = true;
      if (info.fixed_rank != 0) {
        if (m[2].length() != 0) throw InputError("rank is implied for " + label);
        spec.rank = info.fixed_rank;
      } else {
        if (m[2].length() == 0) throw InputError("missing rank in '" + text + "'");
        spec.rank = std::stoi(m[2]);
      }
    }
  if (!found) throw InputError("unknown Lie family in '" + text + "'");
  spec.q = std::stoull(m[3]);
  return spec;
}

struct GroupOrderRecord {
  std::string name;
  BigNat order;
  std::uint64_t characteristic = 0;
  BigNat p_part;  // |S|_p, the Steinberg degree
};

namespace detail {

inline BigNat qpow(std::uint64_t q, unsigned e) { return ipow(BigNat(q), e); }

inline std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t gcd_big(std::uint64_t a, const BigNat &b) {
  return gcd_u(a, static_cast<std::uint64_t>(b % a));
}

// Throws InputError if (family, rank, q) is not a simple group.
inline void validate(const LieSpec &s, const PrimePower &pp) {
  const auto &info = family_info(s.family);
  const std::string name = s.name();
  if (info.fixed_rank != 0 && s.rank != info.fixed_rank)
    throw InputError(name + ": rank must be " + std::to_string(info.fixed_rank));
  auto not_simple = [&](const char *why) {
    throw InputError(name + " is not simple (" + std::string(why) + ")");
  };
  auto odd_power_of = [&](std::uint64_t p) {
    return pp.p == p && pp.exponent % 2 == 1;
  };
  switch (s.family) {
  case LieFamily::A:
    if (s.rank < 1) throw InputError(name + ": rank must be >= 1");
    if (s.rank == 1 && s.q == 2) not_simple("A1(2) = PSL(2,2) is isomorphic to Sym(3)");
    if (s.rank == 1 && s.q == 3) not_simple("A1(3) = PSL(2,3) is isomorphic to Alt(4)");
    break;
  case LieFamily::B:
  case LieFamily::C:
    if (s.rank < 2) throw InputError(name + ": rank must be >= 2 (rank 1 is A1)");
    if (s.rank == 2 && s.q == 2) not_simple("B2(2) = Sp(4,2) is isomorphic to Sym(6)");
    break;
  case LieFamily::D:
    if (s.rank < 3) throw InputError(name + ": rank must be >= 3");
    break;
  case LieFamily::A2:
    if (s.rank < 2) throw InputError(name + ": rank must be >= 2 (2A1 is A1)");
    if (s.rank == 2 && s.q == 2) not_simple("2A2(2) = PSU(3,2) is solvable of order 72");
    break;
  case LieFamily::D2:
    if (s.rank < 2) throw InputError(name + ": rank must be >= 2");
    break;
  case LieFamily::B2_2:
    if (!odd_power_of(2)) throw InputError(name + ": q must be 2^(2m+1)");
    if (s.q == 2) not_simple("2B2(2) is the Frobenius group of order 20");
    break;
  case LieFamily::G2_2:
    if (!odd_power_of(3)) throw InputError(name + ": q must be 3^(2m+1)");
    if (s.q == 3) not_simple("2G2(3) is isomorphic to PGammaL(2,8)");
    break;
  case LieFamily::F4_2:
    if (!odd_power_of(2)) throw InputError(name + ": q must be 2^(2m+1)");
    if (s.q == 2) not_simple("2F4(2) has the Tits group 2F4(2)' as a subgroup of index 2");
    break;
  case LieFamily::G2:
    if (s.q == 2) not_simple("G2(2) has G2(2)' = 2A2(3) as a subgroup of index 2");
    break;
  default:
    break;
  }
}

} // namespace detail

/// Exact order of the simple group, including the 1/d centre factor.
inline GroupOrderRecord lie_order(const LieSpec &spec) {
  const auto pp = as_prime_power(spec.q);
  if (!pp) throw InputError(spec.name() + ": q = " + std::to_string(spec.q) + " is not a prime power");
  detail::validate(spec, *pp);
  using detail::qpow;
  const std::uint64_t q = spec.q;
  const BigNat Q = q;
  const unsigned n = static_cast<unsigned>(spec.rank);
  BigNat order = 1;
  std::uint64_t d = 1;

  auto prod_minus = [&](std::initializer_list<unsigned> exps) {
    BigNat out = 1;
    for (unsigned e : exps) out *= qpow(q, e) - 1;
    return out;
  };

  switch (spec.family) {
  case LieFamily::A:  // PSL(n+1, q)
    order = qpow(q, n * (n + 1) / 2);
    for (unsigned i = 1; i <= n; ++i) order *= qpow(q, i + 1) - 1;
    d = detail::gcd_u(n + 1, q - 1);
    break;
  case LieFamily::B:  // Omega(2n+1, q)
  case LieFamily::C:  // PSp(2n, q)
    order = qpow(q, n * n);
    for (unsigned i = 1; i <= n; ++i) order *= qpow(q, 2 * i) - 1;
    d = detail::gcd_u(2, q - 1);
    break;
  case LieFamily::D:  // POmega+(2n, q)
    order = qpow(q, n * (n - 1)) * (qpow(q, n) - 1);
    for (unsigned i = 1; i < n; ++i) order *= qpow(q, 2 * i) - 1;
    d = detail::gcd_big(4, qpow(q, n) - 1);
    break;
  case LieFamily::A2:  // PSU(n+1, q)
    order = qpow(q, n * (n + 1) / 2);
    for (unsigned i = 1; i <= n; ++i)
      order *= (i % 2 == 1) ? BigNat(qpow(q, i + 1) - 1) : BigNat(qpow(q, i + 1) + 1);
    d = detail::gcd_u(n + 1, q + 1);
    break;
  case LieFamily::D2:  // POmega-(2n, q)
    order = qpow(q, n * (n - 1)) * (qpow(q, n) + 1);
    for (unsigned i = 1; i < n; ++i) order *= qpow(q, 2 * i) - 1;
    d = detail::gcd_big(4, qpow(q, n) + 1);
    break;
  case LieFamily::D4_3:
    order = qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + 1) * prod_minus({6, 2});
    break;
  case LieFamily::G2:
    order = qpow(q, 6) * prod_minus({6, 2});
    break;
  case LieFamily::F4:
    order = qpow(q, 24) * prod_minus({12, 8, 6, 2});
    break;
  case LieFamily::E6:
    order = qpow(q, 36) * prod_minus({12, 9, 8, 6, 5, 2});
    d = detail::gcd_u(3, q - 1);
    break;
  case LieFamily::E6_2:
    order = qpow(q, 36) * prod_minus({12, 8, 6, 2}) * (qpow(q, 9) + 1) * (qpow(q, 5) + 1);
    d = detail::gcd_u(3, q + 1);
    break;
  case LieFamily::E7:
    order = qpow(q, 63) * prod_minus({18, 14, 12, 10, 8, 6, 2});
    d = detail::gcd_u(2, q - 1);
    break;
  case LieFamily::E8:
    order = qpow(q, 120) * prod_minus({30, 24, 20, 18, 14, 12, 8, 2});
    break;
  case LieFamily::B2_2:
    order = qpow(q, 2) * (qpow(q, 2) + 1) * (Q - 1);
    break;
  case LieFamily::G2_2:
    order = qpow(q, 3) * (qpow(q, 3) + 1) * (Q - 1);
    break;
  case LieFamily::F4_2:
    order = qpow(q, 12) * (qpow(q, 6) + 1) * (qpow(q, 4) - 1) * (qpow(q, 3) + 1) * (Q - 1);
    break;
  }
  if (order % d != 0) throw InvariantViolation(spec.name() + ": centre factor does not divide order");
  order /= d;

  GroupOrderRecord rec;
  rec.name = spec.name();
  rec.order = order;
  rec.characteristic = pp->p;
  rec.p_part = p_part(order, pp->p);
  return rec;
}

/// |S|_p^3 > |S|: the Steinberg character beats the cube-root bound.
inline bool steinberg_check(const LieSpec &spec) {
  const auto rec = lie_order(spec);
  return ipow(rec.p_part, 3) > rec.order;
}

struct Psl2Profile {
  std::uint64_t q = 0;
  BigNat order;
  ExactRational ratio_q;       // q^3 / |S|
  ExactRational ratio_q_plus;  // (q+1)^3 / |S|
};

inline Psl2Profile psl2_profile(std::uint64_t q) {
  if (q < 4) throw InputError("psl2_profile: q must be >= 4");
  if (!as_prime_power(q)) throw InputError("psl2_profile: q must be a prime power");
  Psl2Profile prof;
  prof.q = q;
  const BigNat Q = q;
  prof.order = Q * (Q * Q - 1) / detail::gcd_u(2, q - 1);
  prof.ratio_q = ExactRational(Q * Q * Q, prof.order);
  prof.ratio_q_plus = ExactRational(ipow(Q + 1, 3), prof.order);
  return prof;
}

/// (2^f+1)^3 / (2^f (4^f - 1)) = b(SL(2,2^f))^3 / |SL(2,2^f)|.
inline ExactRational sl2_even_tightness(unsigned f) {
  if (f < 1) throw InputError("sl2_even_tightness: f must be >= 1");
  const BigNat two_f = BigNat(1) << f;
  return ExactRational(ipow(two_f + 1, 3), two_f * (two_f * two_f - 1));
}

// ---------------------------------------------------------------------------
// Sporadic groups

struct SporadicEntry {
  std::string name;
  BigNat order;
  std::optional<BigNat> d_value;  // absent when the table ships no degree
  std::string provenance;
};

/// Reads `name|order|d_value|provenance` records, one per line. d_value may be
/// "-" (not bundled). Errors carry the 1-based line number.
inline std::vector<SporadicEntry> parse_sporadic_table(std::istream &in) {
  std::vector<SporadicEntry> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = "sporadic table line " + std::to_string(line_no) + ": ";
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '|')) fields.push_back(field);
    if (!line.empty() && line.back() == '|') fields.emplace_back();
    if (fields.size() != 4) throw InputError(where + "expected 4 '|'-separated fields");
    SporadicEntry e;
    e.name = fields[0];
    if (e.name.empty()) throw InputError(where + "empty name");
    auto parse_nat = [&](const std::string &s, const char *what) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(where + what + " is not a decimal integer");
      return BigNat(s);
    };
    e.order = parse_nat(fields[1], "order");
    if (fields[2] != "-") e.d_value = parse_nat(fields[2], "d_value");
    e.provenance = fields[3];
    if (e.provenance.empty()) throw InputError(where + "empty provenance");
    table.push_back(std::move(e));
  }
  return table;
}

inline std::vector<SporadicEntry> load_sporadic_table(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open sporadic table '" + path + "'");
  return parse_sporadic_table(in);
}

inline const SporadicEntry &find_sporadic(const std::vector<SporadicEntry> &table,
                                          const std::string &name) {
  for (const auto &e : table)
    if (e.name == name) return e;
  throw InputError("unknown sporadic group '" + name + "'");
}

/// d^3 > |S| for one entry; nullopt when the table carries no degree.
inline std::optional<bool> sporadic_cube_verdict(const SporadicEntry &e) {
  if (!e.d_value) return std::nullopt;
  return ipow(*e.d_value, 3) > e.order;
}

} // namespace chardeg
