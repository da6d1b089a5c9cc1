#pragma once

// Partitions, Young diagrams and the combinatorics behind the degrees of the
// irreducible characters of S_n and A_n.
//
// Cells are addressed (row, column), zero-based, row 0 on top, so row r has
// parts()[r] cells. Hook lengths are stored row-major in the same layout.

#include "chardeg/exact_arith.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace chardeg {

class Partition {
public:
  Partition() = default;

  /// Throws InputError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InputError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InputError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// n, the number of cells.
  int size() const { return size_; }
  /// Number of rows (non-zero parts).
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int> &parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Row length, 0 beyond the last row.
  int part(int row) const { return row < length() ? parts_[row] : 0; }

  friend bool operator==(const Partition &, const Partition &) = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// True iff a precedes b in reverse lexicographic order, i.e. a is
/// lexicographically larger.
inline bool reverse_lex_before(const Partition &a, const Partition &b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

/// Calls visit(partition) for every partition of n in reverse lexicographic
/// order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
inline void for_each_partition(int n, const std::function<void(const Partition &)> &visit) {
  if (n < 0) throw InputError("for_each_partition: n must be nonnegative");
  if (n == 0) {
    visit(Partition{});
    return;
  }
  std::vector<int> parts{n};
  while (true) {
    visit(Partition(parts));
    // Rightmost part larger than 1.
    int pos = static_cast<int>(parts.size()) - 1;
    int freed = 0;
    while (pos >= 0 && parts[pos] == 1) {
      ++freed;
      --pos;
    }
    if (pos < 0) return;
    const int cap = --parts[pos];
    ++freed;
    parts.resize(pos + 1);
    while (freed > 0) {
      const int take = std::min(cap, freed);
      parts.push_back(take);
      freed -= take;
    }
  }
}

inline std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition &p) { out.push_back(p); });
  return out;
}

inline Partition conjugate(const Partition &lambda) {
  std::vector<int> cols(lambda.part(0), 0);
  for (int row_len : lambda.parts())
    for (int c = 0; c < row_len; ++c) ++cols[c];
  return Partition(std::move(cols));
}

inline bool is_self_conjugate(const Partition &lambda) { return conjugate(lambda) == lambda; }

/// Hook lengths of every cell, row-major: hooks[r][c] = arm + leg + 1.
struct HookTable {
  std::vector<std::vector<int>> rows;

  std::vector<int> multiset() const {
    std::vector<int> all;
    for (const auto &row : rows) all.insert(all.end(), row.begin(), row.end());
    std::sort(all.begin(), all.end());
    return all;
  }
  int cell_count() const {
    int total = 0;
    for (const auto &row : rows) total += static_cast<int>(row.size());
    return total;
  }
};

inline HookTable hook_table(const Partition &lambda) {
  const Partition cols = conjugate(lambda);
  HookTable table;
  table.rows.resize(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) {
    table.rows[r].resize(lambda.part(r));
    for (int c = 0; c < lambda.part(r); ++c)
      table.rows[r][c] = (lambda.part(r) - c - 1) + (cols.part(c) - r - 1) + 1;
  }
  return table;
}

namespace detail {

// Smallest prime factor table, grown on demand (per thread).
inline const std::vector<int> &smallest_prime_factors(int limit) {
  thread_local std::vector<int> spf;
  if (static_cast<int>(spf.size()) <= limit) {
    const int size = std::max(limit + 1, 2 * static_cast<int>(spf.size()));
    spf.assign(size, 0);
    for (int i = 2; i < size; ++i)
      if (spf[i] == 0)
        for (int j = i; j < size; j += i)
          if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

inline void add_factorization(std::vector<int> &exponents, int m, int sign,
                              const std::vector<int> &spf) {
  while (m > 1) {
    const int p = spf[m];
    exponents[p] += sign;
    m /= p;
  }
}

} // namespace detail

/// f_lambda = n! / prod(hooks), computed by cancelling prime exponents of the
/// factorial against those of the hook lengths, so n! is never formed.
inline BigNat degree(const Partition &lambda) {
  const int n = lambda.size();
  if (n <= 1) return 1;
  const auto &spf = detail::smallest_prime_factors(n);
  std::vector<int> exponents(n + 1, 0);
  for (int m = 2; m <= n; ++m) detail::add_factorization(exponents, m, +1, spf);
  for (const auto &row : hook_table(lambda).rows)
    for (int h : row) detail::add_factorization(exponents, h, -1, spf);
  BigNat result = 1;
  for (int p = 2; p <= n; ++p) {
    if (exponents[p] < 0)
      throw InvariantViolation("hook product does not divide n! for " + lambda.to_string());
    if (exponents[p] > 0) result *= ipow(BigNat(p), static_cast<unsigned>(exponents[p]));
  }
  return result;
}

/// Degree of the A_n-constituents labelled by lambda: f_lambda, or f_lambda/2
/// when lambda is self-conjugate (the restriction splits in two).
inline BigNat alt_degree(const Partition &lambda) {
  BigNat f = degree(lambda);
  if (!is_self_conjugate(lambda)) return f;
  if (f % 2 != 0)
    throw InvariantViolation("odd degree for self-conjugate " + lambda.to_string());
  return f / 2;
}

/// A corner of the Young diagram together with the diagram it produces.
struct Node {
  int row = 0;
  int column = 0;
  Partition result;
};

using NodeSet = std::vector<Node>;

/// Cells that can be added to give a partition of n+1, top row first.
inline NodeSet addable(const Partition &lambda) {
  NodeSet nodes;
  for (int r = 0; r <= lambda.length(); ++r) {
    if (r > 0 && lambda.part(r - 1) == lambda.part(r)) continue;
    std::vector<int> parts = lambda.parts();
    if (r == lambda.length())
      parts.push_back(1);
    else
      ++parts[r];
    nodes.push_back({r, lambda.part(r), Partition(std::move(parts))});
  }
  return nodes;
}

/// Cells that can be removed to give a partition of n-1, top row first.
inline NodeSet removable(const Partition &lambda) {
  NodeSet nodes;
  for (int r = 0; r < lambda.length(); ++r) {
    if (lambda.part(r) == lambda.part(r + 1)) continue;
    std::vector<int> parts = lambda.parts();
    if (--parts[r] == 0) parts.pop_back();
    nodes.push_back({r, lambda.part(r) - 1, Partition(std::move(parts))});
  }
  return nodes;
}

} // namespace chardeg
