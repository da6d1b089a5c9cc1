#pragma once

// Small matrix groups over prime fields, fully enumerated.
//
// Conventions: vectors are row vectors and matrices act on the right,
// v -> v*M, so (v*g)*h = v*(g*h). A vector of F_p^d is packed as the base-p
// number whose most significant digit is entry 0; packed order is therefore
// lexicographic order of the coordinate tuple. Matrices are packed the same
// way, row-major.

#include "chardeg/exact_arith.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace chardeg {

using VectorCode = std::uint32_t;

class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_power(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      throw InputError("packed encoding does not fit in 64 bits");
    out *= base;
  }
  return out;
}

/// Vector packing for F_p^dim.
struct VectorSpace {
  unsigned p = 2;
  unsigned dim = 1;

  VectorCode size() const {
    const auto n = checked_power(p, dim);
    if (n > (std::uint64_t{1} << 31)) throw InputError("vector space too large to enumerate");
    return static_cast<VectorCode>(n);
  }
  std::vector<unsigned> decode(VectorCode code) const {
    std::vector<unsigned> v(dim);
    for (unsigned i = dim; i-- > 0;) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  }
  VectorCode encode(const std::vector<unsigned> &v) const {
    VectorCode code = 0;
    for (unsigned x : v) code = code * p + (x % p);
    return code;
  }
};

class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(unsigned p, unsigned dim) : p_(p), dim_(dim), entries_(dim * dim, 0) {
    if (!is_prime(p) || p > 251) throw InputError("matrix field order must be a prime <= 251");
    if (dim == 0 || dim > 8) throw InputError("matrix dimension must be in 1..8");
  }

  /// Row-major entries, reduced mod p (negative values allowed).
  static FpMatrix from_entries(unsigned p, unsigned dim, const std::vector<long long> &entries) {
    FpMatrix m(p, dim);
    if (entries.size() != dim * dim) throw InputError("matrix needs dim*dim entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      long long x = entries[i] % static_cast<long long>(p);
      if (x < 0) x += p;
      m.entries_[i] = static_cast<std::uint8_t>(x);
    }
    return m;
  }

  static FpMatrix identity(unsigned p, unsigned dim) {
    FpMatrix m(p, dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  unsigned p() const { return p_; }
  unsigned dim() const { return dim_; }
  std::uint8_t at(unsigned r, unsigned c) const { return entries_[r * dim_ + c]; }
  std::uint8_t &at(unsigned r, unsigned c) { return entries_[r * dim_ + c]; }

  friend bool operator==(const FpMatrix &, const FpMatrix &) = default;

  FpMatrix operator*(const FpMatrix &rhs) const {
    if (p_ != rhs.p_ || dim_ != rhs.dim_) throw InputError("matrix shape/field mismatch");
    FpMatrix out(Unchecked{}, p_, dim_);
    for (unsigned i = 0; i < dim_; ++i)
      for (unsigned k = 0; k < dim_; ++k) {
        const unsigned a = at(i, k);
        if (a == 0) continue;
        for (unsigned j = 0; j < dim_; ++j)
          out.at(i, j) = static_cast<std::uint8_t>((out.at(i, j) + a * rhs.at(k, j)) % p_);
      }
    return out;
  }

  unsigned determinant() const {
    std::vector<unsigned> a(entries_.begin(), entries_.end());
    unsigned det = 1;
    for (unsigned col = 0; col < dim_; ++col) {
      unsigned piv = col;
      while (piv < dim_ && a[piv * dim_ + col] == 0) ++piv;
      if (piv == dim_) return 0;
      if (piv != col) {
        for (unsigned j = 0; j < dim_; ++j) std::swap(a[piv * dim_ + j], a[col * dim_ + j]);
        det = (p_ - det) % p_;
      }
      const unsigned pv = a[col * dim_ + col];
      det = det * pv % p_;
      const unsigned inv = mod_inverse(pv);
      for (unsigned r = col + 1; r < dim_; ++r) {
        const unsigned f = a[r * dim_ + col] * inv % p_;
        if (f == 0) continue;
        for (unsigned j = col; j < dim_; ++j)
          a[r * dim_ + j] = (a[r * dim_ + j] + (p_ - f) * a[col * dim_ + j]) % p_;
      }
    }
    return det;
  }

  FpMatrix inverse() const {
    // Gauss-Jordan on [A | I].
    const unsigned n = dim_;
    std::vector<unsigned> a(n * 2 * n, 0);
    for (unsigned r = 0; r < n; ++r) {
      for (unsigned c = 0; c < n; ++c) a[r * 2 * n + c] = at(r, c);
      a[r * 2 * n + n + r] = 1;
    }
    for (unsigned col = 0; col < n; ++col) {
      unsigned piv = col;
      while (piv < n && a[piv * 2 * n + col] == 0) ++piv;
      if (piv == n) throw InputError("matrix is singular");
      for (unsigned j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[col * 2 * n + j]);
      const unsigned inv = mod_inverse(a[col * 2 * n + col]);
      for (unsigned j = 0; j < 2 * n; ++j) a[col * 2 * n + j] = a[col * 2 * n + j] * inv % p_;
      for (unsigned r = 0; r < n; ++r) {
        if (r == col) continue;
        const unsigned f = a[r * 2 * n + col];
        if (f == 0) continue;
        for (unsigned j = 0; j < 2 * n; ++j)
          a[r * 2 * n + j] = (a[r * 2 * n + j] + (p_ - f) * a[col * 2 * n + j]) % p_;
      }
    }
    FpMatrix out(Unchecked{}, p_, n);
    for (unsigned r = 0; r < n; ++r)
      for (unsigned c = 0; c < n; ++c) out.at(r, c) = static_cast<std::uint8_t>(a[r * 2 * n + n + c]);
    return out;
  }

  /// v * M for a packed row vector v.
  VectorCode act(VectorCode code) const {
    unsigned digits[64];
    for (unsigned i = dim_; i-- > 0;) {
      digits[i] = code % p_;
      code /= p_;
    }
    VectorCode out = 0;
    for (unsigned j = 0; j < dim_; ++j) {
      unsigned s = 0;
      for (unsigned i = 0; i < dim_; ++i) s += digits[i] * at(i, j);
      out = out * p_ + s % p_;
    }
    return out;
  }

  /// M * v for a packed column vector v (used only by the left-action variant).
  VectorCode act_left(VectorCode code) const {
    unsigned digits[64];
    for (unsigned i = dim_; i-- > 0;) {
      digits[i] = code % p_;
      code /= p_;
    }
    VectorCode out = 0;
    for (unsigned i = 0; i < dim_; ++i) {
      unsigned s = 0;
      for (unsigned j = 0; j < dim_; ++j) s += at(i, j) * digits[j];
      out = out * p_ + s % p_;
    }
    return out;
  }

  /// Row-major base-p packing; throws if p^(dim^2) exceeds 64 bits.
  std::uint64_t key() const {
    checked_power(p_, dim_ * dim_);
    std::uint64_t k = 0;
    for (auto x : entries_) k = k * p_ + x;
    return k;
  }

  std::string to_string() const {
    std::string out = "[";
    for (unsigned r = 0; r < dim_; ++r) {
      out += r ? ",[" : "[";
      for (unsigned c = 0; c < dim_; ++c) out += (c ? "," : "") + std::to_string(at(r, c));
      out += "]";
    }
    return out + "]";
  }

private:
  struct Unchecked {};
  FpMatrix(Unchecked, unsigned p, unsigned dim) : p_(p), dim_(dim), entries_(dim * dim, 0) {}

  unsigned mod_inverse(unsigned a) const {
    unsigned result = 1;
    unsigned base = a % p_;
    unsigned e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  unsigned p_ = 2;
  unsigned dim_ = 1;
  std::vector<std::uint8_t> entries_;
};

struct GroupMetadata {
  std::string label;
  std::optional<BigNat> claimed_order;
  std::optional<bool> solvable;
  std::optional<BigNat> fitting_order;
  std::optional<BigNat> frattini_order;
  std::vector<std::string> expected_checks;

  bool expects(const std::string &check) const {
    return std::find(expected_checks.begin(), expected_checks.end(), check) !=
           expected_checks.end();
  }
};

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

class MatGroup {
public:
  unsigned p() const { return p_; }
  unsigned dim() const { return dim_; }
  VectorSpace space() const { return {p_, dim_}; }
  const std::vector<FpMatrix> &generators() const { return generators_; }
  const std::vector<FpMatrix> &elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const GroupMetadata &metadata() const { return metadata_; }
  GroupMetadata &metadata() { return metadata_; }

  bool contains(const FpMatrix &m) const { return index_.count(m.key()) != 0; }
  std::optional<std::size_t> index_of(const FpMatrix &m) const {
    auto it = index_.find(m.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend MatGroup close(unsigned p, unsigned dim, std::vector<FpMatrix> generators,
                        std::size_t cap);

private:
  unsigned p_ = 2;
  unsigned dim_ = 1;
  std::vector<FpMatrix> generators_;
  std::vector<FpMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  GroupMetadata metadata_;
};

/// Breadth-first closure of the generators under right multiplication.
/// Element 0 is the identity; order is deterministic given the generators.
inline MatGroup close(unsigned p, unsigned dim, std::vector<FpMatrix> generators,
                      std::size_t cap = kDefaultElementCap) {
  if (cap == 0) throw InputError("close: cap must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto &g = generators[i];
    if (g.p() != p || g.dim() != dim)
      throw InputError("generator " + std::to_string(i) + " has the wrong field or dimension");
    if (g.determinant() == 0) throw InputError("generator " + std::to_string(i) + " is singular");
  }
  MatGroup G;
  G.p_ = p;
  G.dim_ = dim;
  G.generators_ = std::move(generators);
  const FpMatrix id = FpMatrix::identity(p, dim);
  G.elements_.push_back(id);
  G.index_.emplace(id.key(), 0);
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto &g : G.generators_) {
      FpMatrix next = G.elements_[head] * g;
      const auto key = next.key();
      if (G.index_.count(key)) continue;
      if (G.elements_.size() >= cap)
        throw OverflowError("group closure exceeded cap of " + std::to_string(cap) + " elements");
      G.index_.emplace(key, G.elements_.size());
      G.elements_.push_back(std::move(next));
    }
  }
  return G;
}

inline MatGroup close(const std::vector<FpMatrix> &generators, std::size_t cap = kDefaultElementCap) {
  if (generators.empty()) throw InputError("close: need at least one generator to infer p and dim");
  return close(generators.front().p(), generators.front().dim(), generators, cap);
}

inline MatGroup trivial_group(unsigned p, unsigned dim) { return close(p, dim, {}); }

namespace detail {

inline FpMatrix block_diagonal(const std::vector<FpMatrix> &blocks) {
  unsigned dim = 0;
  for (const auto &b : blocks) dim += b.dim();
  FpMatrix out(blocks.front().p(), dim);
  unsigned off = 0;
  for (const auto &b : blocks) {
    for (unsigned r = 0; r < b.dim(); ++r)
      for (unsigned c = 0; c < b.dim(); ++c) out.at(off + r, off + c) = b.at(r, c);
    off += b.dim();
  }
  return out;
}

// Permutation matrix moving block i to block perm[i] (blocks of size `block`).
inline FpMatrix block_permutation(unsigned p, unsigned block, const std::vector<unsigned> &perm) {
  const unsigned k = static_cast<unsigned>(perm.size());
  FpMatrix out(p, block * k);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned r = 0; r < block; ++r) out.at(i * block + r, perm[i] * block + r) = 1;
  return out;
}

} // namespace detail

/// Block-diagonal action of G x H on U (+) W.
inline MatGroup direct_sum(const MatGroup &G, const MatGroup &H, std::size_t cap = kDefaultElementCap) {
  if (G.p() != H.p())
    throw InputError("direct_sum: mixed characteristic is not representable as one matrix group");
  const auto idG = FpMatrix::identity(G.p(), G.dim());
  const auto idH = FpMatrix::identity(H.p(), H.dim());
  std::vector<FpMatrix> gens;
  for (const auto &g : G.generators()) gens.push_back(detail::block_diagonal({g, idH}));
  for (const auto &h : H.generators()) gens.push_back(detail::block_diagonal({idG, h}));
  return close(G.p(), G.dim() + H.dim(), std::move(gens), cap);
}

/// G wr Sym(k) acting on U^k: block-diagonal copies of G in the first block
/// plus block permutations generating Sym(k).
inline MatGroup wreath(const MatGroup &G, unsigned k, std::size_t cap = kDefaultElementCap) {
  if (k < 1) throw InputError("wreath: k must be positive");
  if (k == 1) return close(G.p(), G.dim(), G.generators(), cap);
  const unsigned d = G.dim();
  const auto id = FpMatrix::identity(G.p(), d);
  std::vector<FpMatrix> gens;
  for (const auto &g : G.generators()) {
    std::vector<FpMatrix> blocks(k, id);
    blocks[0] = g;
    gens.push_back(detail::block_diagonal(blocks));
  }
  std::vector<unsigned> swap01(k), cycle(k);
  for (unsigned i = 0; i < k; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % k;
  }
  std::swap(swap01[0], swap01[1]);
  gens.push_back(detail::block_permutation(G.p(), d, swap01));
  if (k > 2) gens.push_back(detail::block_permutation(G.p(), d, cycle));
  return close(G.p(), d * k, std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Orbits, stabilizers, bases

/// Images of every vector under every element: image(g, v) = v * elements[g].
class VectorAction {
public:
  explicit VectorAction(const MatGroup &G) : space_(G.space()), n_vectors_(G.space().size()) {
    images_.resize(G.order() * n_vectors_);
    for (std::size_t g = 0; g < G.order(); ++g)
      for (VectorCode v = 0; v < n_vectors_; ++v)
        images_[g * n_vectors_ + v] = G.elements()[g].act(v);
  }
  VectorCode image(std::size_t g, VectorCode v) const { return images_[g * n_vectors_ + v]; }
  VectorCode vector_count() const { return n_vectors_; }
  std::size_t group_order() const { return images_.size() / n_vectors_; }
  const VectorSpace &space() const { return space_; }

private:
  VectorSpace space_;
  VectorCode n_vectors_;
  std::vector<VectorCode> images_;
};

struct Orbit {
  VectorCode representative = 0;  // least packed vector in the orbit
  std::size_t size = 0;
};

/// Orbit partition of the whole space (zero included), ordered by representative.
inline std::vector<Orbit> orbits(const MatGroup &G) {
  const VectorSpace V = G.space();
  const VectorCode n = V.size();
  std::vector<bool> seen(n, false);
  std::vector<Orbit> out;
  for (VectorCode start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Orbit orb{start, 0};
    std::vector<VectorCode> queue{start};
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto &g : G.generators()) {
        const VectorCode w = g.act(queue[head]);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    orb.size = queue.size();
    out.push_back(orb);
  }
  return out;
}

inline std::size_t orbit_size(const MatGroup &G, VectorCode v) {
  std::vector<VectorCode> queue{v};
  std::vector<bool> seen(G.space().size(), false);
  seen[v] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto &g : G.generators()) {
      const VectorCode w = g.act(queue[head]);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  return queue.size();
}

/// |C_G(v)| by element scan, cross-checked against |G| / |orbit(v)|.
inline BigNat stabilizer_order(const MatGroup &G, VectorCode v) {
  std::size_t count = 0;
  for (const auto &g : G.elements())
    if (g.act(v) == v) ++count;
  if (count * orbit_size(G, v) != G.order())
    throw InvariantViolation("orbit-stabilizer mismatch");
  return count;
}

inline BigNat min_stabilizer_order(const MatGroup &G) {
  std::size_t largest_orbit = 0;
  for (const auto &o : orbits(G)) largest_orbit = std::max(largest_orbit, o.size);
  return BigNat(G.order() / largest_orbit);
}

enum class CentralizerExponent { Half, TwoThirds };

struct CentralizerWitness {
  VectorCode vector = 0;
  BigNat centralizer_order;
};

/// |C|^2 <= |G| (Half) or |C|^3 <= |G|^2 (TwoThirds).
inline bool centralizer_small_enough(const BigNat &c, const BigNat &order, CentralizerExponent e) {
  return e == CentralizerExponent::Half ? c * c <= order : c * c * c <= order * order;
}

/// Least packed vector whose centralizer is small enough, or nullopt when no
/// vector qualifies.
inline std::optional<CentralizerWitness> small_centralizer_witness(const MatGroup &G,
                                                                   CentralizerExponent e) {
  const BigNat order = G.order();
  for (const auto &o : orbits(G)) {
    const BigNat c = order / o.size;
    if (centralizer_small_enough(c, order, e)) return CentralizerWitness{o.representative, c};
  }
  return std::nullopt;
}

struct BaseWitness {
  std::vector<VectorCode> vectors;
  BigNat pointwise_stabilizer_order;
};

/// Pointwise stabilizer of `vectors`, rechecked element by element.
inline BigNat pointwise_stabilizer_order(const MatGroup &G, const std::vector<VectorCode> &vectors) {
  std::size_t count = 0;
  for (const auto &g : G.elements()) {
    bool fixes = true;
    for (auto v : vectors)
      if (g.act(v) != v) {
        fixes = false;
        break;
      }
    if (fixes) ++count;
  }
  return count;
}

namespace detail {

inline bool search_base(const VectorAction &act, const std::vector<std::size_t> &stab, unsigned depth,
                        std::vector<VectorCode> &tuple) {
  if (stab.size() == 1) return true;
  if (depth == 0) return false;
  const VectorCode n = act.vector_count();
  for (VectorCode v = 0; v < n; ++v) {
    // Only the least vector of each orbit of the current stabilizer.
    bool is_min = true;
    std::vector<std::size_t> next;
    for (auto s : stab) {
      const VectorCode w = act.image(s, v);
      if (w < v) {
        is_min = false;
        break;
      }
      if (w == v) next.push_back(s);
    }
    if (!is_min || next.size() == stab.size()) continue;
    tuple.push_back(v);
    if (search_base(act, next, depth - 1, tuple)) return true;
    tuple.pop_back();
  }
  return false;
}

} // namespace detail

/// Smallest base of size <= limit (limit <= 4), lexicographically first in
/// packed encoding, or nullopt if every tuple of that size has a nontrivial
/// pointwise stabilizer.
inline std::optional<std::pair<unsigned, BaseWitness>> min_base_size(const MatGroup &G, unsigned limit = 4) {
  if (limit > 4) throw InputError("min_base_size: limit must be <= 4");
  const VectorAction act(G);
  std::vector<std::size_t> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (unsigned k = 0; k <= limit; ++k) {
    std::vector<VectorCode> tuple;
    if (detail::search_base(act, all, k, tuple)) {
      BaseWitness w{tuple, pointwise_stabilizer_order(G, tuple)};
      return std::make_pair(static_cast<unsigned>(tuple.size()), w);
    }
  }
  return std::nullopt;
}

/// Number of G-orbits on ordered pairs (u, w) with trivial joint stabilizer.
/// Each such orbit is regular, so this is (#base pairs) / |G|.
inline std::size_t count_size2_base_classes(const MatGroup &G) {
  const VectorAction act(G);
  const VectorCode n = act.vector_count();
  std::size_t pairs = 0;
  for (VectorCode u = 0; u < n; ++u) {
    std::vector<std::size_t> stab_u;
    for (std::size_t g = 0; g < G.order(); ++g)
      if (act.image(g, u) == u) stab_u.push_back(g);
    for (VectorCode w = 0; w < n; ++w) {
      std::size_t fixing = 0;
      for (auto g : stab_u)
        if (act.image(g, w) == w) ++fixing;
      if (fixing == 1) ++pairs;
    }
  }
  if (pairs % G.order() != 0) throw InvariantViolation("base pairs do not form regular orbits");
  return pairs / G.order();
}

/// Size of the G-orbit of the ordered pair (u, w).
inline std::size_t pair_orbit_size(const MatGroup &G, VectorCode u, VectorCode w) {
  std::vector<std::pair<VectorCode, VectorCode>> images;
  for (const auto &g : G.elements()) images.emplace_back(g.act(u), g.act(w));
  std::sort(images.begin(), images.end());
  return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

namespace detail {

// Row-echelon subspace of F_p^d used for spinning.
class Subspace {
public:
  Subspace(unsigned p, unsigned dim) : p_(p), dim_(dim) {}

  // Adds v; returns true iff it enlarged the span.
  bool add(std::vector<unsigned> v) {
    for (const auto &[pivot, row] : rows_) {
      const unsigned f = v[pivot];
      if (f == 0) continue;
      for (unsigned j = 0; j < dim_; ++j) v[j] = (v[j] + (p_ - f) * row[j]) % p_;
    }
    unsigned pivot = 0;
    while (pivot < dim_ && v[pivot] == 0) ++pivot;
    if (pivot == dim_) return false;
    const unsigned inv = inverse(v[pivot]);
    for (auto &x : v) x = x * inv % p_;
    for (auto &[piv, row] : rows_) {
      const unsigned f = row[pivot];
      if (f == 0) continue;
      for (unsigned j = 0; j < dim_; ++j) row[j] = (row[j] + (p_ - f) * v[j]) % p_;
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }
  unsigned dimension() const { return static_cast<unsigned>(rows_.size()); }

private:
  unsigned inverse(unsigned a) const {
    for (unsigned x = 1; x < p_; ++x)
      if (a * x % p_ == 1) return x;
    return 0;
  }
  unsigned p_;
  unsigned dim_;
  std::vector<std::pair<unsigned, std::vector<unsigned>>> rows_;
};

} // namespace detail

/// Dimension of the smallest G-invariant subspace containing v.
inline unsigned spin_dimension(const MatGroup &G, VectorCode v) {
  const VectorSpace V = G.space();
  detail::Subspace span(G.p(), G.dim());
  std::vector<VectorCode> queue;
  if (span.add(V.decode(v))) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size() && span.dimension() < G.dim(); ++head)
    for (const auto &g : G.generators()) {
      const VectorCode w = g.act(queue[head]);
      if (span.add(V.decode(w))) queue.push_back(w);
    }
  return span.dimension();
}

/// True iff every nonzero vector spins to the whole space.
inline bool is_irreducible(const MatGroup &G) {
  const VectorCode n = G.space().size();
  for (VectorCode v = 1; v < n; ++v)
    if (spin_dimension(G, v) < G.dim()) return false;
  return true;
}

/// |GL(dim, p)|.
inline BigNat gl_order(unsigned p, unsigned dim) {
  const BigNat q = p;
  const BigNat qn = ipow(q, dim);
  BigNat out = 1;
  BigNat qi = 1;
  for (unsigned i = 0; i < dim; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

/// Components of a module of possibly mixed characteristic, acted on
/// componentwise by the external direct product of the groups. Centralizers
/// factor: C(v_1 + ... + v_r) = C(v_1) x ... x C(v_r).
struct MixedModule {
  std::vector<const MatGroup *> components;

  BigNat group_order() const {
    BigNat o = 1;
    for (auto *G : components) o *= G->order();
    return o;
  }
  BigNat module_size() const {
    BigNat s = 1;
    for (auto *G : components) s *= G->space().size();
    return s;
  }
  BigNat min_centralizer_order() const {
    BigNat c = 1;
    for (auto *G : components) c *= min_stabilizer_order(*G);
    return c;
  }
  /// Vector (one per component) minimising the centralizer, if it is small enough.
  std::optional<std::pair<std::vector<VectorCode>, BigNat>> witness(CentralizerExponent e) const {
    std::vector<VectorCode> v;
    for (auto *G : components) {
      std::size_t best = 0;
      VectorCode rep = 0;
      for (const auto &o : orbits(*G))
        if (o.size > best) {
          best = o.size;
          rep = o.representative;
        }
      v.push_back(rep);
    }
    const BigNat c = min_centralizer_order();
    if (!centralizer_small_enough(c, group_order(), e)) return std::nullopt;
    return std::make_pair(v, c);
  }
};

} // namespace chardeg
