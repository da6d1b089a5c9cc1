#pragma once

// Enumerated abstract finite groups. Elements are indexed 0..|G|-1 with the
// identity at 0; multiplication is by index and goes through the concrete
// element representation (matrix, affine pair, permutation, or a pair of
// indices for direct products).

#include "chardeg/matgroups.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace chardeg {

/// Element (h, v) of the split extension H V with the right-action product
/// (h1, v1)(h2, v2) = (h1 h2, v1 h2 + v2).
class AffineElement {
public:
  AffineElement(FpMatrix h, VectorCode v) : h_(std::move(h)), v_(v) {}

  const FpMatrix &linear() const { return h_; }
  VectorCode translation() const { return v_; }

  AffineElement operator*(const AffineElement &rhs) const {
    return {h_ * rhs.h_, add(rhs.h_.act(v_), rhs.v_)};
  }
  AffineElement inverse() const {
    FpMatrix hinv = h_.inverse();
    return {hinv, negate(hinv.act(v_))};
  }
  std::uint64_t key() const {
    return h_.key() * checked_power(h_.p(), h_.dim()) + v_;
  }
  std::string to_string() const { return "(" + h_.to_string() + ", v=" + std::to_string(v_) + ")"; }

  VectorCode add(VectorCode a, VectorCode b) const { return combine(a, b, false); }
  VectorCode negate(VectorCode a) const { return combine(0, a, true); }

private:
  VectorCode combine(VectorCode a, VectorCode b, bool subtract) const {
    const unsigned p = h_.p();
    VectorCode out = 0, scale = 1;
    for (unsigned i = 0; i < h_.dim(); ++i) {
      const unsigned x = a % p, y = b % p;
      out += ((subtract ? x + p - y : x + y) % p) * scale;
      scale *= p;
      a /= p;
      b /= p;
    }
    return out;
  }

  FpMatrix h_;
  VectorCode v_;
};

/// Same split extension built with column vectors and the left action:
/// (h1, v1)(h2, v2) = (h1 h2, h1 v2 + v1). Only used to confirm that class
/// counts do not depend on the side of the action.
class AffineElementLeft {
public:
  AffineElementLeft(FpMatrix h, VectorCode v) : h_(std::move(h)), v_(v) {}
  AffineElementLeft operator*(const AffineElementLeft &rhs) const {
    return {h_ * rhs.h_, AffineElement(h_, 0).add(h_.act_left(rhs.v_), v_)};
  }
  AffineElementLeft inverse() const {
    FpMatrix hinv = h_.inverse();
    return {hinv, AffineElement(h_, 0).negate(hinv.act_left(v_))};
  }
  std::uint64_t key() const { return h_.key() * checked_power(h_.p(), h_.dim()) + v_; }
  std::string to_string() const { return "(" + h_.to_string() + ", v=" + std::to_string(v_) + ")"; }

private:
  FpMatrix h_;
  VectorCode v_;
};

/// Permutation of {0..n-1}; the product a*b applies a first, then b.
class Permutation {
public:
  explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x]) throw InputError("not a permutation");
      hit[x] = true;
    }
  }
  static Permutation identity(std::size_t n) {
    std::vector<std::uint8_t> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(im));
  }
  /// Builds from 1-based disjoint cycles on {1..n}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>> &cycles) {
    auto p = identity(n);
    for (const auto &c : cycles)
      for (int x : c)
        if (x < 1 || static_cast<std::size_t>(x) > n)
          throw InputError("cycle point " + std::to_string(x) + " outside 1.." + std::to_string(n));
    for (const auto &c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i)
        p.images_[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
    return Permutation(p.images_);
  }

  std::size_t degree() const { return images_.size(); }
  unsigned image(unsigned x) const { return images_[x]; }

  Permutation operator*(const Permutation &rhs) const {
    std::vector<std::uint8_t> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = rhs.images_[images_[i]];
    return Permutation(std::move(im), 0);
  }
  Permutation inverse() const {
    std::vector<std::uint8_t> im(images_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[images_[i]] = static_cast<std::uint8_t>(i);
    return Permutation(std::move(im), 0);
  }
  std::uint64_t key() const {
    std::uint64_t k = 0;
    const std::uint64_t n = images_.size();
    for (auto x : images_) k = k * n + x;
    return k;
  }
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i)
      out += (i ? "," : "") + std::to_string(images_[i] + 1);
    return out + "]";
  }

private:
  Permutation(std::vector<std::uint8_t> images, int) : images_(std::move(images)) {}
  std::vector<std::uint8_t> images_;
};

enum class GroupOrigin { Matrix, Affine, Permutation, Product };

class FiniteGroupTable {
public:
  using Index = std::uint32_t;

  /// Enumerates <generators> by breadth-first right multiplication.
  template <class E>
  static FiniteGroupTable from_generators(const E &identity, const std::vector<E> &generators,
                                          GroupOrigin origin, std::size_t cap = kDefaultElementCap) {
    auto backend = std::make_shared<ElementBackend<E>>();
    backend->add(identity);
    std::vector<std::uint64_t> gen_keys;
    for (const auto &g : generators) gen_keys.push_back(g.key());
    for (std::size_t head = 0; head < backend->elements.size(); ++head)
      for (const auto &g : generators) {
        E next = backend->elements[head] * g;
        if (backend->index.count(next.key())) continue;
        if (backend->elements.size() >= cap)
          throw OverflowError("group enumeration exceeded cap of " + std::to_string(cap));
        backend->add(std::move(next));
      }
    FiniteGroupTable G;
    G.origin_ = origin;
    G.backend_ = backend;
    for (auto k : gen_keys) G.generators_.push_back(backend->index.at(k));
    G.inverse_.resize(backend->elements.size());
    for (Index i = 0; i < G.inverse_.size(); ++i)
      G.inverse_[i] = backend->index.at(backend->elements[i].inverse().key());
    return G;
  }

  /// External direct product A x B, indexed a * |B| + b.
  static FiniteGroupTable direct_product(const FiniteGroupTable &a, const FiniteGroupTable &b);

  Index order() const { return static_cast<Index>(inverse_.size()); }
  Index identity() const { return 0; }
  Index multiply(Index a, Index b) const { return backend_->multiply(a, b); }
  Index inverse(Index a) const { return inverse_[a]; }
  /// g^-1 x g
  Index conjugate(Index x, Index g) const { return multiply(multiply(inverse_[g], x), g); }
  const std::vector<Index> &generators() const { return generators_; }
  std::string describe(Index a) const { return backend_->describe(a); }
  GroupOrigin origin() const { return origin_; }

  GroupMetadata &metadata() { return metadata_; }
  const GroupMetadata &metadata() const { return metadata_; }

  /// For affine groups H V: the characteristic and |V|.
  unsigned translation_prime() const { return translation_prime_; }
  BigNat translation_size() const { return translation_size_; }
  void set_translation_module(unsigned p, BigNat size) {
    translation_prime_ = p;
    translation_size_ = std::move(size);
  }

private:
  struct Backend {
    virtual ~Backend() = default;
    virtual Index multiply(Index a, Index b) const = 0;
    virtual std::string describe(Index a) const = 0;
  };

  template <class E> struct ElementBackend : Backend {
    std::vector<E> elements;
    std::unordered_map<std::uint64_t, Index> index;

    void add(E e) {
      index.emplace(e.key(), static_cast<Index>(elements.size()));
      elements.push_back(std::move(e));
    }
    Index multiply(Index a, Index b) const override {
      auto it = index.find((elements[a] * elements[b]).key());
      if (it == index.end()) throw InvariantViolation("element set is not closed");
      return it->second;
    }
    std::string describe(Index a) const override { return elements[a].to_string(); }
  };

  struct ProductBackend;

  GroupOrigin origin_ = GroupOrigin::Matrix;
  std::shared_ptr<const Backend> backend_;
  std::vector<Index> generators_;
  std::vector<Index> inverse_;
  GroupMetadata metadata_;
  unsigned translation_prime_ = 0;
  BigNat translation_size_ = 1;
};

struct FiniteGroupTable::ProductBackend : Backend {
  ProductBackend(FiniteGroupTable a, FiniteGroupTable b) : left(std::move(a)), right(std::move(b)) {}
  FiniteGroupTable left, right;
  Index multiply(Index x, Index y) const override {
    const Index nb = right.order();
    return left.multiply(x / nb, y / nb) * nb + right.multiply(x % nb, y % nb);
  }
  std::string describe(Index x) const override {
    const Index nb = right.order();
    return "(" + left.describe(x / nb) + ", " + right.describe(x % nb) + ")";
  }
};

inline FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable &a, const FiniteGroupTable &b) {
  FiniteGroupTable G;
  G.origin_ = GroupOrigin::Product;
  G.backend_ = std::make_shared<ProductBackend>(a, b);
  const Index nb = b.order();
  for (auto g : a.generators_) G.generators_.push_back(g * nb);
  for (auto h : b.generators_) G.generators_.push_back(h);
  G.inverse_.resize(static_cast<std::size_t>(a.order()) * nb);
  for (Index i = 0; i < G.inverse_.size(); ++i)
    G.inverse_[i] = a.inverse(i / nb) * nb + b.inverse(i % nb);
  return G;
}

inline FiniteGroupTable as_table(const MatGroup &G, std::size_t cap = kDefaultElementCap) {
  auto T = FiniteGroupTable::from_generators(FpMatrix::identity(G.p(), G.dim()), G.generators(),
                                             GroupOrigin::Matrix, cap);
  T.metadata() = G.metadata();
  return T;
}

/// The split extension H V of H <= GL(V) by its natural module V.
inline FiniteGroupTable affine_group(const MatGroup &H, std::size_t cap = kDefaultElementCap) {
  const VectorSpace V = H.space();
  if (BigNat(H.order()) * V.size() > cap)
    throw OverflowError("affine group order " + (BigNat(H.order()) * V.size()).str() +
                        " exceeds cap " + std::to_string(cap));
  const FpMatrix id = FpMatrix::identity(H.p(), H.dim());
  std::vector<AffineElement> gens;
  for (const auto &h : H.generators()) gens.emplace_back(h, 0);
  for (unsigned i = 0; i < H.dim(); ++i) {
    std::vector<unsigned> e(H.dim(), 0);
    e[i] = 1;
    gens.emplace_back(id, V.encode(e));
  }
  auto T = FiniteGroupTable::from_generators(AffineElement(id, 0), gens, GroupOrigin::Affine, cap);
  T.set_translation_module(H.p(), V.size());
  return T;
}

/// Left-action construction of the same group (see AffineElementLeft).
inline FiniteGroupTable affine_group_left_action(const MatGroup &H, std::size_t cap = kDefaultElementCap) {
  const VectorSpace V = H.space();
  const FpMatrix id = FpMatrix::identity(H.p(), H.dim());
  std::vector<AffineElementLeft> gens;
  for (const auto &h : H.generators()) gens.emplace_back(h, 0);
  for (unsigned i = 0; i < H.dim(); ++i) {
    std::vector<unsigned> e(H.dim(), 0);
    e[i] = 1;
    gens.emplace_back(id, V.encode(e));
  }
  auto T = FiniteGroupTable::from_generators(AffineElementLeft(id, 0), gens, GroupOrigin::Affine, cap);
  T.set_translation_module(H.p(), V.size());
  return T;
}

inline FiniteGroupTable permutation_group(const std::vector<Permutation> &generators,
                                          std::size_t cap = kDefaultElementCap) {
  if (generators.empty()) throw InputError("permutation_group: need at least one generator");
  return FiniteGroupTable::from_generators(Permutation::identity(generators.front().degree()),
                                           generators, GroupOrigin::Permutation, cap);
}

} // namespace chardeg
