#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace intergraph::permgrp {

/// Permutation of {0..n-1} as an image array.
using Perm = std::vector<uint16_t>;

/// Thrown when a generation or lattice cap is exceeded; `reached` records
/// how far the computation got.
struct CapExceeded : std::runtime_error {
  CapExceeded(const std::string& what, uint64_t reached_)
      : std::runtime_error(what), reached(reached_) {}
  uint64_t reached;
};

Perm identity_perm(uint32_t degree);
/// compose(a, b) applies a first, then b: (a*b)(x) = b(a(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& a);
bool is_identity(const Perm& a);

/// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
/// Empty input or "()" denotes the identity. Points must lie in 1..degree
/// and may not repeat within one literal.
Perm parse_cycles(const std::string& text, uint32_t degree);

/// Disjoint-cycle rendering with 1-based points; identity renders as "()".
std::string cycle_string(const Perm& a);

/// Order of a permutation (lcm of cycle lengths).
uint64_t perm_order(const Perm& a);

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : p) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

/// Finite permutation group with its element set materialized. Elements
/// are sorted lexicographically by image array, so index 0 is always the
/// identity. Immutable after generate().
class Group {
 public:
  static constexpr uint64_t kDefaultOrderCap = 20000;
  // Full multiplication table kept when order <= this (memory: order^2 * 2B).
  static constexpr uint64_t kCayleyCap = 8192;

  static Group generate(uint32_t degree, std::vector<Perm> gens,
                        uint64_t cap = kDefaultOrderCap);

  uint32_t degree() const { return degree_; }
  uint64_t order() const { return elems_.size(); }
  const std::vector<Perm>& elements() const { return elems_; }
  const Perm& element(uint32_t i) const { return elems_[i]; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<uint32_t>& generator_indices() const { return gen_idx_; }

  /// Index of a permutation; throws std::invalid_argument if absent.
  uint32_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  /// Index arithmetic: mul applies a first, then b.
  uint32_t mul(uint32_t a, uint32_t b) const {
    return cayley_.empty() ? index_.at(compose(elems_[a], elems_[b]))
                           : cayley_[size_t(a) * elems_.size() + b];
  }
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  /// g^{-1} a g.
  uint32_t conj(uint32_t a, uint32_t g) const { return mul(mul(inv_[g], a), g); }
  uint64_t element_order(uint32_t a) const { return perm_order(elems_[a]); }

 private:
  Group() = default;

  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<uint32_t> gen_idx_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, uint32_t, PermHash> index_;
  std::vector<uint32_t> inv_;
  std::vector<uint16_t> cayley_;  // empty above kCayleyCap
};

}  // namespace intergraph::permgrp
