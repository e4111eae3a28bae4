#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace intergraph {

/// Fixed-width dynamic bitset used for subgroup element sets and graph
/// adjacency rows. All binary operations require equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint32_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  uint32_t size() const { return n_; }

  void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t x : w_) c += uint32_t(std::popcount(x));
    return c;
  }

  bool none() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  Bitset& operator&=(const Bitset& o) {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  /// popcount(*this & o) without allocating.
  uint32_t count_and(const Bitset& o) const {
    check(o);
    uint32_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += uint32_t(std::popcount(w_[i] & o.w_[i]));
    return c;
  }

  /// True iff *this & o has a set bit other than `ignore`.
  bool intersects_beyond(const Bitset& o, uint32_t ignore) const {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i] & o.w_[i];
      if ((ignore >> 6) == i) x &= ~(uint64_t(1) << (ignore & 63));
      if (x) return true;
    }
    return false;
  }

  /// True iff every set bit of *this is set in o.
  bool subset_of(const Bitset& o) const {
    check(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  /// Index of the lowest set bit, or -1.
  int64_t find_first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int64_t(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  std::vector<uint32_t> to_indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        out.push_back(uint32_t(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  size_t hash() const {
    size_t h = std::hash<uint32_t>{}(n_);
    for (uint64_t x : w_) h = h * 1099511628211ull ^ std::hash<uint64_t>{}(x);
    return h;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  void check(const Bitset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("bitset width mismatch");
  }

  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace intergraph
