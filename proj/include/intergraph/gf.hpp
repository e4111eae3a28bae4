#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace intergraph::gf {

class Field;

/// Element of a finite field GF(p^k), identified by its index in the
/// field's canonical enumeration. The base-p digits of the index are the
/// polynomial coefficients of the element, degree-(k-1) digit most
/// significant, so ascending index equals lexicographic coefficient order.
struct Element {
  uint32_t idx = 0;
  const Field* field = nullptr;

  bool is_zero() const { return idx == 0; }

  Element frobenius() const;
  Element norm() const;
  Element trace() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.field == b.field && a.idx == b.idx;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

Element operator+(Element a, Element b);
Element operator-(Element a, Element b);
Element operator-(Element a);
Element operator*(Element a, Element b);
Element inv(Element a);
Element pow(Element a, int64_t e);

/// GF(p^k) with exact table-backed arithmetic.
///
/// The modulus is the lexicographically smallest monic irreducible
/// polynomial of degree k over GF(p); omega is the smallest element (in
/// index order) of full multiplicative order p^k - 1. Both choices are
/// verified at construction. Immutable once built.
class Field {
 public:
  static constexpr uint64_t kDefaultCap = 1u << 20;

  static std::shared_ptr<const Field> make(uint32_t p, uint32_t k,
                                           uint64_t cap = kDefaultCap);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t size() const { return size_; }

  /// Modulus coefficients, ascending degree, length k+1, monic.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return {0, this}; }
  Element one() const { return element_from_int(1); }
  Element omega() const { return {omega_, this}; }
  Element element(uint32_t idx) const;
  /// Embeds an integer via reduction mod p (constant polynomial).
  Element element_from_int(uint64_t v) const { return {uint32_t(v % p_), this}; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inverse(uint32_t a) const;
  uint32_t power(uint32_t a, int64_t e) const;

  /// Multiplicative order of a nonzero element.
  uint64_t element_order(uint32_t a) const;

  // --- quadratic-extension structure GF(q^2)/GF(q), q = p^(k/2) ---

  bool is_quadratic() const { return k_ % 2 == 0; }
  /// Subfield size q; throws unless the field is a quadratic extension.
  uint64_t q() const;

  /// a |-> a^q.
  uint32_t frobenius(uint32_t a) const;
  /// a |-> a^(q+1), lands in GF(q).
  uint32_t norm(uint32_t a) const;
  /// a |-> a + a^q, lands in GF(q).
  uint32_t trace(uint32_t a) const;
  /// Membership in the subfield GF(q), i.e. fixed by frobenius.
  bool in_subfield(uint32_t a) const;

  /// omega^(q-1); has multiplicative order exactly q+1. Requires q > 2.
  Element lambda() const;

  /// Smallest element (index order for q <= 64, kernel-coset order above)
  /// with trace equal to c, avoiding `excluded`. c must lie in GF(q) and
  /// |excluded| < q - 1.
  Element solve_trace(Element c, const std::vector<Element>& excluded) const;

  std::string describe_element(uint32_t idx) const;

 private:
  Field() = default;

  uint32_t p_ = 0;
  uint32_t k_ = 0;
  uint64_t size_ = 0;
  std::vector<uint32_t> modulus_;
  uint32_t omega_ = 0;

  // exp_[i] = omega^i for 0 <= i < size-1; log_[exp_[i]] = i.
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;

  void check_same(const Field* other) const;
  std::vector<uint32_t> digits(uint32_t idx) const;
  uint32_t from_digits(const std::vector<uint32_t>& d) const;

  friend Element operator+(Element, Element);
  friend Element operator*(Element, Element);
};

}  // namespace intergraph::gf
