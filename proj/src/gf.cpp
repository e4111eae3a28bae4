#include "intergraph/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace intergraph::gf {

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(p): coefficient vectors, ascending degree, trimmed.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  // m monic
  while (a.size() >= m.size()) {
    uint32_t c = a.back();
    size_t shift = a.size() - m.size();
    if (c != 0) {
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t v = a[shift + i] + uint64_t(p - 1) * c % p * m[i];
        a[shift + i] = uint32_t(v % p);
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& m, uint32_t p) {
  Poly r = {1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  auto inv_mod_p = [p](uint32_t c) {
    // extended Euclid in GF(p)
    int64_t t = 0, nt = 1, r = p, nr = c;
    while (nr != 0) {
      int64_t qq = r / nr;
      std::swap(t -= qq * nt, nt);
      std::swap(r -= qq * nr, nr);
    }
    return uint32_t((t % p + p) % p);
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b, with b scaled monic first
    Poly bm = b;
    uint32_t lead_inv = inv_mod_p(bm.back());
    for (auto& c : bm) c = uint32_t(uint64_t(c) * lead_inv % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// f monic of degree k is irreducible iff gcd(x^(p^d) - x, f) is constant
// for every d <= k/2.
bool is_irreducible(const Poly& f, uint32_t p, uint32_t k) {
  if (k == 1) return true;
  Poly x = {0, 1};
  Poly t = x;  // x^(p^d) mod f, built by iterated p-th powers
  for (uint32_t d = 1; d <= k / 2; ++d) {
    t = poly_powmod(std::move(t), p, f, p);
    Poly diff = t;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = uint32_t((diff[1] + p - 1) % p);
    trim(diff);
    Poly g = poly_gcd(diff, f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t k, uint64_t cap) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (k == 0) throw std::invalid_argument("field degree must be positive");
  uint64_t size = 1;
  for (uint32_t i = 0; i < k; ++i) {
    size *= p;
    if (size > cap)
      throw std::invalid_argument("field size p^k exceeds cap " + std::to_string(cap));
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->size_ = size;

  // Lexicographically smallest monic irreducible modulus of degree k:
  // candidates ordered by the index encoding of the non-leading
  // coefficients (degree-(k-1) digit most significant).
  for (uint64_t m = 0;; ++m) {
    if (m >= size) throw std::logic_error("no irreducible modulus found");
    Poly cand(k + 1, 0);
    uint64_t v = m;
    for (uint32_t i = 0; i < k; ++i) {
      cand[i] = uint32_t(v % p);
      v /= p;
    }
    cand[k] = 1;
    if (is_irreducible(cand, p, k)) {
      f->modulus_ = cand;
      break;
    }
  }

  // Smallest primitive element, orders checked against the factorization
  // of p^k - 1.
  uint64_t n1 = size - 1;
  auto factors = prime_factors(n1);
  const Poly& mod = f->modulus_;
  uint32_t omega = 0;
  for (uint32_t a = 1; a < size; ++a) {
    Poly pa;
    uint32_t v = a;
    while (v) {
      pa.push_back(v % p);
      v /= p;
    }
    bool primitive = true;
    for (uint64_t r : factors) {
      Poly t = poly_powmod(pa, n1 / r, mod, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega = a;
      break;
    }
  }
  if (omega == 0 && n1 > 1) throw std::logic_error("no primitive element found; modulus bug");
  if (n1 == 1) omega = 1;
  f->omega_ = omega;

  // exp/log tables; verifies omega really has order size-1.
  f->exp_.assign(n1, 0);
  f->log_.assign(size, 0);
  std::vector<char> seen(size, 0);
  Poly cur = {1};
  Poly pomega;
  {
    uint32_t v = omega;
    while (v) {
      pomega.push_back(v % p);
      v /= p;
    }
  }
  for (uint64_t i = 0; i < n1; ++i) {
    uint32_t idx = 0;
    for (size_t j = cur.size(); j-- > 0;) idx = uint32_t(idx * p + cur[j]);
    if (idx == 0 || seen[idx]) throw std::logic_error("primitive element cycle defect; modulus bug");
    seen[idx] = 1;
    f->exp_[i] = idx;
    f->log_[idx] = uint32_t(i);
    cur = poly_mulmod(cur, pomega, mod, p);
  }
  return f;
}

void Field::check_same(const Field* other) const {
  if (other != this) throw std::invalid_argument("mixed-field operands");
}

Element Field::element(uint32_t idx) const {
  if (idx >= size_) throw std::out_of_range("element index out of range");
  return {idx, this};
}

std::vector<uint32_t> Field::digits(uint32_t idx) const {
  std::vector<uint32_t> d(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = idx % p_;
    idx /= p_;
  }
  return d;
}

uint32_t Field::from_digits(const std::vector<uint32_t>& d) const {
  uint32_t idx = 0;
  for (size_t j = d.size(); j-- > 0;) idx = uint32_t(idx * p_ + d[j]);
  return idx;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  uint32_t out = 0;
  uint32_t mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t Field::neg(uint32_t a) const {
  uint32_t out = 0;
  uint32_t mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  uint64_t n1 = size_ - 1;
  return exp_[(uint64_t(log_[a]) + log_[b]) % n1];
}

uint32_t Field::inverse(uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  uint64_t n1 = size_ - 1;
  return exp_[(n1 - log_[a]) % n1];
}

uint32_t Field::power(uint32_t a, int64_t e) const {
  if (a == 0) {
    if (e == 0) return exp_.empty() ? 1 : exp_[0];
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  int64_t n1 = int64_t(size_ - 1);
  int64_t r = (int64_t(log_[a]) * (e % n1)) % n1;
  if (r < 0) r += n1;
  return exp_[r];
}

uint64_t Field::element_order(uint32_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  uint64_t n1 = size_ - 1;
  return n1 / std::gcd<uint64_t>(n1, log_[a]);
}

uint64_t Field::q() const {
  if (!is_quadratic()) throw std::domain_error("field is not a quadratic extension");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_ / 2; ++i) q *= p_;
  return q;
}

uint32_t Field::frobenius(uint32_t a) const { return power(a, int64_t(q())); }

uint32_t Field::norm(uint32_t a) const { return mul(a, frobenius(a)); }

uint32_t Field::trace(uint32_t a) const { return add(a, frobenius(a)); }

bool Field::in_subfield(uint32_t a) const { return frobenius(a) == a; }

Element Field::lambda() const {
  uint64_t qq = q();
  if (qq <= 2) throw std::domain_error("lambda requires q > 2");
  return {power(omega_, int64_t(qq - 1)), this};
}

Element Field::solve_trace(Element c, const std::vector<Element>& excluded) const {
  check_same(c.field);
  uint64_t qq = q();
  if (!in_subfield(c.idx)) throw std::invalid_argument("trace target not in the base subfield");
  if (excluded.size() >= qq - 1)
    throw std::invalid_argument("excluded set too large for a guaranteed solution");
  auto is_excluded = [&](uint32_t idx) {
    for (const auto& e : excluded) {
      check_same(e.field);
      if (e.idx == idx) return true;
    }
    return false;
  };

  if (qq <= 64) {
    for (uint32_t a = 0; a < size_; ++a)
      if (trace(a) == c.idx && !is_excluded(a)) return {a, this};
    throw std::logic_error("trace fiber scan failed");
  }

  // GF(p)-linear solve on the coefficient basis: trace matrix column j is
  // trace(x^j). One particular solution plus the trace kernel, enumerated
  // in lexicographic coefficient order.
  uint32_t n = k_;
  std::vector<std::vector<uint32_t>> A(n, std::vector<uint32_t>(n + 1, 0));
  for (uint32_t j = 0; j < n; ++j) {
    uint32_t basis = 1;
    for (uint32_t i = 0; i < j; ++i) basis *= p_;
    auto col = digits(trace(basis));
    for (uint32_t i = 0; i < n; ++i) A[i][j] = col[i];
  }
  auto rhs = digits(c.idx);
  for (uint32_t i = 0; i < n; ++i) A[i][n] = rhs[i];

  auto inv_mod_p = [this](uint32_t v) {
    int64_t t = 0, nt = 1, r = p_, nr = v;
    while (nr != 0) {
      int64_t qq2 = r / nr;
      std::swap(t -= qq2 * nt, nt);
      std::swap(r -= qq2 * nr, nr);
    }
    return uint32_t((t % p_ + p_) % p_);
  };

  // Gaussian elimination to reduced row echelon form.
  std::vector<int> pivot_col(n, -1);
  uint32_t row = 0;
  for (uint32_t col = 0; col < n && row < n; ++col) {
    uint32_t sel = row;
    while (sel < n && A[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(A[sel], A[row]);
    uint32_t piv_inv = inv_mod_p(A[row][col]);
    for (uint32_t j = col; j <= n; ++j) A[row][j] = uint32_t(uint64_t(A[row][j]) * piv_inv % p_);
    for (uint32_t i = 0; i < n; ++i) {
      if (i == row || A[i][col] == 0) continue;
      uint32_t fct = A[i][col];
      for (uint32_t j = col; j <= n; ++j)
        A[i][j] = uint32_t((A[i][j] + uint64_t(p_ - fct) * A[row][j]) % p_);
    }
    pivot_col[row] = int(col);
    ++row;
  }
  for (uint32_t i = row; i < n; ++i)
    if (A[i][n] != 0) throw std::logic_error("trace equation inconsistent");

  std::vector<uint32_t> x0(n, 0);
  for (uint32_t i = 0; i < row; ++i) x0[pivot_col[i]] = A[i][n];

  std::vector<char> is_pivot(n, 0);
  for (uint32_t i = 0; i < row; ++i) is_pivot[pivot_col[i]] = 1;
  std::vector<uint32_t> free_cols;
  for (uint32_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  std::vector<std::vector<uint32_t>> kernel;
  for (uint32_t fc : free_cols) {
    std::vector<uint32_t> v(n, 0);
    v[fc] = 1;
    for (uint32_t i = 0; i < row; ++i)
      v[pivot_col[i]] = uint32_t((p_ - A[i][fc]) % p_);
    kernel.push_back(std::move(v));
  }

  // Enumerate kernel combinations as a base-p counter.
  std::vector<uint32_t> coeff(kernel.size(), 0);
  while (true) {
    std::vector<uint32_t> cand = x0;
    for (size_t t = 0; t < kernel.size(); ++t) {
      if (coeff[t] == 0) continue;
      for (uint32_t i = 0; i < n; ++i)
        cand[i] = uint32_t((cand[i] + uint64_t(coeff[t]) * kernel[t][i]) % p_);
    }
    uint32_t idx = from_digits(cand);
    if (!is_excluded(idx)) {
      if (trace(idx) != c.idx) throw std::logic_error("trace solve produced a wrong fiber");
      return {idx, this};
    }
    size_t t = 0;
    while (t < coeff.size() && ++coeff[t] == p_) coeff[t++] = 0;
    if (t == coeff.size()) throw std::logic_error("trace coset exhausted");
  }
}

std::string Field::describe_element(uint32_t idx) const {
  auto d = digits(idx);
  std::string s = "[";
  for (uint32_t i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

Element Element::frobenius() const { return {field->frobenius(idx), field}; }
Element Element::norm() const { return {field->norm(idx), field}; }
Element Element::trace() const { return {field->trace(idx), field}; }

namespace {
const Field* common_field(const Element& a, const Element& b) {
  if (a.field == nullptr || b.field == nullptr) throw std::invalid_argument("unbound element");
  if (a.field != b.field) throw std::invalid_argument("mixed-field operands");
  return a.field;
}
}  // namespace

Element operator+(Element a, Element b) {
  const Field* f = common_field(a, b);
  return {f->add(a.idx, b.idx), f};
}
Element operator-(Element a, Element b) {
  const Field* f = common_field(a, b);
  return {f->sub(a.idx, b.idx), f};
}
Element operator-(Element a) { return {a.field->neg(a.idx), a.field}; }
Element operator*(Element a, Element b) {
  const Field* f = common_field(a, b);
  return {f->mul(a.idx, b.idx), f};
}
Element inv(Element a) { return {a.field->inverse(a.idx), a.field}; }
Element pow(Element a, int64_t e) { return {a.field->power(a.idx, e), a.field}; }

}  // namespace intergraph::gf
