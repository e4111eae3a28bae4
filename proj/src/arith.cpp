#include "intergraph/arith.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace intergraph::arith {

namespace {

using nlohmann::json;

BigInt parse_big(const json& j, const std::string& what) {
  if (!j.is_string()) throw std::runtime_error(what + ": values must be decimal strings");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error(what + ": not a decimal integer: " + s);
  return BigInt(s);
}

BigInt factored_product(const json& factors, const std::string& what) {
  BigInt v = 1;
  for (const auto& f : factors) {
    if (!f.is_array() || f.size() != 2) throw std::runtime_error(what + ": bad factor entry");
    uint64_t p = f[0].get<uint64_t>(), e = f[1].get<uint64_t>();
    for (uint64_t i = 0; i < e; ++i) v *= p;
  }
  return v;
}

bool divides(const BigInt& d, const BigInt& n) { return n % d == 0; }

}  // namespace

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0)
    throw std::domain_error("division is not exact: " + a.str() + " / " + b.str());
  return a / b;
}

AtlasConstants load_atlasconstants_impl(const json& root) {
  AtlasConstants c;
  for (const auto& entry : root.at("orders")) {
    const std::string name = entry.at("name").get<std::string>();
    BigInt value = parse_big(entry.at("value"), name);
    if (factored_product(entry.at("factors"), name) != value)
      throw std::runtime_error("factorization of " + name + " does not reproduce its value");
    if (value <= 0) throw std::runtime_error(name + ": order must be positive");
    if (name == "B")
      c.B = value;
    else if (name == "Fi23")
      c.Fi23 = value;
    else if (name == "Co2")
      c.Co2 = value;
    else if (name == "M23")
      c.M23 = value;
    else if (name == "M22")
      c.M22 = value;
    else
      throw std::runtime_error("unknown order name: " + name);
  }
  for (const BigInt* v : {&c.B, &c.Fi23, &c.Co2, &c.M23, &c.M22})
    if (*v == 0) throw std::runtime_error("constants file is missing a required order");

  for (const auto& m : root.at("m23_maximals")) {
    AtlasConstants::Maximal row;
    row.name = m.at("name").get<std::string>();
    row.order = parse_big(m.at("order"), row.name);
    c.m23_maximals.push_back(std::move(row));
  }
  if (c.m23_maximals.empty()) throw std::runtime_error("no M23 maximal subgroups listed");

  const auto& bm = root.at("bm_structure");
  auto field = [&](const char* key) { return parse_big(bm.at(key).at("value"), key); };
  c.m1_order = field("M1_order");
  c.ng_h = field("NG_H");
  c.nk_h = field("NK_H");
  c.nl_h = field("NL_H");
  c.nm1_h = field("NM1_H");
  c.index_factor = field("index_factor");
  c.h_order = field("H_order");
  c.s_order = field("S_order");
  c.l_2_part = field("L_2_part");

  // Divisibility invariants: fail loudly at load, before any check runs.
  if (!divides(c.m1_order, c.B)) throw std::runtime_error("invariant: M1 order must divide |B|");
  if (!divides(c.nk_h, c.Fi23)) throw std::runtime_error("invariant: N_K(H) must divide |Fi23|");
  if (!divides(c.l_2_part * c.Co2, c.B))
    throw std::runtime_error("invariant: 2^23 * |Co2| must divide |B|");
  for (const auto& m : c.m23_maximals)
    if (!divides(m.order, c.M23))
      throw std::runtime_error("invariant: maximal order " + m.order.str() +
                               " must divide |M23|");
  if (c.ng_h != c.nm1_h * c.index_factor)
    throw std::runtime_error("invariant: N_G(H) = N_{M1}(H) * 22 violated");
  if (c.ng_h != 2 * c.nk_h) throw std::runtime_error("invariant: N_G(H) = 2 N_K(H) violated");
  if (c.m1_order != c.s_order * c.h_order)
    throw std::runtime_error("invariant: |M1| = 47 * 23 violated");
  BigInt two23 = 1;
  for (int i = 0; i < 23; ++i) two23 *= 2;
  if (c.l_2_part != two23) throw std::runtime_error("invariant: L 2-part must be 2^23");
  return c;
}

AtlasConstants load_atlas_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open constants file: " + path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("constants file is not valid JSON: " + std::string(e.what()));
  }
  try {
    return load_atlasconstants_impl(root);
  } catch (const json::exception& e) {
    throw std::runtime_error("constants file is malformed: " + std::string(e.what()));
  }
}

std::vector<uint64_t> prime_powers(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (uint64_t p = 2; p <= hi; ++p) {
    if (composite[p]) continue;
    for (uint64_t m = p * p; m <= hi; m += p) composite[m] = true;
    for (uint64_t pk = p; pk <= hi; pk *= p) {
      if (pk >= lo) out.push_back(pk);
      if (pk > hi / p) break;  // overflow guard
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt un_order(uint32_t n, uint64_t q) {
  if (n != 3 && n != 5 && n != 7 && n != 11 && n != 13)
    throw std::invalid_argument("un_order requires n in {3, 5, 7, 11, 13}");
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  BigInt bq = q;
  BigInt v = 1;
  for (uint32_t i = 0; i < n * (n - 1) / 2; ++i) v *= bq;
  for (uint32_t i = 2; i <= n; ++i) {
    BigInt term = 1;
    for (uint32_t j = 0; j < i; ++j) term *= bq;
    term -= (i % 2 == 0) ? 1 : -1;  // q^i - (-1)^i
    v *= term;
  }
  return exact_div(v, BigInt(std::gcd(uint64_t(n), q + 1)));
}

namespace {

// Shared scan driver: `eval` returns (ratio, chain_ok) for one q.
template <typename Eval>
RatioScan scan(uint64_t q_lo, uint64_t q_hi, Eval eval) {
  RatioScan r;
  r.q_lo = q_lo;
  r.q_hi = q_hi;
  r.passed = true;
  r.monotone = true;
  BigRat prev = 0;
  for (uint64_t q : prime_powers(q_lo, q_hi)) {
    auto [ratio, chain_ok] = eval(q);
    ++r.count;
    if (!(ratio > 1) || !chain_ok) {
      r.passed = false;
      if (r.first_failure_q == 0) r.first_failure_q = q;
    }
    if (r.count == 1) {
      r.min_ratio = r.max_ratio = ratio;
    } else {
      if (ratio < r.min_ratio) r.min_ratio = ratio;
      if (ratio > r.max_ratio) r.max_ratio = ratio;
      if (ratio < prev) r.monotone = false;
    }
    prev = ratio;
  }
  if (r.count == 0) r.passed = false;
  return r;
}

BigInt ipow(uint64_t q, uint32_t e) {
  BigInt v = 1;
  for (uint32_t i = 0; i < e; ++i) v *= q;
  return v;
}

}  // namespace

RatioScan u3_ratio_check(uint64_t q_lo, uint64_t q_hi) {
  if (q_lo <= 2) throw std::invalid_argument("u3 ratio scan requires q > 2");
  return scan(q_lo, q_hi, [](uint64_t q) {
    BigInt gcd3 = std::gcd(q + 1, uint64_t(3));
    BigRat ratio(ipow(q, 3) * (ipow(q, 2) - 1), (ipow(q, 3) + 1) * gcd3);
    // Displayed chain: ratio >= q^3(q-1)/(q^3+1) > 1.
    BigRat bound(ipow(q, 3) * (q - 1), ipow(q, 3) + 1);
    bool chain = ratio >= bound && bound > 1;
    return std::make_pair(ratio, chain);
  });
}

U5RatioReport u5_ratio_check(uint64_t q_lo, uint64_t q_hi) {
  if (q_lo < 2) throw std::invalid_argument("u5 ratio scan requires q >= 2");
  U5RatioReport rep;
  rep.totally_singular = scan(q_lo, q_hi, [](uint64_t q) {
    BigInt num = ipow(q, 10) * (ipow(q, 2) - 1) * (ipow(q, 2) - 1) * (ipow(q, 2) - 1) *
                 (ipow(q, 3) + 1);
    BigInt den = (ipow(q, 4) - 1) * (ipow(q, 5) + 1) * BigInt(std::gcd(q + 1, uint64_t(5)));
    BigRat ratio(num, den);
    // Displayed chain: ratio > q^10 / ((q^4-1)(q^5+1)) = q^10 / (q^9-q^5+q^4-1) > 1,
    // including the denominator identity itself.
    BigInt den1 = (ipow(q, 4) - 1) * (ipow(q, 5) + 1);
    bool identity = den1 == ipow(q, 9) - ipow(q, 5) + ipow(q, 4) - 1;
    BigRat bound(ipow(q, 10), den1);
    bool chain = identity && ratio > bound && bound > 1;
    return std::make_pair(ratio, chain);
  });
  rep.nondegenerate = scan(q_lo, q_hi, [](uint64_t q) {
    // prod_{i=1}^{4} (q^i - (-1)^i) = (q+1)(q^2-1)(q^3+1)(q^4-1).
    BigInt prod = (ipow(q, 1) + 1) * (ipow(q, 2) - 1) * (ipow(q, 3) + 1) * (ipow(q, 4) - 1);
    BigInt num = ipow(q, 2) * (BigInt(q) + 1) * prod;
    BigInt den = (ipow(q, 5) + 1) * BigInt(std::gcd(q + 1, uint64_t(5)));
    BigRat ratio(num, den);
    // Displayed chain: ratio > q^2(q^4-1)/(q^5+1) = (q^6-q^2)/(q^5+1) > 1.
    bool identity = ipow(q, 2) * (ipow(q, 4) - 1) == ipow(q, 6) - ipow(q, 2);
    BigRat bound(ipow(q, 6) - ipow(q, 2), ipow(q, 5) + 1);
    bool chain = identity && ratio > bound && bound > 1;
    return std::make_pair(ratio, chain);
  });
  rep.passed = rep.totally_singular.passed && rep.nondegenerate.passed;
  return rep;
}

M23Report m23_check(const AtlasConstants& c) {
  M23Report r;
  r.first_product = BigInt(253) * c.M22;
  r.first_ok = r.first_product > c.M23;
  r.passed = r.first_ok;
  for (const auto& m : c.m23_maximals) {
    M23Report::Row row;
    row.name = m.name;
    row.order = m.order;
    row.product = m.order * c.M22;
    row.ok = row.product > c.M23;
    if (!row.ok) r.passed = false;
    r.rows.push_back(std::move(row));
  }
  return r;
}

BmReport bm_check(const AtlasConstants& c) {
  BmReport r;
  r.a_ok = c.Fi23 * c.Fi23 > c.B;
  r.b_ok = exact_div(c.ng_h, c.nm1_h) == c.index_factor && c.index_factor == 22;
  r.c_ok = exact_div(c.ng_h, c.nk_h) == 2;

  BigInt k_index = exact_div(c.Fi23, c.nk_h);            // |K : N_K(H)|
  BigInt l_order = c.l_2_part * c.Co2;                   // |L| = 2^23 |Co2|
  BigInt l_index = exact_div(l_order, c.nl_h);           // |L : N_L(H)|
  BigInt g_index = exact_div(c.B, c.m1_order);           // |G : M1|
  r.d_lhs = c.s_order * (2 * k_index + c.index_factor * c.s_order + l_index);
  r.d_rhs = exact_div(g_index, c.index_factor);
  r.d_ok = r.d_lhs < r.d_rhs;
  r.d_slack = BigRat(r.d_rhs, r.d_lhs);
  r.passed = r.a_ok && r.b_ok && r.c_ok && r.d_ok;
  return r;
}

}  // namespace intergraph::arith
