#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace intergraph::arith {

// Exact arithmetic only: arbitrary-precision integers and reduced rationals.
// No floating point anywhere in this module.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Integer division asserted exact; throws std::domain_error on a remainder
/// (which would signal a transcription error in the constants).
BigInt exact_div(const BigInt& a, const BigInt& b);

/// Group orders and structure constants transcribed from standard tables,
/// loaded from JSON and cross-checked against their prime factorizations
/// and divisibility invariants before use.
struct AtlasConstants {
  BigInt B, Fi23, Co2, M23, M22;

  struct Maximal {
    std::string name;
    BigInt order;
  };
  std::vector<Maximal> m23_maximals;  // descending order

  BigInt m1_order;       // 1081 = 47*23
  BigInt ng_h;           // 506, |N_G(H)|
  BigInt nk_h;           // 253, |N_K(H)|
  BigInt nl_h;           // 506, |N_L(H)|
  BigInt nm1_h;          // 23, |N_{M1}(H)|
  BigInt index_factor;   // 22
  BigInt h_order;        // 23
  BigInt s_order;        // 47
  BigInt l_2_part;       // 2^23
};

/// Parses and validates the constants file; throws std::runtime_error on
/// malformed JSON, factorization mismatch, or any violated invariant.
AtlasConstants load_atlas_constants(const std::string& path);

/// Ascending prime powers q with lo <= q <= hi.
std::vector<uint64_t> prime_powers(uint64_t lo, uint64_t hi);

/// |U_n(q)| = q^{n(n-1)/2} * prod_{i=2}^{n} (q^i - (-1)^i) / gcd(n, q+1).
/// Requires n in {3, 5, 7, 11, 13}.
BigInt un_order(uint32_t n, uint64_t q);

/// One scanned inequality family: the exact ratio stayed > 1 (and above the
/// displayed intermediate bound) for every prime power in [q_lo, q_hi].
struct RatioScan {
  uint64_t q_lo = 0, q_hi = 0;
  uint64_t count = 0;            // prime powers scanned
  bool passed = false;
  uint64_t first_failure_q = 0;  // 0 when passed
  bool monotone = false;         // ratio nondecreasing in q (recorded, not asserted)
  BigRat min_ratio, max_ratio;
};

/// Totally singular U3 ratio q^3(q^2-1) / ((q^3+1) gcd(q+1,3)), checked to
/// dominate q^3(q-1)/(q^3+1) > 1 for every prime power q in range.
/// Requires q_lo > 2.
RatioScan u3_ratio_check(uint64_t q_lo, uint64_t q_hi);

struct U5RatioReport {
  RatioScan totally_singular;
  RatioScan nondegenerate;
  bool passed = false;
};

/// The two U5 ratios with their displayed intermediate bounds, prime powers
/// q in [q_lo, q_hi], q_lo >= 2.
U5RatioReport u5_ratio_check(uint64_t q_lo, uint64_t q_hi);

struct M23Report {
  struct Row {
    std::string name;
    BigInt order;
    BigInt product;  // order * |M22|
    bool ok = false;
  };
  BigInt first_product;  // 253 * |M22|
  bool first_ok = false;
  std::vector<Row> rows;
  bool passed = false;
};

/// 253 * |M22| > |M23|, and m * |M22| > |M23| for every maximal order m.
M23Report m23_check(const AtlasConstants& c);

struct BmReport {
  bool a_ok = false;  // |Fi23|^2 > |B|
  bool b_ok = false;  // 506 / 23 = 22
  bool c_ok = false;  // 506 / 253 = 2
  bool d_ok = false;  // 47(2|K:N_K(H)| + 22*47 + |L:N_L(H)|) < (|B|/1081)/22
  BigInt d_lhs, d_rhs;
  BigRat d_slack;  // rhs / lhs
  bool passed = false;
};

/// The four exact baby-monster comparisons; every division is asserted
/// exact before use as an index.
BmReport bm_check(const AtlasConstants& c);

}  // namespace intergraph::arith
