#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "intergraph/gf.hpp"

namespace intergraph::unitary {

using gf::Element;
using gf::Field;

/// Decomposes a prime power q = p^m; throws std::invalid_argument otherwise.
std::pair<uint32_t, uint32_t> prime_power_decompose(uint64_t q);

/// Vector in F_{q^2}^3.
struct Vector3 {
  std::array<Element, 3> e;

  friend bool operator==(const Vector3& a, const Vector3& b) { return a.e == b.e; }
};

/// 3x3 matrix over F_{q^2}, row-major.
struct Matrix3 {
  std::array<Element, 9> a;

  Element& at(int r, int c) { return a[r * 3 + c]; }
  const Element& at(int r, int c) const { return a[r * 3 + c]; }

  friend bool operator==(const Matrix3& x, const Matrix3& y) { return x.a == y.a; }
};

Matrix3 identity(const Field* F);
Matrix3 diagonal(Element d0, Element d1, Element d2);
Matrix3 mul(const Matrix3& A, const Matrix3& B);
Vector3 apply(const Matrix3& A, const Vector3& v);
Matrix3 transpose(const Matrix3& A);
/// Entrywise frobenius followed by transpose (A^{sigma T}).
Matrix3 conj_transpose(const Matrix3& A);
Element det(const Matrix3& A);
/// Inverse by adjugate; throws std::domain_error if det = 0.
Matrix3 inverse(const Matrix3& A);

/// Hermitian form with identity Gram matrix: sum_i u_i * frobenius(v_i).
/// Linear in the first argument, sigma-semilinear in the second.
Element herm(const Vector3& u, const Vector3& v);

/// det(A) = 1 and A * conj_transpose(A) = I.
bool is_special_unitary(const Matrix3& A);
/// A = c*I for some scalar c.
bool is_scalar(const Matrix3& A);

/// Projective point: nonzero vector normalized so the first nonzero
/// coordinate is 1 (canonical representative of the spanned line).
struct ProjPoint {
  Vector3 rep;

  /// Canonicalizes a nonzero vector; throws std::invalid_argument on 0.
  static ProjPoint from(Vector3 v);

  std::array<uint32_t, 3> key() const {
    return {rep.e[0].idx, rep.e[1].idx, rep.e[2].idx};
  }
  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.rep == b.rep; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.key() < b.key(); }
};

/// herm(rep, rep) != 0.
bool is_nondegenerate(const ProjPoint& X);

/// All q^4 + q^2 + 1 canonical projective points, deterministic order:
/// (1,y,z) by ascending (y,z) index, then (0,1,z), then (0,0,1).
std::vector<ProjPoint> enumerate_points(const Field* F);

/// A maps the line of P to itself (column action A * rep). Throws
/// std::domain_error if A is singular.
bool stabilizes(const Matrix3& A, const ProjPoint& P);

/// Special unitary M with M * rep(X) on the line of e1. Requires X
/// non-degenerate and q > 2. Post-conditions is_special_unitary(M) and
/// stabilizes-to-e1 are verified before returning.
Matrix3 move_to_e1(const ProjPoint& X);

enum class WitnessCase : int {
  kZeroCoordinate = 0,  // transported Y has a zero coordinate: diagonal witness
  kNormMinusOne = 1,    // mu^(q+1) = -1: beta matrix
  kGeneric = 2,         // gamma matrix
};

/// Non-scalar element of SU3(q)_X intersect SU3(q)_Y. Requires q > 2 and
/// X non-degenerate. All four post-conditions (special unitary, non-scalar,
/// stabilizes X, stabilizes Y) are verified before returning; the case
/// taken is reported through `which` when non-null.
Matrix3 witness(const ProjPoint& X, const ProjPoint& Y, WitnessCase* which = nullptr);

enum class PropMode {
  kE1Only,
  kAllNondegenerate,
};

struct PropositionReport {
  uint64_t q = 0;
  PropMode mode = PropMode::kE1Only;
  uint64_t pairs_checked = 0;
  std::array<uint64_t, 3> case_counts = {0, 0, 0};  // indexed by WitnessCase
  struct Failure {
    std::array<uint32_t, 3> x_key;
    std::array<uint32_t, 3> y_key;
    std::string reason;
  };
  std::vector<Failure> failures;  // sorted by (x_key, y_key)
  bool passed = false;
};

/// Runs the witness construction over every projective point Y (and every
/// non-degenerate X in kAllNondegenerate mode), recording post-condition
/// failures instead of throwing. workers = 0 means one per hardware thread.
PropositionReport verify_proposition(uint64_t q, PropMode mode, unsigned workers = 0,
                                     uint64_t cap = Field::kDefaultCap);

}  // namespace intergraph::unitary
