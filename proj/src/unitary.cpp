#include "intergraph/unitary.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace intergraph::unitary {

using gf::inv;
using gf::pow;

std::pair<uint32_t, uint32_t> prime_power_decompose(uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  uint64_t p = q;
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  uint32_t m = 0;
  uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++m;
  }
  if (v != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {uint32_t(p), m};
}

namespace {

const Field* field_of(const Matrix3& A) {
  if (A.a[0].field == nullptr) throw std::invalid_argument("unbound matrix");
  return A.a[0].field;
}

Vector3 scale(Element c, const Vector3& v) {
  return {{c * v.e[0], c * v.e[1], c * v.e[2]}};
}

Vector3 sub(const Vector3& u, const Vector3& v) {
  return {{u.e[0] - v.e[0], u.e[1] - v.e[1], u.e[2] - v.e[2]}};
}

bool is_zero(const Vector3& v) {
  return v.e[0].is_zero() && v.e[1].is_zero() && v.e[2].is_zero();
}

// Smallest-index s with s^(q+1) = t, for t in GF(q)*. Exists because the
// norm maps GF(q^2)* onto GF(q)*.
Element norm_preimage(const Field* F, Element t) {
  if (t.is_zero() || !F->in_subfield(t.idx)) throw std::domain_error("norm target outside GF(q)*");
  for (uint32_t s = 1; s < F->size(); ++s)
    if (F->norm(s) == t.idx) return F->element(s);
  throw std::logic_error("norm is not onto GF(q)*; field bug");
}

}  // namespace

Matrix3 identity(const Field* F) {
  Element z = {0, F}, o = {F->one().idx, F};
  return {{o, z, z, z, o, z, z, z, o}};
}

Matrix3 diagonal(Element d0, Element d1, Element d2) {
  const Field* F = d0.field;
  Element z = {0, F};
  return {{d0, z, z, z, d1, z, z, z, d2}};
}

Matrix3 mul(const Matrix3& A, const Matrix3& B) {
  const Field* F = field_of(A);
  Matrix3 C;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Element s = {0, F};
      for (int t = 0; t < 3; ++t) s = s + A.at(r, t) * B.at(t, c);
      C.at(r, c) = s;
    }
  return C;
}

Vector3 apply(const Matrix3& A, const Vector3& v) {
  const Field* F = field_of(A);
  Vector3 out;
  for (int r = 0; r < 3; ++r) {
    Element s = {0, F};
    for (int t = 0; t < 3; ++t) s = s + A.at(r, t) * v.e[t];
    out.e[r] = s;
  }
  return out;
}

Matrix3 transpose(const Matrix3& A) {
  Matrix3 T;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) T.at(r, c) = A.at(c, r);
  return T;
}

Matrix3 conj_transpose(const Matrix3& A) {
  Matrix3 T;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) T.at(r, c) = A.at(c, r).frobenius();
  return T;
}

Element det(const Matrix3& A) {
  return A.at(0, 0) * (A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1)) -
         A.at(0, 1) * (A.at(1, 0) * A.at(2, 2) - A.at(1, 2) * A.at(2, 0)) +
         A.at(0, 2) * (A.at(1, 0) * A.at(2, 1) - A.at(1, 1) * A.at(2, 0));
}

Matrix3 inverse(const Matrix3& A) {
  Element d = det(A);
  if (d.is_zero()) throw std::domain_error("singular matrix");
  Element di = inv(d);
  Matrix3 B;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      // Cofactor expansion: B = adj(A) / det, adj(A)_{rc} = cofactor(c, r).
      int r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      int c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      B.at(r, c) = di * (A.at(r1, c1) * A.at(r2, c2) - A.at(r1, c2) * A.at(r2, c1));
    }
  return B;
}

Element herm(const Vector3& u, const Vector3& v) {
  return u.e[0] * v.e[0].frobenius() + u.e[1] * v.e[1].frobenius() +
         u.e[2] * v.e[2].frobenius();
}

bool is_special_unitary(const Matrix3& A) {
  const Field* F = field_of(A);
  if (det(A) != F->one()) return false;
  return mul(A, conj_transpose(A)) == identity(F);
}

bool is_scalar(const Matrix3& A) {
  Element c = A.at(0, 0);
  for (int r = 0; r < 3; ++r)
    for (int col = 0; col < 3; ++col) {
      if (r == col && A.at(r, col) != c) return false;
      if (r != col && !A.at(r, col).is_zero()) return false;
    }
  return true;
}

ProjPoint ProjPoint::from(Vector3 v) {
  for (int i = 0; i < 3; ++i) {
    if (!v.e[i].is_zero()) {
      return {scale(inv(v.e[i]), v)};
    }
  }
  throw std::invalid_argument("zero vector spans no projective point");
}

bool is_nondegenerate(const ProjPoint& X) { return !herm(X.rep, X.rep).is_zero(); }

std::vector<ProjPoint> enumerate_points(const Field* F) {
  if (!F->is_quadratic()) throw std::invalid_argument("projective points need GF(q^2)");
  Element z = F->zero(), o = F->one();
  std::vector<ProjPoint> pts;
  pts.reserve(size_t(F->size() * F->size() + F->size() + 1));
  for (uint32_t y = 0; y < F->size(); ++y)
    for (uint32_t zc = 0; zc < F->size(); ++zc)
      pts.push_back({{{o, F->element(y), F->element(zc)}}});
  for (uint32_t zc = 0; zc < F->size(); ++zc) pts.push_back({{{z, o, F->element(zc)}}});
  pts.push_back({{{z, z, o}}});
  return pts;
}

bool stabilizes(const Matrix3& A, const ProjPoint& P) {
  if (det(A).is_zero()) throw std::domain_error("singular matrix does not act on points");
  return ProjPoint::from(apply(A, P.rep)) == P;
}

Matrix3 move_to_e1(const ProjPoint& X) {
  const Field* F = X.rep.e[0].field;
  if (F->q() <= 2) throw std::invalid_argument("q = 2 is out of the Proposition's range");
  Element h = herm(X.rep, X.rep);
  if (h.is_zero()) throw std::invalid_argument("move_to_e1 requires a non-degenerate point");

  // Orthonormal basis b1, b2, b3 with b1 on the line of X.
  Vector3 b1 = scale(norm_preimage(F, inv(h)), X.rep);

  // Candidate pool: standard basis first (so span(e1) maps to the identity),
  // then every canonical projective representative. Projection into the
  // orthogonal complement of b1 hits a non-isotropic vector because that
  // complement is a non-degenerate 2-dimensional Hermitian space.
  Element z = F->zero(), o = F->one();
  std::vector<ProjPoint> pool = {{{{o, z, z}}}, {{{z, o, z}}}, {{{z, z, o}}}};
  auto all = enumerate_points(F);
  pool.insert(pool.end(), all.begin(), all.end());

  Vector3 b2{};
  bool found = false;
  for (const auto& cand : pool) {
    Vector3 w = sub(cand.rep, scale(herm(cand.rep, b1), b1));
    if (is_zero(w)) continue;
    Element hw = herm(w, w);
    if (hw.is_zero()) continue;
    b2 = scale(norm_preimage(F, inv(hw)), w);
    found = true;
    break;
  }
  if (!found) throw std::logic_error("no non-isotropic complement found; geometry bug");

  // The complement of span(b1, b2) is non-degenerate of dimension 1, so any
  // nonzero projection is automatically non-isotropic.
  Vector3 b3{};
  found = false;
  for (const auto& cand : pool) {
    Vector3 w = sub(cand.rep, scale(herm(cand.rep, b1), b1));
    w = sub(w, scale(herm(w, b2), b2));
    if (is_zero(w)) continue;
    Element hw = herm(w, w);
    if (hw.is_zero()) throw std::logic_error("isotropic vector in a definite line; geometry bug");
    b3 = scale(norm_preimage(F, inv(hw)), w);
    found = true;
    break;
  }
  if (!found) throw std::logic_error("no third basis vector found; geometry bug");

  // U has columns b1, b2, b3 and is unitary; its determinant eps has norm 1,
  // so dividing b3 by eps keeps the basis orthonormal and makes det(U) = 1.
  Matrix3 U;
  for (int r = 0; r < 3; ++r) {
    U.at(r, 0) = b1.e[r];
    U.at(r, 1) = b2.e[r];
    U.at(r, 2) = b3.e[r];
  }
  Element eps = det(U);
  if (eps.norm() != F->one()) throw std::logic_error("unitary determinant has norm != 1");
  for (int r = 0; r < 3; ++r) U.at(r, 2) = U.at(r, 2) * inv(eps);

  Matrix3 M = conj_transpose(U);
  if (!is_special_unitary(M)) throw std::logic_error("move_to_e1 output is not special unitary");
  ProjPoint e1 = ProjPoint::from({{F->one(), F->zero(), F->zero()}});
  if (!(ProjPoint::from(apply(M, X.rep)) == e1))
    throw std::logic_error("move_to_e1 output does not move X to e1");
  return M;
}

namespace {

// Witness in standard position: X = span(e1), Y = span(y). The reference
// matrices stabilize row vectors acting on the right; this toolkit acts on
// column vectors from the left, so the standard-position witness is the
// transpose of the reference form (transposition preserves both det = 1
// and unitarity).
Matrix3 standard_witness(const Field* F, const Vector3& y, WitnessCase* which) {
  Element lam = F->lambda();
  Element a = y.e[0], b = y.e[1], c = y.e[2];

  int zeros = int(a.is_zero()) + int(b.is_zero()) + int(c.is_zero());
  if (zeros > 0) {
    if (which) *which = WitnessCase::kZeroCoordinate;
    Element lam_m2 = pow(lam, -2);
    if (zeros >= 2 || c.is_zero()) return diagonal(lam, lam, lam_m2);
    if (a.is_zero()) return diagonal(lam_m2, lam, lam);
    return diagonal(lam, lam_m2, lam);  // b = 0
  }

  // Normalize a = 1 (projectively harmless), then split on norm(mu).
  Element bb = inv(a) * b, cc = inv(a) * c;
  Element mu = inv(bb) * cc;
  Element z = F->zero(), o = F->one();
  Element minus_one = -o;

  Matrix3 W;
  if (mu.norm() == minus_one) {
    if (which) *which = WitnessCase::kNormMinusOne;
    Element beta = F->solve_trace(F->element_from_int(2), {o});
    Element beta_q = beta.frobenius();
    W = {{o, z, z,                                  //
          z, beta, mu * (o - beta_q),               //
          z, inv(mu) * (o - beta), beta_q}};
  } else {
    if (which) *which = WitnessCase::kGeneric;
    Element n = mu.norm();
    Element gamma = pow(lam, -2) * (pow(lam, 3) + n) * inv(o + n);
    W = {{lam, z, z,                                        //
          z, gamma, mu * (lam - (gamma * lam).frobenius()),  //
          z, inv(mu) * (lam - gamma), (lam * gamma).frobenius()}};
  }
  return transpose(W);
}

Matrix3 witness_from_standard(const Matrix3& M, const Matrix3& Minv, const ProjPoint& X,
                              const ProjPoint& Y, WitnessCase* which) {
  const Field* F = X.rep.e[0].field;
  Vector3 y_std = apply(M, Y.rep);
  Matrix3 W = standard_witness(F, y_std, which);
  Matrix3 A = mul(Minv, mul(W, M));

  if (!is_special_unitary(A)) throw std::logic_error("witness is not special unitary");
  if (is_scalar(A)) throw std::logic_error("witness is scalar");
  if (!stabilizes(A, X)) throw std::logic_error("witness does not stabilize X");
  if (!stabilizes(A, Y)) throw std::logic_error("witness does not stabilize Y");
  return A;
}

}  // namespace

Matrix3 witness(const ProjPoint& X, const ProjPoint& Y, WitnessCase* which) {
  const Field* F = X.rep.e[0].field;
  if (Y.rep.e[0].field != F) throw std::invalid_argument("mixed-field points");
  if (F->q() <= 2) throw std::invalid_argument("q = 2 is out of the Proposition's range");
  if (!is_nondegenerate(X)) throw std::invalid_argument("witness requires non-degenerate X");
  Matrix3 M = move_to_e1(X);
  return witness_from_standard(M, inverse(M), X, Y, which);
}

PropositionReport verify_proposition(uint64_t q, PropMode mode, unsigned workers, uint64_t cap) {
  auto [p, m] = prime_power_decompose(q);
  if (q <= 2) throw std::invalid_argument("q = 2 is out of the Proposition's range");
  auto F = Field::make(p, 2 * m, cap);

  auto points = enumerate_points(F.get());
  std::vector<ProjPoint> xs;
  if (mode == PropMode::kE1Only) {
    xs.push_back(ProjPoint::from({{F->one(), F->zero(), F->zero()}}));
  } else {
    for (const auto& P : points)
      if (is_nondegenerate(P)) xs.push_back(P);
  }

  PropositionReport rep;
  rep.q = q;
  rep.mode = mode;
  rep.pairs_checked = uint64_t(xs.size()) * points.size();

  unsigned nw = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
  nw = std::min<unsigned>(nw, std::max<size_t>(size_t(1), xs.size()));

  struct Local {
    std::array<uint64_t, 3> counts = {0, 0, 0};
    std::vector<PropositionReport::Failure> failures;
  };
  std::vector<Local> locals(nw);

  auto run_chunk = [&](unsigned wi) {
    Local& loc = locals[wi];
    for (size_t xi = wi; xi < xs.size(); xi += nw) {
      const ProjPoint& X = xs[xi];
      Matrix3 M, Minv;
      try {
        M = move_to_e1(X);
        Minv = inverse(M);
      } catch (const std::exception& e) {
        for (const auto& Y : points) loc.failures.push_back(PropositionReport::Failure{X.key(), Y.key(), e.what()});
        continue;
      }
      for (const auto& Y : points) {
        WitnessCase wc = WitnessCase::kZeroCoordinate;
        try {
          (void)witness_from_standard(M, Minv, X, Y, &wc);
          ++loc.counts[size_t(wc)];
        } catch (const std::exception& e) {
          loc.failures.push_back(PropositionReport::Failure{X.key(), Y.key(), e.what()});
        }
      }
    }
  };

  if (nw <= 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned wi = 0; wi < nw; ++wi) threads.emplace_back(run_chunk, wi);
    for (auto& t : threads) t.join();
  }

  for (const auto& loc : locals) {
    for (int i = 0; i < 3; ++i) rep.case_counts[i] += loc.counts[i];
    rep.failures.insert(rep.failures.end(), loc.failures.begin(), loc.failures.end());
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const PropositionReport::Failure& a, const PropositionReport::Failure& b) {
              return std::tie(a.x_key, a.y_key) < std::tie(b.x_key, b.y_key);
            });
  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace intergraph::unitary
