// Generates the u3_3 preset: the special unitary group SU(3,3) acting on the
// 28 isotropic points of the Hermitian form on F_9^3. Writes a preset file
// whose permutations are the actions of explicitly constructed special
// unitary matrices; the generated group order is confirmed to be 6048 before
// anything is written.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

#include "intergraph/perm.hpp"
#include "intergraph/presets.hpp"
#include "intergraph/unitary.hpp"

using namespace intergraph;
using namespace intergraph::unitary;
using permgrp::Group;
using permgrp::Perm;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_u33_preset OUTPUT_FILE\n";
    return 2;
  }

  auto F = gf::Field::make(3, 2);
  auto points = enumerate_points(F.get());

  // Isotropic points in canonical enumeration order; labels are 1-based.
  std::vector<ProjPoint> iso;
  std::map<std::array<uint32_t, 3>, uint16_t> label;
  for (const ProjPoint& P : points) {
    if (herm(P.rep, P.rep).idx == 0) {
      label[P.key()] = uint16_t(iso.size());
      iso.push_back(P);
    }
  }
  if (iso.size() != 28) {
    std::cerr << "expected 28 isotropic points, found " << iso.size() << "\n";
    return 1;
  }

  Element l = F->lambda();
  Element zero = F->zero(), one = F->one();

  std::vector<Matrix3> pool;
  pool.push_back(diagonal(l, l, pow(l, -2)));
  Matrix3 r{{one, zero, zero, zero, zero, one, zero, -one, zero}};
  pool.push_back(r);
  // Change-of-basis matrices to assorted non-degenerate points mix all three
  // coordinates; a couple of stabilizer witnesses add non-monomial elements.
  int added = 0;
  for (const ProjPoint& P : points) {
    if (!is_nondegenerate(P)) continue;
    pool.push_back(move_to_e1(P));
    if (++added >= 4) break;
  }
  for (const ProjPoint& X : points) {
    if (!is_nondegenerate(X)) continue;
    pool.push_back(witness(X, iso[0]));
    pool.push_back(witness(X, iso[iso.size() / 2]));
    break;
  }

  auto perm_of = [&](const Matrix3& A) -> Perm {
    Perm p(28);
    for (size_t i = 0; i < iso.size(); ++i) {
      ProjPoint Q = ProjPoint::from(apply(A, iso[i].rep));
      auto it = label.find(Q.key());
      if (it == label.end()) throw std::logic_error("image point not isotropic");
      p[i] = it->second;
    }
    return p;
  };

  std::vector<Perm> pool_perms;
  for (const Matrix3& A : pool) {
    if (!is_special_unitary(A)) {
      std::cerr << "pool matrix is not special unitary\n";
      return 1;
    }
    pool_perms.push_back(perm_of(A));
  }

  // Deterministic search for a generating pair (then triple) of order 6048.
  std::vector<Perm> chosen;
  auto try_gens = [&](std::vector<Perm> gens) {
    Group g = Group::generate(28, gens);
    if (g.order() == 6048) chosen = std::move(gens);
    return !chosen.empty();
  };
  for (size_t i = 0; i < pool_perms.size() && chosen.empty(); ++i)
    for (size_t j = i + 1; j < pool_perms.size() && chosen.empty(); ++j)
      try_gens({pool_perms[i], pool_perms[j]});
  for (size_t i = 0; i < pool_perms.size() && chosen.empty(); ++i)
    for (size_t j = i + 1; j < pool_perms.size() && chosen.empty(); ++j)
      for (size_t k = j + 1; k < pool_perms.size() && chosen.empty(); ++k)
        try_gens({pool_perms[i], pool_perms[j], pool_perms[k]});
  if (chosen.empty()) {
    std::cerr << "no generating set of order 6048 found in the pool\n";
    return 1;
  }

  std::ofstream out(argv[1]);
  out << "degree 28\n"
      << "# SU(3,3) = PSU(3,3) acting on the 28 isotropic points of the\n"
      << "# Hermitian form x1*y1^s + x2*y2^s + x3*y3^s on F_9^3 (s the\n"
      << "# order-2 field automorphism). Labels follow the toolkit's\n"
      << "# canonical ordering of isotropic projective points. Generated by\n"
      << "# tools/make_u33_preset from explicit special unitary matrices.\n"
      << "name u3_3\n"
      << "order 6048\n"
      << "simple true\n"
      << "family unitary\n"
      << "q 3\n";
  for (const Perm& p : chosen) out << permgrp::cycle_string(p) << "\n";
  out.close();

  // Round-trip: the file we wrote must load and regenerate order 6048.
  auto preset = permgrp::load_preset_file(argv[1]);
  Group g = permgrp::build_group(preset);
  std::cout << "wrote " << argv[1] << " (order " << g.order() << ", "
            << chosen.size() << " generators)\n";
  return 0;
}
