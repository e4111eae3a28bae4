#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "intergraph/perm.hpp"

using namespace intergraph::permgrp;

namespace {

// Reference composition via explicit image chasing, independent of compose().
Perm ref_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t x = 0; x < a.size(); ++x) r[x] = b[a[x]];
  return r;
}

uint64_t ref_order(const Perm& a) {
  Perm cur = a;
  uint64_t k = 1;
  while (!is_identity(cur)) {
    cur = ref_compose(cur, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("cycle parsing and rendering") {
  Perm a = parse_cycles("(1 2 3)", 5);
  CHECK(a == Perm{1, 2, 0, 3, 4});
  CHECK(cycle_string(a) == "(1 2 3)");

  Perm b = parse_cycles("(1,2)(3,4)", 4);  // commas tolerated
  CHECK(b == Perm{1, 0, 3, 2});
  CHECK(cycle_string(b) == "(1 2)(3 4)");

  CHECK(parse_cycles("()", 3) == identity_perm(3));
  CHECK(parse_cycles("", 3) == identity_perm(3));
  CHECK(parse_cycles("  (2 3) ", 3) == Perm{0, 2, 1});
  CHECK(cycle_string(identity_perm(4)) == "()");

  // Round trip over every element of S4.
  Perm p = identity_perm(4);
  std::vector<Perm> all;
  std::sort(p.begin(), p.end());
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(all.size() == 24);
  for (const Perm& q : all) CHECK(parse_cycles(cycle_string(q), 4) == q);

  CHECK_THROWS_AS(parse_cycles("(1 2 6)", 5), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(parse_cycles("(0 1)", 5), std::invalid_argument);    // 1-based
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 5), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(parse_cycles("(1 2", 5), std::invalid_argument);     // unbalanced
  CHECK_THROWS_AS(parse_cycles("(1 x)", 5), std::invalid_argument);    // junk
}

TEST_CASE("composition order and inverses") {
  Perm a = parse_cycles("(1 2 3)", 3);
  Perm b = parse_cycles("(1 2)", 3);
  // compose applies the left operand first.
  CHECK(compose(a, b) == Perm{0, 2, 1});  // 1->2->1, 2->3->3, 3->1->2
  CHECK(compose(b, a) == Perm{2, 1, 0});
  CHECK(compose(a, b) != compose(b, a));

  Perm p = identity_perm(5);
  std::sort(p.begin(), p.end());
  do {
    CHECK(is_identity(compose(p, inverse_perm(p))));
    CHECK(is_identity(compose(inverse_perm(p), p)));
    CHECK(perm_order(p) == ref_order(p));
  } while (std::next_permutation(p.begin(), p.end()));

  CHECK(perm_order(parse_cycles("(1 2)(3 4 5)", 5)) == 6);
  CHECK(perm_order(identity_perm(7)) == 1);
}

TEST_CASE("group generation: S3") {
  Group g = Group::generate(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  CHECK(g.order() == 6);
  CHECK(g.degree() == 3);
  CHECK(is_identity(g.element(0)));  // lex-least permutation is the identity
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));

  // Index arithmetic agrees with reference composition, exhaustively.
  for (uint32_t a = 0; a < g.order(); ++a) {
    for (uint32_t b = 0; b < g.order(); ++b) {
      CHECK(g.element(g.mul(a, b)) == ref_compose(g.element(a), g.element(b)));
    }
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.mul(g.inv(a), a) == 0);
    CHECK(g.element_order(a) == ref_order(g.element(a)));
  }

  // conj(a, g) = g^{-1} a g.
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t c = 0; c < g.order(); ++c)
      CHECK(g.conj(a, c) == g.mul(g.mul(g.inv(c), a), c));

  CHECK(g.index_of(identity_perm(3)) == 0);
  CHECK(g.contains(parse_cycles("(2 3)", 3)));
  CHECK_THROWS_AS(g.index_of(identity_perm(4)), std::invalid_argument);
  CHECK(g.generator_indices().size() == 2);
  for (size_t i = 0; i < g.generators().size(); ++i)
    CHECK(g.element(g.generator_indices()[i]) == g.generators()[i]);
}

TEST_CASE("group generation: A5 element census") {
  Group g = Group::generate(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  CHECK(g.order() == 60);
  // Element orders in A5: 1 identity, 15 of order 2, 20 of order 3, 24 of order 5.
  std::map<uint64_t, int> census;
  for (uint32_t i = 0; i < g.order(); ++i) ++census[g.element_order(i)];
  CHECK(census == std::map<uint64_t, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
  // Only even permutations.
  for (const Perm& p : g.elements()) {
    int transpositions = 0;
    std::vector<bool> seen(5, false);
    for (size_t s = 0; s < 5; ++s) {
      if (seen[s]) continue;
      size_t len = 0;
      for (size_t x = s; !seen[x]; x = p[x]) {
        seen[x] = true;
        ++len;
      }
      transpositions += int(len) - 1;
    }
    CHECK(transpositions % 2 == 0);
  }
}

TEST_CASE("group multiplication without a Cayley table") {
  // (C2)^14 has order 16384, above the Cayley threshold of 8192, so mul()
  // must fall back to hashed composition. Degree 28: fourteen disjoint
  // transpositions.
  std::vector<Perm> gens;
  for (int i = 0; i < 14; ++i) {
    Perm t = identity_perm(28);
    std::swap(t[2 * i], t[2 * i + 1]);
    gens.push_back(t);
  }
  Group g = Group::generate(28, gens);
  CHECK(g.order() == 16384);
  // Sampled products agree with reference composition.
  for (uint32_t a = 0; a < g.order(); a += 997) {
    for (uint32_t b = 0; b < g.order(); b += 1009) {
      CHECK(g.element(g.mul(a, b)) == ref_compose(g.element(a), g.element(b)));
      CHECK(g.mul(a, b) == g.mul(b, a));  // abelian
    }
    CHECK(g.mul(a, g.inv(a)) == 0);
  }
}

TEST_CASE("order cap enforcement") {
  std::vector<Perm> gens;
  for (int i = 0; i < 15; ++i) {
    Perm t = identity_perm(30);
    std::swap(t[2 * i], t[2 * i + 1]);
    gens.push_back(t);
  }
  // (C2)^15 = 32768 exceeds the default cap of 20000.
  CHECK_THROWS_AS(Group::generate(30, gens), CapExceeded);
  try {
    Group::generate(30, gens);
  } catch (const CapExceeded& e) {
    CHECK(e.reached > 20000);
    CHECK(std::string(e.what()).find("20000") != std::string::npos);
  }
  // A raised cap admits the same group.
  Group g = Group::generate(30, gens, 40000);
  CHECK(g.order() == 32768);

  CHECK_THROWS_AS(Group::generate(3, {Perm{0, 0, 1}}), std::invalid_argument);  // not a bijection
  CHECK_THROWS_AS(Group::generate(3, {identity_perm(4)}), std::invalid_argument);  // degree clash
}

TEST_CASE("generation is insensitive to generator order") {
  Perm s = parse_cycles("(1 2 3 4 5)", 5);
  Perm t = parse_cycles("(1 2 3)", 5);
  Group g1 = Group::generate(5, {s, t});
  Group g2 = Group::generate(5, {t, s});
  CHECK(g1.elements() == g2.elements());  // identical sorted element lists
}
