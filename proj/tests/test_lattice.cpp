#include <algorithm>
#include <map>
#include <set>

#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "intergraph/lattice.hpp"
#include "intergraph/presets.hpp"

using namespace intergraph::permgrp;
using intergraph::Bitset;

namespace {

Group make_s3() {
  return Group::generate(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
}

Group make_a5() {
  return Group::generate(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
}

Group make_psl27() {
  return Group::generate(
      8, {parse_cycles("(1 2 3 4 5 6 7)", 8), parse_cycles("(1 8)(2 7)(3 4)(5 6)", 8)});
}

std::map<uint64_t, int> order_census(const Lattice& lat) {
  std::map<uint64_t, int> census;
  for (const Subgroup& s : lat.subs) ++census[s.order()];
  return census;
}

// Closure property checked from scratch (independent of how s was built).
bool is_closed_subgroup(const Subgroup& s) {
  const Group& G = *s.parent;
  if (!s.bits.test(0)) return false;
  for (uint32_t a : s.elems)
    for (uint32_t b : s.elems)
      if (!s.bits.test(G.mul(a, b))) return false;
  return true;
}

}  // namespace

TEST_CASE("generated subgroups of S3") {
  Group g = make_s3();
  CHECK(generated_subgroup(g, {}).order() == 1);
  CHECK(generated_subgroup(g, {g.index_of(parse_cycles("(1 2 3)", 3))}).order() == 3);
  CHECK(generated_subgroup(g, {g.index_of(parse_cycles("(1 2)", 3))}).order() == 2);
  Subgroup whole = generated_subgroup(g, {g.index_of(parse_cycles("(1 2)", 3)),
                                          g.index_of(parse_cycles("(1 2 3)", 3))});
  CHECK(whole.is_full());
  CHECK(trivial_subgroup(g).is_trivial());
  CHECK(full_subgroup(g).order() == 6);
  CHECK_THROWS_AS(subgroup_from_bits(g, Bitset(6)), std::invalid_argument);
}

TEST_CASE("S3 lattice") {
  Group g = make_s3();
  Lattice lat = all_subgroups(g);
  CHECK(lat.subs.size() == 6);  // 1, three C2, one C3, S3
  CHECK(order_census(lat) == std::map<uint64_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});
  CHECK(lat.classes.size() == 4);
  for (const Subgroup& s : lat.subs) CHECK(is_closed_subgroup(s));
  // Sorted by (order, elements); ids resolvable through the bitset index.
  CHECK(std::is_sorted(lat.subs.begin(), lat.subs.end()));
  for (uint32_t i = 0; i < lat.subs.size(); ++i) CHECK(lat.id_of(lat.subs[i].bits) == i);
  Bitset absent(6);  // {identity, (1 2 3)} is not closed, so not in the lattice
  absent.set(0);
  absent.set(g.index_of(parse_cycles("(1 2 3)", 3)));
  CHECK_THROWS_AS(lat.id_of(absent), std::invalid_argument);
}

TEST_CASE("A5 lattice census") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  CHECK(lat.subs.size() == 59);
  CHECK(order_census(lat) == std::map<uint64_t, int>{{1, 1},
                                                     {2, 15},
                                                     {3, 10},
                                                     {4, 5},
                                                     {5, 6},
                                                     {6, 10},
                                                     {10, 6},
                                                     {12, 5},
                                                     {60, 1}});
  // One conjugacy class per order here; class sizes as a multiset.
  CHECK(lat.classes.size() == 9);
  std::multiset<size_t> class_sizes;
  for (const auto& c : lat.classes) class_sizes.insert(c.size());
  CHECK(class_sizes == std::multiset<size_t>{1, 1, 5, 5, 6, 6, 10, 10, 15});
  // class_of is consistent with classes, and classes hold conjugate groups.
  for (uint32_t c = 0; c < lat.classes.size(); ++c) {
    uint64_t order = lat.subs[lat.classes[c][0]].order();
    for (uint32_t id : lat.classes[c]) {
      CHECK(lat.class_of[id] == c);
      CHECK(lat.subs[id].order() == order);
    }
  }
  // Every subgroup is closed, and Lagrange holds.
  for (const Subgroup& s : lat.subs) {
    CHECK(is_closed_subgroup(s));
    CHECK(g.order() % s.order() == 0);
  }
}

TEST_CASE("lattice agrees with the oracle") {
  for (int which = 0; which < 3; ++which) {
    Group g = which == 0 ? make_s3() : which == 1 ? make_a5() : make_psl27();
    CAPTURE(which);
    Lattice fast = all_subgroups(g);
    Lattice slow = lattice_oracle(g);
    REQUIRE(fast.subs.size() == slow.subs.size());
    for (size_t i = 0; i < fast.subs.size(); ++i) CHECK(fast.subs[i].elems == slow.subs[i].elems);
  }
  // PSL(2,7) sanity: simple group of order 168 with both A4-in-S4 chains.
  Group psl = make_psl27();
  CHECK(psl.order() == 168);
}

TEST_CASE("orbit-stabilizer for subgroup conjugation") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  for (const auto& cls : lat.classes) {
    const Subgroup& rep = lat.subs[cls[0]];
    auto orbit = conjugates(rep);
    CHECK(orbit.size() == cls.size());
    Subgroup norm = normalizer(rep);
    CHECK(orbit.size() * norm.order() == g.order());
    // The normalizer contains the subgroup itself.
    CHECK(rep.bits.subset_of(norm.bits));
    // Conjugates reported sorted and distinct.
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    for (size_t i = 1; i < orbit.size(); ++i) CHECK(!(orbit[i - 1] == orbit[i]));
  }
}

TEST_CASE("Sylow 5-subgroups of A5") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  const Subgroup* syl = nullptr;
  for (const Subgroup& s : lat.subs)
    if (s.order() == 5) {
      syl = &s;
      break;
    }
  REQUIRE(syl != nullptr);
  CHECK(conjugates(*syl).size() == 6);
  CHECK(normalizer(*syl).order() == 10);
  // Distinct Sylow 5-subgroups intersect trivially.
  auto orbit = conjugates(*syl);
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = i + 1; j < orbit.size(); ++j)
      CHECK(intersect(orbit[i], orbit[j]).order() == 1);
}

TEST_CASE("conjugation and intersection behave") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  const Subgroup& s = lat.subs[10];
  for (uint32_t c = 0; c < g.order(); c += 7) {
    Subgroup t = conjugate_subgroup(s, c);
    CHECK(t.order() == s.order());
    CHECK(is_closed_subgroup(t));
    // Conjugation by an element of the subgroup is a symmetry of it.
  }
  for (uint32_t e : s.elems) CHECK(conjugate_subgroup(s, e) == s);
  CHECK(intersect(s, s) == s);
  CHECK(intersect(s, trivial_subgroup(g)).is_trivial());
  CHECK(intersect(s, full_subgroup(g)) == s);

  Group h = make_s3();
  CHECK_THROWS_AS(intersect(lat.subs[1], all_subgroups(h).subs[1]), std::invalid_argument);
}

TEST_CASE("centralizers in S3") {
  Group g = make_s3();
  CHECK(centralizer(g, 0).order() == 6);  // identity
  uint32_t t = g.index_of(parse_cycles("(1 2)", 3));
  CHECK(centralizer(g, t).order() == 2);
  uint32_t r = g.index_of(parse_cycles("(1 2 3)", 3));
  CHECK(centralizer(g, r).order() == 3);
}

TEST_CASE("maximal subgroups of A5") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  auto max = maximal_ids(lat);
  CHECK(max.size() == 21);  // 5 x A4, 6 x D10, 10 x S3
  std::multiset<uint64_t> orders;
  for (uint32_t id : max) orders.insert(lat.subs[id].order());
  CHECK(orders == std::multiset<uint64_t>{6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 10, 10, 10, 10, 10, 10,
                                          12, 12, 12, 12, 12});
  // Definition check: nothing proper strictly contains a maximal subgroup.
  for (uint32_t id : max)
    for (const Subgroup& t : lat.subs)
      if (!t.is_full() && lat.subs[id].bits.subset_of(t.bits))
        CHECK(t == lat.subs[id]);
}

TEST_CASE("involutions and dihedral joins") {
  Group g = make_a5();
  Subgroup whole = full_subgroup(g);
  auto inv = involutions(whole);
  CHECK(inv.size() == 15);
  CHECK(std::is_sorted(inv.begin(), inv.end()));
  for (uint32_t x : inv) CHECK(g.element_order(x) == 2);

  // <x, y> for involutions is dihedral of order 2*ord(xy).
  for (size_t i = 0; i < inv.size(); i += 3) {
    for (size_t j = 0; j < inv.size(); j += 2) {
      Subgroup d = dihedral_join(g, inv[i], inv[j]);
      uint64_t product_order = g.element_order(g.mul(inv[i], inv[j]));
      CHECK(d.order() == 2 * product_order);
    }
  }
  CHECK(dihedral_join(g, inv[0], inv[0]).order() == 2);
  CHECK_THROWS_AS(dihedral_join(g, 0, inv[0]), std::invalid_argument);
}

TEST_CASE("double counting identity") {
  Group g = make_a5();
  Lattice lat = all_subgroups(g);
  auto find_order = [&](uint64_t n) -> const Subgroup& {
    for (const Subgroup& s : lat.subs)
      if (s.order() == n) return s;
    FAIL("missing subgroup");
    return lat.subs[0];
  };

  // H = Sylow 5, M = its D10 overgroup.
  const Subgroup& h5 = find_order(5);
  const Subgroup* d10 = nullptr;
  for (const Subgroup& s : lat.subs)
    if (s.order() == 10 && h5.bits.subset_of(s.bits)) d10 = &s;
  REQUIRE(d10 != nullptr);
  DoubleCountReport r = double_count_check(h5, *d10);
  CHECK(r.passed);
  CHECK(r.h_orbit == 6);
  CHECK(r.m_orbit == 6);
  CHECK(r.m_containing_h == 1);
  CHECK(r.h_inside_m == 1);
  CHECK(r.pairs == 6);

  // H = C2, M = V4: every V4 holds 3 involutions, every C2 lies in one V4.
  const Subgroup& c2 = find_order(2);
  const Subgroup* v4 = nullptr;
  for (const Subgroup& s : lat.subs)
    if (s.order() == 4 && c2.bits.subset_of(s.bits)) v4 = &s;
  REQUIRE(v4 != nullptr);
  DoubleCountReport r2 = double_count_check(c2, *v4);
  CHECK(r2.passed);
  CHECK(r2.h_orbit == 15);
  CHECK(r2.m_orbit == 5);
  CHECK(r2.m_containing_h == 1);
  CHECK(r2.h_inside_m == 3);
  CHECK(r2.pairs == 15);

  // Identity holds across every contained pair of the lattice.
  for (const auto& cls_h : lat.classes) {
    const Subgroup& H = lat.subs[cls_h[0]];
    for (const auto& cls_m : lat.classes) {
      const Subgroup& M = lat.subs[cls_m[0]];
      if (!H.bits.subset_of(M.bits)) continue;
      CHECK(double_count_check(H, M).passed);
    }
  }

  CHECK_THROWS_AS(double_count_check(*d10, h5), std::invalid_argument);  // H not <= M
}

TEST_CASE("double counting sweep over whole lattices") {
  for (const char* name : {"s3", "a5", "psl2_7"}) {
    CAPTURE(name);
    Group g = build_group(find_preset(name));
    Lattice lat = all_subgroups(g);
    DoubleCountSweep s = double_count_sweep(lat);
    CHECK(s.passed);
    CHECK(s.failures == 0);
    // Every subgroup is contained in itself and in G, so at least
    // 2 * |subs| - 1 containments are swept.
    CHECK(s.pairs_checked >= 2 * lat.subs.size() - 1);
    CHECK(s.class_pairs > 0);
  }
}

TEST_CASE("shipped presets load and regenerate their expected orders") {
  const std::map<std::string, uint64_t> expected = {
      {"a5", 60},        {"a6", 360},      {"a7", 2520},
      {"s3", 6},         {"psl2_7", 168},  {"psl2_11", 660},
      {"psl2_13", 1092}, {"psl2_19", 3420}, {"u3_3", 6048}};
  auto names = preset_names();
  CHECK(names.size() == expected.size());
  for (const auto& n : names) {
    CAPTURE(n);
    Preset p = find_preset(n);
    CHECK(p.name == n);
    CHECK(p.expected_order == expected.at(n));
    CHECK(p.simple == (n != "s3"));
    Group g = build_group(p);
    CHECK(g.order() == p.expected_order);
    CHECK(g.degree() == p.degree);
    if (p.family == "psl2") {
      CHECK(p.q >= 7);
      CHECK(p.degree == p.q + 1);
      CHECK(p.expected_order == uint64_t(p.q) * (p.q - 1) * (p.q + 1) / 2);
    }
  }
}

TEST_CASE("preset file validation") {
  auto write_tmp = [](const std::string& body) {
    std::string path = "preset_test_tmp.txt";
    std::ofstream out(path);
    out << body;
    out.close();
    return path;
  };
  // Valid file round trip, with comments and blank lines.
  std::string ok = write_tmp(
      "degree 3\n\n# comment\nname tiny\norder 3\nsimple false\nfamily control\n(1 2 3)\n");
  Preset p = load_preset_file(ok);
  CHECK(p.degree == 3);
  CHECK(p.expected_order == 3);
  CHECK(build_group(p).order() == 3);

  CHECK_THROWS_AS(load_preset_file(write_tmp("name x\ndegree 3\norder 3\n(1 2 3)\n")),
                  std::runtime_error);  // degree must come first
  CHECK_THROWS_AS(load_preset_file(write_tmp("degree 3\nname x\n(1 2 3)\n")),
                  std::runtime_error);  // missing order
  CHECK_THROWS_AS(load_preset_file(write_tmp("degree 3\norder 3\n(1 2 3)\n")),
                  std::runtime_error);  // missing name
  CHECK_THROWS_AS(load_preset_file(write_tmp("degree 3\nname x\norder 3\n")),
                  std::runtime_error);  // no generators
  CHECK_THROWS_AS(load_preset_file(write_tmp("degree 3\nname x\norder 3\nbogus 1\n(1 2)\n")),
                  std::runtime_error);  // unknown key
  // Wrong expected order is caught at build time.
  std::string bad = write_tmp("degree 3\nname x\norder 4\nsimple false\nfamily control\n(1 2 3)\n");
  CHECK_THROWS_AS(build_group(load_preset_file(bad)), std::runtime_error);
  std::remove("preset_test_tmp.txt");

  CHECK_THROWS_AS(find_preset("no_such_preset"), std::runtime_error);
  CHECK_THROWS_AS(find_preset("../evil"), std::runtime_error);
}

TEST_CASE("caps on lattice enumeration") {
  Group g = make_a5();
  CHECK_THROWS_AS(all_subgroups(g, 50), CapExceeded);
  std::vector<Perm> gens;
  for (int i = 0; i < 8; ++i) {
    Perm t = identity_perm(16);
    std::swap(t[2 * i], t[2 * i + 1]);
    gens.push_back(t);
  }
  Group big = Group::generate(16, gens);
  CHECK(big.order() == 256);  // above the oracle bound of 200
  CHECK_THROWS_AS(lattice_oracle(big), CapExceeded);
}
