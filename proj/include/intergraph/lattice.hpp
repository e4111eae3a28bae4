#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "intergraph/bitset.hpp"
#include "intergraph/perm.hpp"

namespace intergraph::permgrp {

/// Subgroup of a materialized Group, in canonical form: sorted element
/// indices plus the matching bitset over the parent's element ordering.
struct Subgroup {
  const Group* parent = nullptr;
  std::vector<uint32_t> elems;  // sorted
  Bitset bits;                  // width = parent order

  uint64_t order() const { return elems.size(); }
  bool contains(uint32_t idx) const { return bits.test(idx); }
  bool is_trivial() const { return elems.size() == 1; }
  bool is_full() const { return parent && elems.size() == parent->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent == b.parent && a.elems == b.elems;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  }
};

Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);
/// Closure of the given element indices.
Subgroup generated_subgroup(const Group& G, const std::vector<uint32_t>& gens);
Subgroup subgroup_from_bits(const Group& G, Bitset bits);

/// Complete subgroup lattice: every subgroup exactly once, including the
/// trivial subgroup and G itself, sorted by (order, element list).
struct Lattice {
  const Group* parent = nullptr;
  std::vector<Subgroup> subs;
  std::vector<uint32_t> class_of;               // conjugacy class id per subgroup
  std::vector<std::vector<uint32_t>> classes;   // subgroup ids per class, sorted

  /// Lattice id of a subgroup given by bitset; throws if absent.
  uint32_t id_of(const Bitset& b) const;

  std::unordered_map<Bitset, uint32_t, BitsetHash> index;
};

/// Enumerates every subgroup of G. Requires G.order() <= cap. The
/// enumeration seeds all cyclic subgroups, then repeatedly joins conjugacy
/// class representatives with cyclic subgroups and closes under
/// conjugation, which reaches every subgroup (each subgroup is a chain of
/// cyclic extensions, and the operation commutes with conjugation).
Lattice all_subgroups(const Group& G, uint64_t cap = 10000);

/// Independent oracle enumeration for |G| <= 200: closures of all <= 2
/// element subsets, then pairwise-join fixed point. Same result contract
/// as all_subgroups, reached by a different route.
Lattice lattice_oracle(const Group& G, uint64_t max_order = 200);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& s, uint32_t g);
/// Full conjugation orbit, deduplicated, sorted.
std::vector<Subgroup> conjugates(const Subgroup& s);
Subgroup normalizer(const Subgroup& s);
Subgroup centralizer(const Group& G, uint32_t x);

/// Ids of maximal subgroups: proper nontrivial subgroups contained in no
/// larger proper subgroup.
std::vector<uint32_t> maximal_ids(const Lattice& lat);

/// Element indices of order 2, ascending.
std::vector<uint32_t> involutions(const Subgroup& s);

/// Subgroup generated by two involutions; always dihedral (order 2 allowed
/// when x = y). Throws std::invalid_argument on non-involutions.
Subgroup dihedral_join(const Group& G, uint32_t x, uint32_t y);

struct DoubleCountReport {
  uint64_t h_orbit = 0;           // |H^G|
  uint64_t m_orbit = 0;           // |M^G|
  uint64_t m_containing_h = 0;    // #{M' in M^G : H <= M'}
  uint64_t h_inside_m = 0;        // #{H' in H^G : H' <= M}
  uint64_t pairs = 0;             // #{(H', M') : H' <= M'}
  bool passed = false;            // both products equal pairs
};

/// Brute-force check of the counting identity
/// #{M' : H <= M'} * |H^G| = #pairs = |M^G| * #{H' : H' <= M}.
DoubleCountReport double_count_check(const Subgroup& H, const Subgroup& M);

struct DoubleCountSweep {
  uint64_t class_pairs = 0;    // (class of H, class of M) combinations touched
  uint64_t pairs_checked = 0;  // individual H <= M containments verified
  uint64_t failures = 0;
  bool passed = false;
};

/// Verifies the counting identity for every containment pair H <= M in the
/// lattice (containment matrices are shared across a conjugacy-class pair,
/// and one representative pair per class pair is re-run through
/// double_count_check as a cross-check).
DoubleCountSweep double_count_sweep(const Lattice& lat);

}  // namespace intergraph::permgrp
