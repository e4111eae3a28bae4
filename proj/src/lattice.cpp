#include "intergraph/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace intergraph::permgrp {

namespace {

Subgroup make_subgroup(const Group& G, Bitset bits) {
  Subgroup s;
  s.parent = &G;
  s.elems = bits.to_indices();
  s.bits = std::move(bits);
  return s;
}

}  // namespace

Subgroup trivial_subgroup(const Group& G) {
  Bitset b(uint32_t(G.order()));
  b.set(0);
  return make_subgroup(G, std::move(b));
}

Subgroup full_subgroup(const Group& G) {
  Bitset b(uint32_t(G.order()));
  for (uint32_t i = 0; i < G.order(); ++i) b.set(i);
  return make_subgroup(G, std::move(b));
}

Subgroup generated_subgroup(const Group& G, const std::vector<uint32_t>& gens) {
  Bitset b(uint32_t(G.order()));
  b.set(0);
  std::vector<uint32_t> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (uint32_t g : gens) {
      uint32_t t = G.mul(queue[qi], g);
      if (!b.test(t)) {
        b.set(t);
        queue.push_back(t);
      }
    }
  }
  return make_subgroup(G, std::move(b));
}

Subgroup subgroup_from_bits(const Group& G, Bitset bits) {
  if (!bits.test(0)) throw std::invalid_argument("subgroup must contain the identity");
  return make_subgroup(G, std::move(bits));
}

uint32_t Lattice::id_of(const Bitset& b) const {
  auto it = index.find(b);
  if (it == index.end()) throw std::invalid_argument("subgroup not in lattice");
  return it->second;
}

Lattice all_subgroups(const Group& G, uint64_t cap) {
  if (G.order() > cap)
    throw CapExceeded("group order " + std::to_string(G.order()) +
                          " exceeds lattice cap " + std::to_string(cap),
                      G.order());
  const uint32_t n = uint32_t(G.order());
  const uint64_t half = G.order() / 2;

  struct Rec {
    Bitset bits;
    std::vector<uint32_t> gens;  // generating elements (reps only need these)
  };
  std::vector<Rec> recs;
  std::unordered_map<Bitset, uint32_t, BitsetHash> seen;
  auto add = [&](Bitset b, std::vector<uint32_t> gens) -> std::pair<uint32_t, bool> {
    auto it = seen.find(b);
    if (it != seen.end()) return {it->second, false};
    uint32_t id = uint32_t(recs.size());
    seen.emplace(b, id);
    recs.push_back({std::move(b), std::move(gens)});
    return {id, true};
  };

  {
    Bitset t(n);
    t.set(0);
    add(std::move(t), {});
    Bitset f(n);
    for (uint32_t i = 0; i < n; ++i) f.set(i);
    add(std::move(f), {});
  }

  // Cyclic seeds; each distinct cyclic subgroup with one generator.
  std::vector<std::pair<uint32_t, uint32_t>> atoms;  // (id, generator element)
  for (uint32_t a = 1; a < n; ++a) {
    Bitset b(n);
    b.set(0);
    for (uint32_t x = a; x != 0; x = G.mul(x, a)) b.set(x);
    auto [id, is_new] = add(std::move(b), {a});
    if (is_new) atoms.push_back({id, a});
  }

  // Joins a known subgroup with one extra generator via coset accumulation;
  // returns nothing when the join is the whole group (detected early: a
  // proper subgroup has order at most |G|/2).
  auto join = [&](const Rec& H, uint32_t c)
      -> std::optional<std::pair<Bitset, std::vector<uint32_t>>> {
    std::vector<uint32_t> gens = H.gens;
    gens.push_back(c);
    Bitset J = H.bits;
    std::vector<uint32_t> hlist = H.bits.to_indices();
    uint64_t size = hlist.size();
    std::vector<uint32_t> reps = {0};
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      uint32_t r = reps[ri];
      for (uint32_t g : gens) {
        uint32_t t = G.mul(r, g);
        if (J.test(t)) continue;
        size += hlist.size();
        if (size > half) return std::nullopt;
        for (uint32_t h : hlist) J.set(G.mul(h, t));
        reps.push_back(t);
      }
    }
    return std::make_pair(std::move(J), std::move(gens));
  };

  std::vector<int32_t> cls;  // conjugacy class per id, -1 = unassigned
  std::vector<std::vector<uint32_t>> classes;
  auto close_orbit = [&](uint32_t id) {
    if (size_t(id) < cls.size() && cls[id] >= 0) return;
    uint32_t cid = uint32_t(classes.size());
    classes.emplace_back();
    std::vector<uint32_t> queue = {id};
    auto assign = [&](uint32_t sid) {
      if (cls.size() < recs.size()) cls.resize(recs.size(), -1);
      cls[sid] = int32_t(cid);
      classes[cid].push_back(sid);
    };
    assign(id);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      // Copy out the element list before add() can grow (and reallocate) recs.
      auto cur_elems = recs[queue[qi]].bits.to_indices();
      for (uint32_t g : G.generator_indices()) {
        Bitset c(n);
        for (uint32_t e : cur_elems) c.set(G.conj(e, g));
        auto [sid, is_new] = add(std::move(c), {});
        if (is_new || cls[sid] < 0) {
          if (is_new) cls.resize(recs.size(), -1);
          if (cls[sid] < 0) {
            assign(sid);
            queue.push_back(sid);
          }
        }
      }
    }
  };

  // Main loop: every record gets its conjugacy orbit closed; the first
  // member of each class (which always carries generators) is extended by
  // every cyclic seed.
  for (uint32_t qi = 0; qi < recs.size(); ++qi) {
    if (cls.size() < recs.size()) cls.resize(recs.size(), -1);
    bool is_rep = cls[qi] < 0;
    close_orbit(qi);
    if (!is_rep) continue;
    const uint64_t qorder = recs[qi].bits.count();
    if (qorder <= 1 || qorder == G.order()) continue;  // atoms cover trivial extensions
    for (const auto& [aid, a] : atoms) {
      if (recs[qi].bits.test(a)) continue;
      auto j = join(recs[qi], a);
      if (!j) continue;
      add(std::move(j->first), std::move(j->second));
    }
    if (recs.size() > 2000000)
      throw CapExceeded("subgroup count safety bound exceeded", recs.size());
  }

  // Canonical order: (order, element list), with class structure remapped.
  std::vector<uint32_t> perm(recs.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<uint32_t>> elem_lists(recs.size());
  for (size_t i = 0; i < recs.size(); ++i) elem_lists[i] = recs[i].bits.to_indices();
  std::sort(perm.begin(), perm.end(), [&](uint32_t a, uint32_t b) {
    if (elem_lists[a].size() != elem_lists[b].size())
      return elem_lists[a].size() < elem_lists[b].size();
    return elem_lists[a] < elem_lists[b];
  });

  Lattice lat;
  lat.parent = &G;
  lat.subs.reserve(recs.size());
  std::vector<uint32_t> new_id(recs.size());
  for (uint32_t i = 0; i < perm.size(); ++i) {
    new_id[perm[i]] = i;
    Subgroup s;
    s.parent = &G;
    s.elems = std::move(elem_lists[perm[i]]);
    s.bits = std::move(recs[perm[i]].bits);
    lat.index.emplace(s.bits, i);
    lat.subs.push_back(std::move(s));
  }
  lat.class_of.resize(recs.size());
  // Class ids ordered by their smallest member in the new numbering.
  std::vector<std::vector<uint32_t>> remapped(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    for (uint32_t old : classes[c]) remapped[c].push_back(new_id[old]);
    std::sort(remapped[c].begin(), remapped[c].end());
  }
  std::sort(remapped.begin(), remapped.end());
  lat.classes = std::move(remapped);
  for (uint32_t c = 0; c < lat.classes.size(); ++c)
    for (uint32_t id : lat.classes[c]) lat.class_of[id] = c;
  return lat;
}

Lattice lattice_oracle(const Group& G, uint64_t max_order) {
  if (G.order() > max_order)
    throw CapExceeded("oracle enumeration limited to order " + std::to_string(max_order),
                      G.order());
  const uint32_t n = uint32_t(G.order());

  struct Rec {
    Bitset bits;
    std::vector<uint32_t> gens;
  };
  std::vector<Rec> recs;
  std::unordered_map<Bitset, uint32_t, BitsetHash> seen;
  auto close = [&](std::vector<uint32_t> gens) {
    Subgroup s = generated_subgroup(G, gens);
    if (seen.emplace(s.bits, uint32_t(recs.size())).second)
      recs.push_back({s.bits, std::move(gens)});
  };

  close({});
  for (uint32_t a = 0; a < n; ++a) close({a});
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b) close({a, b});

  // Pairwise-join fixed point: new entries join against all earlier ones.
  for (size_t i = 1; i < recs.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (recs[i].bits.subset_of(recs[j].bits) || recs[j].bits.subset_of(recs[i].bits))
        continue;
      std::vector<uint32_t> gens = recs[i].gens;
      gens.insert(gens.end(), recs[j].gens.begin(), recs[j].gens.end());
      close(std::move(gens));
    }
  }

  Lattice lat;
  lat.parent = &G;
  for (auto& r : recs) lat.subs.push_back(make_subgroup(G, std::move(r.bits)));
  std::sort(lat.subs.begin(), lat.subs.end());
  for (uint32_t i = 0; i < lat.subs.size(); ++i) lat.index.emplace(lat.subs[i].bits, i);
  // Oracle lattices do not carry class structure (kept minimal on purpose).
  lat.class_of.assign(lat.subs.size(), 0);
  return lat;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw std::invalid_argument("subgroups of different groups");
  return make_subgroup(*a.parent, a.bits & b.bits);
}

Subgroup conjugate_subgroup(const Subgroup& s, uint32_t g) {
  const Group& G = *s.parent;
  Bitset b(uint32_t(G.order()));
  for (uint32_t e : s.elems) b.set(G.conj(e, g));
  return make_subgroup(G, std::move(b));
}

std::vector<Subgroup> conjugates(const Subgroup& s) {
  const Group& G = *s.parent;
  std::unordered_set<Bitset, BitsetHash> visited{s.bits};
  std::vector<Subgroup> orbit = {s};
  for (size_t qi = 0; qi < orbit.size(); ++qi) {
    for (uint32_t g : G.generator_indices()) {
      Subgroup c = conjugate_subgroup(orbit[qi], g);
      if (visited.insert(c.bits).second) orbit.push_back(std::move(c));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

Subgroup normalizer(const Subgroup& s) {
  const Group& G = *s.parent;
  Bitset b(uint32_t(G.order()));
  for (uint32_t g = 0; g < G.order(); ++g) {
    bool stable = true;
    for (uint32_t e : s.elems) {
      if (!s.bits.test(G.conj(e, g))) {
        stable = false;
        break;
      }
    }
    if (stable) b.set(g);
  }
  return make_subgroup(G, std::move(b));
}

Subgroup centralizer(const Group& G, uint32_t x) {
  Bitset b(uint32_t(G.order()));
  for (uint32_t g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) b.set(g);
  return make_subgroup(G, std::move(b));
}

std::vector<uint32_t> maximal_ids(const Lattice& lat) {
  std::vector<uint32_t> out;
  const uint64_t full = lat.parent->order();
  for (uint32_t i = 0; i < lat.subs.size(); ++i) {
    const Subgroup& s = lat.subs[i];
    if (s.order() <= 1 || s.order() >= full) continue;
    bool maximal = true;
    for (uint32_t j = 0; j < lat.subs.size() && maximal; ++j) {
      const Subgroup& t = lat.subs[j];
      if (t.order() <= s.order() || t.order() >= full) continue;
      if (t.order() % s.order() != 0) continue;
      if (s.bits.subset_of(t.bits)) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<uint32_t> involutions(const Subgroup& s) {
  std::vector<uint32_t> out;
  for (uint32_t e : s.elems)
    if (s.parent->element_order(e) == 2) out.push_back(e);
  return out;
}

Subgroup dihedral_join(const Group& G, uint32_t x, uint32_t y) {
  if (G.element_order(x) != 2 || G.element_order(y) != 2)
    throw std::invalid_argument("dihedral_join requires involutions");
  return generated_subgroup(G, {x, y});
}

DoubleCountReport double_count_check(const Subgroup& H, const Subgroup& M) {
  if (H.parent != M.parent) throw std::invalid_argument("subgroups of different groups");
  if (!H.bits.subset_of(M.bits)) throw std::invalid_argument("double count requires H <= M");
  auto horb = conjugates(H);
  auto morb = conjugates(M);

  DoubleCountReport r;
  r.h_orbit = horb.size();
  r.m_orbit = morb.size();
  for (const auto& m : morb)
    if (H.bits.subset_of(m.bits)) ++r.m_containing_h;
  for (const auto& h : horb)
    if (h.bits.subset_of(M.bits)) ++r.h_inside_m;
  for (const auto& h : horb)
    for (const auto& m : morb)
      if (h.bits.subset_of(m.bits)) ++r.pairs;
  r.passed = (r.m_containing_h * r.h_orbit == r.pairs) && (r.m_orbit * r.h_inside_m == r.pairs);
  return r;
}

DoubleCountSweep double_count_sweep(const Lattice& lat) {
  DoubleCountSweep r;
  const auto& subs = lat.subs;
  for (const auto& ch : lat.classes) {
    for (const auto& cm : lat.classes) {
      // Containment matrix for this class pair, with row/column sums.
      std::vector<uint64_t> rs(ch.size(), 0), cs(cm.size(), 0);
      uint64_t total = 0;
      for (size_t i = 0; i < ch.size(); ++i) {
        for (size_t j = 0; j < cm.size(); ++j) {
          if (subs[ch[i]].bits.subset_of(subs[cm[j]].bits)) {
            ++rs[i];
            ++cs[j];
            ++total;
          }
        }
      }
      if (total == 0) continue;
      ++r.class_pairs;
      bool cross_checked = false;
      for (size_t i = 0; i < ch.size(); ++i) {
        for (size_t j = 0; j < cm.size(); ++j) {
          if (!subs[ch[i]].bits.subset_of(subs[cm[j]].bits)) continue;
          ++r.pairs_checked;
          if (rs[i] * ch.size() != total || cs[j] * cm.size() != total) ++r.failures;
          if (!cross_checked) {
            // Re-derive one representative pair with the standalone op.
            DoubleCountReport rep = double_count_check(subs[ch[i]], subs[cm[j]]);
            if (!rep.passed || rep.pairs != total || rep.h_orbit != ch.size() ||
                rep.m_orbit != cm.size() || rep.m_containing_h != rs[i] ||
                rep.h_inside_m != cs[j])
              ++r.failures;
            cross_checked = true;
          }
        }
      }
    }
  }
  r.passed = r.failures == 0 && r.pairs_checked > 0;
  return r;
}

}  // namespace intergraph::permgrp
