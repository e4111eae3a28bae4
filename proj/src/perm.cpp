#include "intergraph/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace intergraph::permgrp {

Perm identity_perm(uint32_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), uint16_t(0));
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("degree mismatch in compose");
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse_perm(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = uint16_t(i);
  return c;
}

bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

Perm parse_cycles(const std::string& text, uint32_t degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> used(degree, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return p;  // empty = identity
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<uint32_t> cyc;
    while (true) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(uint8_t(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle: " + text);
      uint32_t v = 0;
      while (i < text.size() && std::isdigit(uint8_t(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw std::invalid_argument("point " + std::to_string(v) + " outside degree " +
                                    std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("repeated point " + std::to_string(v) + " in: " + text);
      used[v - 1] = true;
      cyc.push_back(v - 1);
      if (i < text.size() && text[i] == ',') ++i;  // tolerate comma separators
    }
    for (size_t j = 0; j < cyc.size(); ++j) p[cyc[j]] = uint16_t(cyc[(j + 1) % cyc.size()]);
  }
  skip_ws();
  if (i != text.size()) throw std::invalid_argument("trailing input in cycle notation: " + text);
  return p;
}

std::string cycle_string(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.size(), false);
  for (size_t start = 0; start < a.size(); ++start) {
    if (seen[start] || a[start] == start) continue;
    out += '(';
    size_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      seen[x] = true;
      first = false;
      x = a[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

uint64_t perm_order(const Perm& a) {
  uint64_t ord = 1;
  std::vector<bool> seen(a.size(), false);
  for (size_t start = 0; start < a.size(); ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    size_t x = start;
    do {
      seen[x] = true;
      ++len;
      x = a[x];
    } while (x != start);
    ord = std::lcm(ord, len);
  }
  return ord;
}

Group Group::generate(uint32_t degree, std::vector<Perm> gens, uint64_t cap) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");
    // Bijectivity check.
    std::vector<bool> hit(degree, false);
    for (uint16_t v : g) {
      if (v >= degree || hit[v]) throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }

  Group G;
  G.degree_ = degree;
  G.gens_ = gens;

  // Breadth-first closure under right multiplication by generators.
  std::vector<Perm> elems = {identity_perm(degree)};
  std::unordered_map<Perm, uint32_t, PermHash> index;
  index.emplace(elems[0], 0);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    Perm cur = elems[qi];  // copy: elems may reallocate
    for (const auto& g : gens) {
      Perm nxt = compose(cur, g);
      if (index.emplace(nxt, uint32_t(elems.size())).second) {
        elems.push_back(std::move(nxt));
        if (elems.size() > cap)
          throw CapExceeded("group order cap " + std::to_string(cap) +
                                " exceeded (reached " + std::to_string(elems.size()) +
                                " elements)",
                            elems.size());
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  G.elems_ = std::move(elems);
  G.index_.reserve(G.elems_.size());
  for (uint32_t i = 0; i < G.elems_.size(); ++i) G.index_.emplace(G.elems_[i], i);

  G.inv_.resize(G.elems_.size());
  for (uint32_t i = 0; i < G.elems_.size(); ++i)
    G.inv_[i] = G.index_.at(inverse_perm(G.elems_[i]));

  G.gen_idx_.reserve(gens.size());
  for (const auto& g : G.gens_) G.gen_idx_.push_back(G.index_.at(g));

  if (G.order() <= kCayleyCap) {
    // Row a of the table is the left-multiplication map L_a(b) = idx(a*b).
    // L is multiplicative (L_{a*g} = L_a then L_g pointwise), so rows for
    // the whole group follow from the generator rows by array composition,
    // avoiding hash lookups in the quadratic fill.
    size_t n = G.elems_.size();
    G.cayley_.assign(n * n, 0);
    std::vector<std::vector<uint16_t>> L_gen(gens.size(), std::vector<uint16_t>(n));
    std::vector<std::vector<uint16_t>> R_gen(gens.size(), std::vector<uint16_t>(n));
    for (size_t gi = 0; gi < gens.size(); ++gi)
      for (size_t b = 0; b < n; ++b) {
        L_gen[gi][b] = uint16_t(G.index_.at(compose(G.gens_[gi], G.elems_[b])));
        R_gen[gi][b] = uint16_t(G.index_.at(compose(G.elems_[b], G.gens_[gi])));
      }
    std::vector<char> done(n, 0);
    for (size_t b = 0; b < n; ++b) G.cayley_[0 * n + b] = uint16_t(b);  // identity row
    done[0] = 1;
    std::vector<uint32_t> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t a = queue[qi];
      const uint16_t* row_a = &G.cayley_[size_t(a) * n];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        uint32_t a2 = R_gen[gi][a];  // a2 = a * g
        if (done[a2]) continue;
        done[a2] = 1;
        uint16_t* row_a2 = &G.cayley_[size_t(a2) * n];
        const uint16_t* Lg = L_gen[gi].data();
        for (size_t b = 0; b < n; ++b) row_a2[b] = row_a[Lg[b]];
        queue.push_back(a2);
      }
    }
  }
  return G;
}

uint32_t Group::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("permutation not in group");
  return it->second;
}

}  // namespace intergraph::permgrp
