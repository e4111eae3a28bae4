#include "intergraph/igraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace intergraph::igraph {

namespace {

bool is_proper_nontrivial(const Subgroup& s, uint64_t parent_order) {
  return s.order() > 1 && s.order() < parent_order;
}

void check_vertex(const IntersectionGraph& g, uint32_t v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
}

// BFS with distance labels; also the engine for the induced variant (mask
// restricts the reachable set when provided).
std::vector<uint32_t> bfs_impl(const IntersectionGraph& g, uint32_t src, const Bitset* mask) {
  const uint32_t n = g.vertex_count();
  std::vector<uint32_t> dist(n, kUnreachable);
  Bitset visited(n), frontier(n);
  dist[src] = 0;
  visited.set(src);
  frontier.set(src);
  uint32_t d = 0;
  while (!frontier.none()) {
    Bitset reach(n);
    for (uint32_t v : frontier.to_indices()) reach |= g.adj[v];
    if (mask) reach &= *mask;
    Bitset next(n);
    ++d;
    for (uint32_t u : reach.to_indices()) {
      if (!visited.test(u)) {
        visited.set(u);
        dist[u] = d;
        next.set(u);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

struct Extremum {
  uint32_t diam = 0;
  std::array<uint32_t, 2> pair{0, 0};
  bool seen = false;

  void offer(uint32_t d, std::array<uint32_t, 2> p) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    if (!seen || d > diam || (d == diam && p < pair)) {
      diam = d;
      pair = p;
      seen = true;
    }
  }
  void merge(const Extremum& o) {
    if (o.seen) offer(o.diam, o.pair);
  }
};

// Farthest-pair scan over the given sources; deterministic regardless of
// how sources are split across workers (max-reduce with lexicographic
// tie-break on the attaining pair).
Extremum eccentricity_scan(const IntersectionGraph& g, const std::vector<uint32_t>& sources,
                           const Bitset* mask, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, unsigned(std::max<size_t>(1, sources.size())));
  std::vector<uint32_t> targets;
  if (mask) {
    targets = mask->to_indices();
  } else {
    targets.resize(g.vertex_count());
    for (uint32_t x = 0; x < g.vertex_count(); ++x) targets[x] = x;
  }
  std::vector<Extremum> local(workers);
  auto run = [&](unsigned w) {
    for (size_t i = w; i < sources.size(); i += workers) {
      uint32_t src = sources[i];
      auto dist = bfs_impl(g, src, mask);
      uint32_t best = 0, arg = src;
      for (uint32_t v : targets) {
        if (dist[v] != kUnreachable && dist[v] > best) {
          best = dist[v];
          arg = v;
        }
      }
      local[w].offer(best, {src, arg});
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Extremum out;
  for (const auto& l : local) out.merge(l);
  return out;
}

}  // namespace

IntersectionGraph build(const Lattice& lat) {
  IntersectionGraph g;
  g.parent = lat.parent;
  g.lattice = &lat;
  const uint64_t full = lat.parent->order();
  g.vertex_of.assign(lat.subs.size(), kUnreachable);
  for (uint32_t i = 0; i < lat.subs.size(); ++i) {
    if (is_proper_nontrivial(lat.subs[i], full)) {
      g.vertex_of[i] = uint32_t(g.lattice_ids.size());
      g.lattice_ids.push_back(i);
    }
  }
  const uint32_t n = g.vertex_count();
  if (n < 2)
    throw std::invalid_argument(
        "degenerate intersection graph: fewer than 2 proper nontrivial subgroups");
  g.adj.assign(n, Bitset(n));
  for (uint32_t i = 0; i < n; ++i) {
    const Bitset& bi = lat.subs[g.lattice_ids[i]].bits;
    for (uint32_t j = i + 1; j < n; ++j) {
      if (bi.count_and(lat.subs[g.lattice_ids[j]].bits) > 1) {
        g.adj[i].set(j);
        g.adj[j].set(i);
        ++g.edges;
      }
    }
  }
  return g;
}

std::vector<uint32_t> bfs_distances(const IntersectionGraph& g, uint32_t src) {
  check_vertex(g, src);
  return bfs_impl(g, src, nullptr);
}

uint32_t distance(const IntersectionGraph& g, uint32_t u, uint32_t v) {
  check_vertex(g, u);
  check_vertex(g, v);
  return bfs_impl(g, u, nullptr)[v];
}

DiameterResult diameter(const IntersectionGraph& g, unsigned workers) {
  DiameterResult r;
  const uint32_t n = g.vertex_count();
  // Component structure first (cheap single-threaded sweep).
  std::vector<uint32_t> comp(n, kUnreachable);
  for (uint32_t s = 0; s < n; ++s) {
    if (comp[s] != kUnreachable) continue;
    auto dist = bfs_impl(g, s, nullptr);
    for (uint32_t v = 0; v < n; ++v)
      if (dist[v] != kUnreachable) comp[v] = r.component_count;
    ++r.component_count;
  }
  r.component_sizes.assign(r.component_count, 0);
  for (uint32_t v = 0; v < n; ++v) ++r.component_sizes[comp[v]];
  std::sort(r.component_sizes.rbegin(), r.component_sizes.rend());
  r.connected = r.component_count == 1;
  if (!r.connected) return r;

  std::vector<uint32_t> sources(n);
  for (uint32_t v = 0; v < n; ++v) sources[v] = v;
  Extremum e = eccentricity_scan(g, sources, nullptr, workers);
  r.diameter = e.diam;
  r.attaining = e.pair;
  return r;
}

uint32_t diameter_oracle(const IntersectionGraph& g) {
  const uint32_t n = g.vertex_count();
  if (n == 1) return 0;
  // Base = A | I; rows of successive boolean powers accumulate reachability.
  std::vector<Bitset> base(n, Bitset(n));
  for (uint32_t v = 0; v < n; ++v) {
    base[v] = g.adj[v];
    base[v].set(v);
  }
  auto all_ones = [&](const std::vector<Bitset>& m) {
    for (uint32_t v = 0; v < n; ++v)
      if (m[v].count() != n) return false;
    return true;
  };
  std::vector<Bitset> power = base;
  uint32_t k = 1;
  while (!all_ones(power)) {
    // power <- power * base (boolean product: OR of base rows selected by
    // the bits of each power row).
    std::vector<Bitset> next(n, Bitset(n));
    for (uint32_t v = 0; v < n; ++v)
      for (uint32_t u : power[v].to_indices()) next[v] |= base[u];
    if (next == power) return kUnreachable;  // stabilized short of all-ones
    power = std::move(next);
    ++k;
  }
  return k;
}

PathWitness shortest_path(const IntersectionGraph& g, uint32_t u, uint32_t v) {
  check_vertex(g, u);
  check_vertex(g, v);
  // BFS with first-discoverer parents: frontier and neighbor scans both run
  // in ascending vertex order, so the witness is deterministic.
  const uint32_t n = g.vertex_count();
  std::vector<uint32_t> parent(n, kUnreachable), dist(n, kUnreachable);
  dist[u] = 0;
  std::vector<uint32_t> frontier = {u};
  while (!frontier.empty() && dist[v] == kUnreachable) {
    std::vector<uint32_t> next;
    for (uint32_t a : frontier) {
      for (uint32_t b : g.adj[a].to_indices()) {
        if (dist[b] == kUnreachable && b != u) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          next.push_back(b);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (dist[v] == kUnreachable)
    throw std::invalid_argument("no path: vertices lie in different components");

  PathWitness w;
  for (uint32_t cur = v; cur != u; cur = parent[cur]) w.vertices.push_back(cur);
  w.vertices.push_back(u);
  std::reverse(w.vertices.begin(), w.vertices.end());
  // Self-validation: consecutive adjacency and nontrivial intersections.
  for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    uint32_t a = w.vertices[i], b = w.vertices[i + 1];
    if (!g.adjacent(a, b)) throw std::logic_error("path witness: non-adjacent step");
    Subgroup inter = permgrp::intersect(g.subgroup(a), g.subgroup(b));
    if (inter.order() <= 1) throw std::logic_error("path witness: trivial intersection");
    w.intersections.push_back(std::move(inter));
  }
  if (w.vertices.size() != size_t(dist[v]) + 1)
    throw std::logic_error("path witness: length does not match distance");
  return w;
}

MaximalInducedReport maximal_induced(const IntersectionGraph& g,
                                     const std::vector<uint32_t>& maximal_lattice_ids) {
  MaximalInducedReport r;
  const uint32_t n = g.vertex_count();
  Bitset mask(n);
  for (uint32_t id : maximal_lattice_ids) {
    uint32_t v = g.vertex_of.at(id);
    if (v == kUnreachable) throw std::invalid_argument("maximal subgroup is not a vertex");
    mask.set(v);
    r.maximal_vertices.push_back(v);
  }
  std::sort(r.maximal_vertices.begin(), r.maximal_vertices.end());
  if (r.maximal_vertices.empty()) throw std::invalid_argument("no maximal subgroups given");

  // Every vertex is a maximal or adjacent to one (containment edge rule).
  r.every_vertex_near_maximal = true;
  for (uint32_t v = 0; v < n; ++v) {
    if (!mask.test(v) && g.adj[v].count_and(mask) == 0) {
      r.every_vertex_near_maximal = false;
      break;
    }
  }

  // Connectivity and diameter inside the induced subgraph.
  auto dist0 = bfs_impl(g, r.maximal_vertices[0], &mask);
  r.connected = true;
  for (uint32_t v : r.maximal_vertices)
    if (dist0[v] == kUnreachable) r.connected = false;
  if (r.connected) {
    Extremum e = eccentricity_scan(g, r.maximal_vertices, &mask, 0);
    r.diameter = e.diam;
    r.attaining = e.pair;
    r.within_bound = r.diameter <= 62;
  }
  r.passed = r.connected && r.within_bound && r.every_vertex_near_maximal;
  return r;
}

BandReport check_theorem_band(const IntersectionGraph& g, bool simple, bool alternating,
                              unsigned workers) {
  if (!simple)
    throw std::invalid_argument("theorem band applies to simple groups only");
  BandReport r;
  DiameterResult d = diameter(g, workers);
  r.connected = d.connected;
  r.component_count = d.component_count;
  if (!d.connected) {
    r.failure = "graph disconnected: " + std::to_string(d.component_count) + " components";
    return r;
  }
  r.diameter = d.diameter;
  r.attaining = d.attaining;

  r.all_maximals_even = true;
  for (uint32_t id : permgrp::maximal_ids(*g.lattice))
    if (g.lattice->subs[id].order() % 2 != 0) r.all_maximals_even = false;

  r.upper = 5;
  if (alternating) r.upper = 4;
  if (r.all_maximals_even) r.upper = std::min<uint32_t>(r.upper, 4);
  r.lower_ok = r.diameter >= 3;
  r.upper_ok = r.diameter <= r.upper;
  r.passed = r.lower_ok && r.upper_ok;
  if (!r.passed) {
    r.failure = "diameter " + std::to_string(r.diameter) + " outside [3, " +
                std::to_string(r.upper) + "]; attaining vertices " +
                std::to_string(r.attaining[0]) + " and " + std::to_string(r.attaining[1]) +
                " with subgroup orders " + std::to_string(g.subgroup(r.attaining[0]).order()) +
                " and " + std::to_string(g.subgroup(r.attaining[1]).order());
  }
  return r;
}

DihedralReport dihedral_connector_check(const IntersectionGraph& g) {
  DihedralReport r;
  const Group& G = *g.parent;
  struct EvenMax {
    uint32_t vertex;
    const Subgroup* sub;
    std::vector<uint32_t> invs;
  };
  std::vector<EvenMax> evens;
  for (uint32_t id : permgrp::maximal_ids(*g.lattice)) {
    const Subgroup& s = g.lattice->subs[id];
    if (s.order() % 2 != 0) continue;
    evens.push_back({g.vertex_of[id], &s, permgrp::involutions(s)});
  }
  r.even_maximal_count = evens.size();

  std::map<uint64_t, uint64_t> histogram;
  for (size_t i = 0; i < evens.size(); ++i) {
    for (size_t j = i; j < evens.size(); ++j) {
      ++r.pairs_checked;
      uint64_t found = 0;
      // A shared involution settles the pair with D = <z> of order 2.
      Bitset shared = evens[i].sub->bits & evens[j].sub->bits;
      for (uint32_t z : shared.to_indices()) {
        if (G.element_order(z) == 2) {
          found = 2;
          break;
        }
      }
      if (!found) {
        for (uint32_t x : evens[i].invs) {
          for (uint32_t y : evens[j].invs) {
            Subgroup d = permgrp::dihedral_join(G, x, y);
            if (d.order() < G.order()) {
              found = d.order();
              break;
            }
          }
          if (found) break;
        }
      }
      if (found)
        ++histogram[found];
      else
        r.failures.push_back({evens[i].vertex, evens[j].vertex});
    }
  }
  r.witness_order_histogram.assign(histogram.begin(), histogram.end());
  r.passed = r.failures.empty();
  return r;
}

L2qReport l2q_pointstab_check(const Group& g, uint32_t q) {
  if (q != 7 && q != 11 && q != 19)
    throw std::invalid_argument("point-stabilizer check is specified for q in {7, 11, 19}");
  if (g.degree() != q + 1)
    throw std::invalid_argument("group degree must be q + 1");
  if (g.order() != uint64_t(q) * (q - 1) * (q + 1) / 2)
    throw std::invalid_argument("group order does not match |PSL(2,q)|");

  L2qReport r;
  r.q = q;
  const uint32_t points = q + 1;
  std::vector<Bitset> stab(points, Bitset(uint32_t(g.order())));
  std::vector<uint64_t> sizes(points, 0);
  for (uint32_t e = 0; e < g.order(); ++e) {
    const auto& p = g.element(e);
    for (uint32_t pt = 0; pt < points; ++pt) {
      if (p[pt] == pt) {
        stab[pt].set(e);
        ++sizes[pt];
      }
    }
  }
  r.stab_order = sizes[0];
  bool uniform = true;
  for (uint32_t pt = 0; pt < points; ++pt)
    if (sizes[pt] != r.stab_order) uniform = false;
  r.stab_order_odd = r.stab_order % 2 == 1;
  r.orbit_stabilizer_ok = uniform && r.stab_order * points == g.order() &&
                          r.stab_order == uint64_t(q) * (q - 1) / 2;

  for (uint32_t a = 0; a < points; ++a) {
    for (uint32_t b = a + 1; b < points; ++b) {
      ++r.pairs;
      // The identity fixes everything, so nontrivial means >= 2 in common.
      if (stab[a].count_and(stab[b]) >= 2) ++r.nontrivial_pairs;
    }
  }
  r.passed = r.stab_order_odd && r.orbit_stabilizer_ok && r.nontrivial_pairs == r.pairs;
  return r;
}

}  // namespace intergraph::igraph
