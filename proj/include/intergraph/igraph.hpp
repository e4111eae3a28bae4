#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "intergraph/bitset.hpp"
#include "intergraph/lattice.hpp"

namespace intergraph::igraph {

using permgrp::Group;
using permgrp::Lattice;
using permgrp::Subgroup;

inline constexpr uint32_t kUnreachable = UINT32_MAX;

/// Intersection graph on the proper nontrivial subgroups of a group: two
/// distinct subgroups are adjacent exactly when their intersection has
/// order > 1. Vertices inherit the lattice's deterministic order.
struct IntersectionGraph {
  const Group* parent = nullptr;
  const Lattice* lattice = nullptr;
  std::vector<uint32_t> lattice_ids;  // vertex -> lattice id
  std::vector<uint32_t> vertex_of;    // lattice id -> vertex (kUnreachable if none)
  std::vector<Bitset> adj;            // symmetric, irreflexive
  uint64_t edges = 0;

  uint32_t vertex_count() const { return uint32_t(lattice_ids.size()); }
  const Subgroup& subgroup(uint32_t v) const { return lattice->subs[lattice_ids[v]]; }
  bool adjacent(uint32_t u, uint32_t v) const { return adj[u].test(v); }
};

/// Builds the graph from a complete lattice. Throws std::invalid_argument
/// when fewer than 2 proper nontrivial subgroups exist (degenerate).
IntersectionGraph build(const Lattice& lat);

/// BFS layer distances from src (kUnreachable where not connected).
std::vector<uint32_t> bfs_distances(const IntersectionGraph& g, uint32_t src);

/// BFS distance between two vertices; kUnreachable when disconnected.
uint32_t distance(const IntersectionGraph& g, uint32_t u, uint32_t v);

struct DiameterResult {
  bool connected = false;
  uint32_t component_count = 0;
  std::vector<uint32_t> component_sizes;  // descending
  uint32_t diameter = 0;                  // valid when connected
  std::array<uint32_t, 2> attaining{0, 0};  // lexicographically least pair
};

/// All-pairs BFS diameter with one attaining pair; sources are distributed
/// across workers (0 = hardware), with a scheduling-independent reduction.
/// Disconnected graphs report component structure instead.
DiameterResult diameter(const IntersectionGraph& g, unsigned workers = 0);

/// Independent diameter oracle: boolean powers of (A | I) until the
/// all-ones matrix appears (returns the first such exponent) or the powers
/// stabilize short of it (disconnected: returns kUnreachable).
uint32_t diameter_oracle(const IntersectionGraph& g);

/// Path plus the intervening intersections; self-validated on creation.
struct PathWitness {
  std::vector<uint32_t> vertices;
  std::vector<Subgroup> intersections;  // one per consecutive pair, nontrivial
};

/// Shortest path witness; throws std::invalid_argument when u, v are in
/// different components.
PathWitness shortest_path(const IntersectionGraph& g, uint32_t u, uint32_t v);

struct MaximalInducedReport {
  std::vector<uint32_t> maximal_vertices;  // graph vertex ids, ascending
  bool connected = false;
  uint32_t diameter = 0;
  std::array<uint32_t, 2> attaining{0, 0};  // vertex ids within the full graph
  bool every_vertex_near_maximal = false;
  bool within_bound = false;  // induced diameter <= 62
  bool passed = false;
};

/// Subgraph induced by the maximal subgroups: connectivity, diameter (must
/// be <= 62), and the fact that every vertex of the full graph is adjacent
/// to (or is) a maximal subgroup.
MaximalInducedReport maximal_induced(const IntersectionGraph& g,
                                     const std::vector<uint32_t>& maximal_lattice_ids);

struct BandReport {
  bool connected = false;
  uint32_t component_count = 0;
  uint32_t diameter = 0;
  std::array<uint32_t, 2> attaining{0, 0};
  uint32_t upper = 5;              // tightened to 4 where applicable
  bool all_maximals_even = false;  // every maximal subgroup has even order
  bool lower_ok = false;           // diameter >= 3
  bool upper_ok = false;
  bool passed = false;
  std::string failure;  // human-readable counterexample when !passed
};

/// The theorem band for simple groups: connected and 3 <= diam <= 5, with
/// the bound tightened to 4 for alternating groups and whenever every
/// maximal subgroup has even order. Throws std::invalid_argument unless
/// the caller flags the group simple.
BandReport check_theorem_band(const IntersectionGraph& g, bool simple, bool alternating,
                              unsigned workers = 0);

struct DihedralReport {
  uint64_t even_maximal_count = 0;
  uint64_t pairs_checked = 0;
  // Orders |<x,y>| of the found connectors, as (order, #pairs) ascending.
  std::vector<std::pair<uint64_t, uint64_t>> witness_order_histogram;
  std::vector<std::array<uint32_t, 2>> failures;  // vertex pairs lacking a connector
  bool passed = false;
};

/// For every unordered pair of even-order maximal subgroups (including
/// equal pairs), finds involutions x in M1 and y in M2 generating a proper
/// subgroup, certifying d(M1, M2) <= 2.
DihedralReport dihedral_connector_check(const IntersectionGraph& g);

struct L2qReport {
  uint32_t q = 0;
  uint64_t stab_order = 0;
  bool stab_order_odd = false;
  bool orbit_stabilizer_ok = false;  // stab order * (q+1) = |G|
  uint64_t pairs = 0;
  uint64_t nontrivial_pairs = 0;
  bool passed = false;
};

/// Point-stabilizer geometry of PSL(2,q) in its natural action, q in
/// {7, 11, 19}: every stabilizer has odd order q(q-1)/2 and every pair of
/// stabilizers intersects nontrivially. Works straight from the group
/// action; no lattice needed.
L2qReport l2q_pointstab_check(const Group& g, uint32_t q);

}  // namespace intergraph::igraph
