#include <algorithm>

#include "doctest.h"
#include "intergraph/igraph.hpp"
#include "intergraph/presets.hpp"

using namespace intergraph;
using namespace intergraph::igraph;
using permgrp::all_subgroups;
using permgrp::Group;
using permgrp::Lattice;
using permgrp::parse_cycles;

namespace {

struct Fixture {
  Group group;
  Lattice lat;
  IntersectionGraph graph;

  explicit Fixture(Group g) : group(std::move(g)), lat(all_subgroups(group)), graph(build(lat)) {}
};

Fixture preset_fixture(const std::string& name) {
  return Fixture(permgrp::build_group(permgrp::find_preset(name)));
}

}  // namespace

TEST_CASE("degenerate lattices are rejected") {
  // Prime order: no proper nontrivial subgroup at all.
  Group c5 = Group::generate(5, {parse_cycles("(1 2 3 4 5)", 5)});
  Lattice l5 = all_subgroups(c5);
  CHECK(l5.subs.size() == 2);
  CHECK_THROWS_AS(build(l5), std::invalid_argument);
  // C4 has exactly one proper nontrivial subgroup: still degenerate.
  Group c4 = Group::generate(4, {parse_cycles("(1 2 3 4)", 4)});
  Lattice l4 = all_subgroups(c4);
  CHECK(l4.subs.size() == 3);
  CHECK_THROWS_AS(build(l4), std::invalid_argument);
}

TEST_CASE("S3 graph: four isolated vertices") {
  Fixture f = preset_fixture("s3");
  CHECK(f.graph.vertex_count() == 4);
  CHECK(f.graph.edges == 0);
  DiameterResult d = diameter(f.graph);
  CHECK(!d.connected);
  CHECK(d.component_count == 4);
  CHECK(d.component_sizes == std::vector<uint32_t>{1, 1, 1, 1});
  CHECK(diameter_oracle(f.graph) == kUnreachable);
  CHECK(distance(f.graph, 0, 1) == kUnreachable);
  CHECK_THROWS_AS(shortest_path(f.graph, 0, 1), std::invalid_argument);
  // Non-simple control groups cannot claim the theorem band.
  CHECK_THROWS_AS(check_theorem_band(f.graph, false, false), std::invalid_argument);
}

TEST_CASE("A5 graph structure") {
  Fixture f = preset_fixture("a5");
  CHECK(f.graph.vertex_count() == 57);

  // Adjacency: symmetric, irreflexive, and exactly the nontrivial
  // intersection rule, re-derived via the subgroup machinery.
  for (uint32_t u = 0; u < 57; ++u) {
    CHECK(!f.graph.adjacent(u, u));
    for (uint32_t v = u + 1; v < 57; ++v) {
      bool expect =
          permgrp::intersect(f.graph.subgroup(u), f.graph.subgroup(v)).order() > 1;
      CHECK(f.graph.adjacent(u, v) == expect);
      CHECK(f.graph.adjacent(v, u) == expect);
    }
  }
  // Containment implies adjacency.
  for (uint32_t u = 0; u < 57; ++u)
    for (uint32_t v = u + 1; v < 57; ++v)
      if (f.graph.subgroup(u).bits.subset_of(f.graph.subgroup(v).bits))
        CHECK(f.graph.adjacent(u, v));

  DiameterResult d = diameter(f.graph);
  CHECK(d.connected);
  CHECK(d.diameter >= 3);
  CHECK(d.diameter <= 4);
  CHECK(diameter_oracle(f.graph) == d.diameter);
  CHECK(distance(f.graph, d.attaining[0], d.attaining[1]) == d.diameter);
  // Attaining pair is the lexicographically least over all pairs.
  bool found_smaller = false;
  for (uint32_t u = 0; u <= d.attaining[0] && !found_smaller; ++u) {
    auto dist = bfs_distances(f.graph, u);
    for (uint32_t v = u + 1; v < 57; ++v)
      if (dist[v] == d.diameter &&
          std::array<uint32_t, 2>{u, v} < d.attaining) {
        found_smaller = true;
        break;
      }
  }
  CHECK(!found_smaller);
}

TEST_CASE("distances: identity, adjacency, triangle inequality") {
  Fixture f = preset_fixture("a5");
  auto d0 = bfs_distances(f.graph, 0);
  CHECK(d0[0] == 0);
  for (uint32_t v = 0; v < f.graph.vertex_count(); ++v)
    CHECK((distance(f.graph, 0, v) == 1) == f.graph.adjacent(0, v));
  // Triangle inequality over a spread of triples.
  for (uint32_t a = 0; a < 57; a += 11) {
    auto da = bfs_distances(f.graph, a);
    for (uint32_t b = 0; b < 57; b += 7) {
      auto db = bfs_distances(f.graph, b);
      for (uint32_t c = 0; c < 57; c += 5) {
        CHECK(da[c] <= da[b] + db[c]);
      }
    }
  }
  CHECK_THROWS_AS(distance(f.graph, 0, 100), std::invalid_argument);
  CHECK_THROWS_AS(bfs_distances(f.graph, 100), std::invalid_argument);
}

TEST_CASE("diameter is worker-count independent") {
  Fixture f = preset_fixture("a5");
  DiameterResult one = diameter(f.graph, 1);
  DiameterResult three = diameter(f.graph, 3);
  CHECK(one.diameter == three.diameter);
  CHECK(one.attaining == three.attaining);
}

TEST_CASE("shortest path witnesses") {
  Fixture f = preset_fixture("a5");
  PathWitness self = shortest_path(f.graph, 4, 4);
  CHECK(self.vertices == std::vector<uint32_t>{4});
  CHECK(self.intersections.empty());

  uint32_t nbr = f.graph.adj[0].find_first();
  PathWitness adj = shortest_path(f.graph, 0, nbr);
  CHECK(adj.vertices == std::vector<uint32_t>{0, nbr});
  REQUIRE(adj.intersections.size() == 1);
  CHECK(adj.intersections[0].order() > 1);

  // Every witness matches the BFS distance and self-validates; sample all
  // targets from a few sources.
  for (uint32_t src = 0; src < 57; src += 13) {
    auto dist = bfs_distances(f.graph, src);
    for (uint32_t v = 0; v < 57; ++v) {
      PathWitness w = shortest_path(f.graph, src, v);
      CHECK(w.vertices.size() == dist[v] + 1);
      CHECK(w.vertices.front() == src);
      CHECK(w.vertices.back() == v);
      CHECK(w.intersections.size() + 1 == w.vertices.size());
      for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
        CHECK(f.graph.adjacent(w.vertices[i], w.vertices[i + 1]));
        CHECK(w.intersections[i].order() > 1);
      }
    }
  }
}

TEST_CASE("maximal induced subgraph of A5") {
  Fixture f = preset_fixture("a5");
  auto max_ids = permgrp::maximal_ids(f.lat);
  MaximalInducedReport r = maximal_induced(f.graph, max_ids);
  CHECK(r.maximal_vertices.size() == 21);
  CHECK(r.connected);
  CHECK(r.every_vertex_near_maximal);
  CHECK(r.within_bound);
  CHECK(r.passed);
  CHECK(r.diameter <= 62);
  // The attaining pair really consists of maximal vertices at that distance.
  CHECK(distance(f.graph, r.attaining[0], r.attaining[1]) <= r.diameter);
  CHECK(std::count(r.maximal_vertices.begin(), r.maximal_vertices.end(), r.attaining[0]) == 1);
  CHECK(std::count(r.maximal_vertices.begin(), r.maximal_vertices.end(), r.attaining[1]) == 1);
}

TEST_CASE("theorem band on A5 and PSL(2,7)") {
  Fixture a5 = preset_fixture("a5");
  BandReport r = check_theorem_band(a5.graph, true, true);
  CHECK(r.passed);
  CHECK(r.connected);
  CHECK(r.upper == 4);  // alternating tightening
  CHECK(r.lower_ok);
  CHECK(r.upper_ok);
  CHECK(r.failure.empty());
  // A5's maximal subgroups (A4, D10, S3) all have even order.
  CHECK(r.all_maximals_even);

  Fixture psl = preset_fixture("psl2_7");
  BandReport r7 = check_theorem_band(psl.graph, true, false);
  CHECK(r7.passed);
  // PSL(2,7) keeps the generic bound: the 7:3 maximals have odd order.
  CHECK(!r7.all_maximals_even);
  CHECK(r7.upper == 5);
  CHECK(r7.diameter >= 3);
  CHECK(r7.diameter <= 5);
  CHECK(diameter_oracle(psl.graph) == r7.diameter);
}

TEST_CASE("dihedral connectors on A5") {
  Fixture f = preset_fixture("a5");
  DihedralReport r = dihedral_connector_check(f.graph);
  CHECK(r.even_maximal_count == 21);  // all maximals of A5 have even order
  CHECK(r.pairs_checked == 21 * 22 / 2);
  CHECK(r.passed);
  CHECK(r.failures.empty());
  uint64_t total = 0;
  for (auto& [order, count] : r.witness_order_histogram) {
    CHECK(order >= 2);
    CHECK(order < f.group.order());
    CHECK(order % 2 == 0);  // dihedral subgroups have even order
    total += count;
  }
  CHECK(total == r.pairs_checked);
  // Equal pairs always settle with a shared involution: order 2 appears.
  CHECK(r.witness_order_histogram.front().first == 2);
}

TEST_CASE("point stabilizers of PSL(2,q)") {
  for (uint32_t q : {7u, 11u, 19u}) {
    CAPTURE(q);
    Group g = permgrp::build_group(permgrp::find_preset("psl2_" + std::to_string(q)));
    L2qReport r = l2q_pointstab_check(g, q);
    CHECK(r.passed);
    CHECK(r.q == q);
    CHECK(r.stab_order == uint64_t(q) * (q - 1) / 2);
    CHECK(r.stab_order_odd);
    CHECK(r.orbit_stabilizer_ok);
    CHECK(r.pairs == uint64_t(q + 1) * q / 2);
    CHECK(r.nontrivial_pairs == r.pairs);
  }
  CHECK(l2q_pointstab_check(permgrp::build_group(permgrp::find_preset("psl2_7")), 7)
            .stab_order == 21);

  Group a5 = permgrp::build_group(permgrp::find_preset("a5"));
  CHECK_THROWS_AS(l2q_pointstab_check(a5, 7), std::invalid_argument);  // wrong degree/order
  Group psl13 = permgrp::build_group(permgrp::find_preset("psl2_13"));
  CHECK_THROWS_AS(l2q_pointstab_check(psl13, 13), std::invalid_argument);  // q not in range
}

TEST_CASE("PSL(2,11) band with oracle agreement") {
  Fixture f = preset_fixture("psl2_11");
  BandReport r = check_theorem_band(f.graph, true, false);
  CHECK(r.passed);
  CHECK(diameter_oracle(f.graph) == r.diameter);
  DihedralReport dr = dihedral_connector_check(f.graph);
  CHECK(dr.passed);
}
