// Python bindings for the main toolkit operations.  Thin layer: group,
// lattice and graph state lives in PresetGraph; everything else converts
// C++ report structs to plain dicts (arbitrary-precision values travel as
// decimal strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "intergraph/arith.hpp"
#include "intergraph/gf.hpp"
#include "intergraph/igraph.hpp"
#include "intergraph/lattice.hpp"
#include "intergraph/presets.hpp"
#include "intergraph/report.hpp"
#include "intergraph/unitary.hpp"

namespace py = pybind11;

using intergraph::permgrp::CapExceeded;
using intergraph::permgrp::Group;
using intergraph::permgrp::Lattice;
namespace arith = intergraph::arith;
namespace gf = intergraph::gf;
namespace igraph = intergraph::igraph;
namespace permgrp = intergraph::permgrp;
namespace unitary = intergraph::unitary;

namespace {

py::dict scan_dict(const arith::RatioScan& s) {
  py::dict d;
  d["q_lo"] = s.q_lo;
  d["q_hi"] = s.q_hi;
  d["prime_powers"] = s.count;
  d["passed"] = s.passed;
  d["first_failure_q"] = s.first_failure_q;
  d["monotone"] = s.monotone;
  d["min_ratio"] = s.min_ratio.str();
  d["max_ratio"] = s.max_ratio.str();
  return d;
}

unitary::PropMode parse_mode(const std::string& mode) {
  if (mode == "e1") return unitary::PropMode::kE1Only;
  if (mode == "all") return unitary::PropMode::kAllNondegenerate;
  throw std::invalid_argument("mode must be \"e1\" or \"all\"");
}

unitary::ProjPoint point_from_indices(const std::shared_ptr<const gf::Field>& F,
                                      const std::array<uint32_t, 3>& idx) {
  unitary::Vector3 v{{F->element(idx[0]), F->element(idx[1]),
                      F->element(idx[2])}};
  return unitary::ProjPoint::from(v);
}

// Owns the group, its subgroup lattice and the intersection graph; the
// lattice points into the group and the graph into both, so instances are
// non-copyable and non-movable.
class PresetGraph {
 public:
  explicit PresetGraph(const std::string& name, uint64_t cap)
      : p_(permgrp::find_preset(name)),
        group_(permgrp::build_group(p_)),
        lat_(permgrp::all_subgroups(group_, cap)),
        graph_(igraph::build(lat_)) {}

  PresetGraph(const PresetGraph&) = delete;
  PresetGraph& operator=(const PresetGraph&) = delete;

  const std::string& name() const { return p_.name; }
  bool simple() const { return p_.simple; }
  uint64_t order() const { return group_.order(); }
  uint32_t degree() const { return group_.degree(); }
  size_t subgroup_count() const { return lat_.subs.size(); }
  size_t class_count() const { return lat_.classes.size(); }
  size_t maximal_count() const { return permgrp::maximal_ids(lat_).size(); }
  uint32_t vertex_count() const { return graph_.vertex_count(); }
  uint64_t edge_count() const { return graph_.edges; }

  uint64_t subgroup_order(uint32_t v) const {
    if (v >= graph_.vertex_count()) throw std::out_of_range("vertex id");
    return graph_.subgroup(v).order();
  }

  py::dict diameter(unsigned workers) const {
    igraph::DiameterResult r = igraph::diameter(graph_, workers);
    py::dict d;
    d["connected"] = r.connected;
    if (r.connected) {
      d["diameter"] = r.diameter;
      d["attaining"] = py::make_tuple(r.attaining[0], r.attaining[1]);
    } else {
      d["components"] = r.component_count;
      d["component_sizes"] = r.component_sizes;
    }
    return d;
  }

  std::optional<uint32_t> diameter_oracle() const {
    uint32_t r = igraph::diameter_oracle(graph_);
    if (r == igraph::kUnreachable) return std::nullopt;
    return r;
  }

  py::dict band(unsigned workers) const {
    igraph::BandReport r = igraph::check_theorem_band(
        graph_, p_.simple, p_.family == "alternating", workers);
    py::dict d;
    d["connected"] = r.connected;
    d["diameter"] = r.diameter;
    d["upper"] = r.upper;
    d["all_maximals_even"] = r.all_maximals_even;
    d["lower_ok"] = r.lower_ok;
    d["upper_ok"] = r.upper_ok;
    d["passed"] = r.passed;
    if (!r.passed) d["failure"] = r.failure;
    return d;
  }

  uint32_t distance(uint32_t u, uint32_t v) const {
    uint32_t r = igraph::distance(graph_, u, v);
    if (r == igraph::kUnreachable) {
      throw std::invalid_argument("vertices are in different components");
    }
    return r;
  }

  py::dict shortest_path(uint32_t u, uint32_t v) const {
    igraph::PathWitness w = igraph::shortest_path(graph_, u, v);
    py::list orders;
    for (const auto& s : w.intersections) orders.append(s.order());
    py::dict d;
    d["vertices"] = w.vertices;
    d["intersection_orders"] = orders;
    return d;
  }

  py::dict maximal_induced() const {
    igraph::MaximalInducedReport r =
        igraph::maximal_induced(graph_, permgrp::maximal_ids(lat_));
    py::dict d;
    d["maximal_count"] = r.maximal_vertices.size();
    d["connected"] = r.connected;
    d["diameter"] = r.diameter;
    d["every_vertex_near_maximal"] = r.every_vertex_near_maximal;
    d["within_bound"] = r.within_bound;
    d["passed"] = r.passed;
    return d;
  }

  py::dict dihedral_connectors() const {
    igraph::DihedralReport r = igraph::dihedral_connector_check(graph_);
    py::dict d;
    d["even_maximal_count"] = r.even_maximal_count;
    d["pairs_checked"] = r.pairs_checked;
    d["failures"] = r.failures.size();
    d["witness_order_histogram"] = r.witness_order_histogram;
    d["passed"] = r.passed;
    return d;
  }

  py::dict double_count() const {
    permgrp::DoubleCountSweep r = permgrp::double_count_sweep(lat_);
    py::dict d;
    d["class_pairs"] = r.class_pairs;
    d["pairs_checked"] = r.pairs_checked;
    d["failures"] = r.failures;
    d["passed"] = r.passed;
    return d;
  }

  bool lattice_oracle_agrees() const {
    Lattice oracle = permgrp::lattice_oracle(group_, group_.order());
    if (oracle.subs.size() != lat_.subs.size()) return false;
    for (size_t i = 0; i < oracle.subs.size(); ++i) {
      if (!(oracle.subs[i] == lat_.subs[i])) return false;
    }
    return true;
  }

  py::dict l2q_pointstab() const {
    igraph::L2qReport r = igraph::l2q_pointstab_check(group_, p_.q);
    py::dict d;
    d["q"] = r.q;
    d["stab_order"] = r.stab_order;
    d["stab_order_odd"] = r.stab_order_odd;
    d["orbit_stabilizer_ok"] = r.orbit_stabilizer_ok;
    d["pairs"] = r.pairs;
    d["nontrivial_pairs"] = r.nontrivial_pairs;
    d["passed"] = r.passed;
    return d;
  }

 private:
  permgrp::Preset p_;
  Group group_;
  Lattice lat_;
  igraph::IntersectionGraph graph_;
};

arith::AtlasConstants constants() {
  return arith::load_atlas_constants(permgrp::data_dir_or_default() +
                                     "/atlas_constants.json");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "deterministic verification toolkit for subgroup intersection "
            "graphs (core bindings)";
  m.attr("__version__") = intergraph::report::kVersion;

  py::register_exception<CapExceeded>(m, "CapExceeded");

  m.def("data_dir", [] { return permgrp::data_dir_or_default(); },
        "directory holding presets, constants and the report schema");
  m.def("schema_path", [] {
    return permgrp::data_dir_or_default() + "/report.schema.json";
  });
  m.def("preset_names", &permgrp::preset_names);

  // --- exact arithmetic ----------------------------------------------------
  m.def("prime_powers", &arith::prime_powers, py::arg("lo"), py::arg("hi"));
  m.def("un_order",
        [](uint32_t n, uint64_t q) { return arith::un_order(n, q).str(); },
        py::arg("n"), py::arg("q"),
        "|U_n(q)| as a decimal string");
  m.def("u3_ratio_check",
        [](uint64_t q_lo, uint64_t q_hi) {
          return scan_dict(arith::u3_ratio_check(q_lo, q_hi));
        },
        py::arg("q_lo") = 3, py::arg("q_hi") = 10000);
  m.def("u5_ratio_check",
        [](uint64_t q_lo, uint64_t q_hi) {
          arith::U5RatioReport r = arith::u5_ratio_check(q_lo, q_hi);
          py::dict d;
          d["totally_singular"] = scan_dict(r.totally_singular);
          d["nondegenerate"] = scan_dict(r.nondegenerate);
          d["passed"] = r.passed;
          return d;
        },
        py::arg("q_lo") = 2, py::arg("q_hi") = 10000);
  m.def("m23_check", [] {
    arith::M23Report r = arith::m23_check(constants());
    py::list rows;
    for (const auto& row : r.rows) {
      py::dict e;
      e["name"] = row.name;
      e["order"] = row.order.str();
      e["product"] = row.product.str();
      e["ok"] = row.ok;
      rows.append(e);
    }
    py::dict d;
    d["first_product"] = r.first_product.str();
    d["first_ok"] = r.first_ok;
    d["rows"] = rows;
    d["passed"] = r.passed;
    return d;
  });
  m.def("bm_check", [] {
    arith::BmReport r = arith::bm_check(constants());
    py::dict d;
    d["fi23_squared_exceeds_b"] = r.a_ok;
    d["index_506_over_23_is_22"] = r.b_ok;
    d["index_506_over_253_is_2"] = r.c_ok;
    d["final_bound_holds"] = r.d_ok;
    d["lhs"] = r.d_lhs.str();
    d["rhs"] = r.d_rhs.str();
    d["slack"] = r.d_slack.str();
    d["passed"] = r.passed;
    return d;
  });

  // --- unitary witnesses ---------------------------------------------------
  m.def("verify_proposition",
        [](uint64_t q, const std::string& mode, unsigned workers) {
          unitary::PropositionReport r =
              unitary::verify_proposition(q, parse_mode(mode), workers);
          py::dict d;
          d["q"] = r.q;
          d["mode"] = mode;
          d["pairs_checked"] = r.pairs_checked;
          d["case_counts"] = py::make_tuple(r.case_counts[0], r.case_counts[1],
                                            r.case_counts[2]);
          d["failures"] = r.failures.size();
          d["passed"] = r.passed;
          return d;
        },
        py::arg("q"), py::arg("mode") = "e1", py::arg("workers") = 0,
        "runs the stabilizer-witness construction over every point pair");
  m.def("enumerate_points",
        [](uint64_t q) {
          auto [p, mexp] = unitary::prime_power_decompose(q);
          auto F = gf::Field::make(p, 2 * mexp);
          std::vector<std::array<uint32_t, 3>> keys;
          for (const auto& pt : unitary::enumerate_points(F.get())) {
            keys.push_back(pt.key());
          }
          return keys;
        },
        py::arg("q"),
        "canonical coordinates (element indices over GF(q^2)) of all "
        "q^4+q^2+1 projective points");
  m.def("witness",
        [](uint64_t q, const std::array<uint32_t, 3>& x,
           const std::array<uint32_t, 3>& y) {
          auto [p, mexp] = unitary::prime_power_decompose(q);
          auto F = gf::Field::make(p, 2 * mexp);
          unitary::ProjPoint X = point_from_indices(F, x);
          unitary::ProjPoint Y = point_from_indices(F, y);
          unitary::WitnessCase which;
          unitary::Matrix3 M = unitary::witness(X, Y, &which);
          py::list rows;
          for (int r = 0; r < 3; ++r) {
            py::list row;
            for (int c = 0; c < 3; ++c) row.append(M.at(r, c).idx);
            rows.append(row);
          }
          py::dict d;
          d["matrix"] = rows;
          d["case"] = static_cast<int>(which);
          return d;
        },
        py::arg("q"), py::arg("x"), py::arg("y"),
        "non-scalar special unitary matrix stabilizing both points; "
        "coordinates and entries are canonical field-element indices "
        "over GF(q^2)");

  // --- lattice / graph -----------------------------------------------------
  py::class_<PresetGraph>(m, "PresetGraph",
                          "group preset with its full subgroup lattice and "
                          "intersection graph")
      .def(py::init<const std::string&, uint64_t>(), py::arg("name"),
           py::arg("cap") = 10000)
      .def_property_readonly("name", &PresetGraph::name)
      .def_property_readonly("simple", &PresetGraph::simple)
      .def_property_readonly("order", &PresetGraph::order)
      .def_property_readonly("degree", &PresetGraph::degree)
      .def_property_readonly("subgroup_count", &PresetGraph::subgroup_count)
      .def_property_readonly("class_count", &PresetGraph::class_count)
      .def_property_readonly("maximal_count", &PresetGraph::maximal_count)
      .def_property_readonly("vertex_count", &PresetGraph::vertex_count)
      .def_property_readonly("edge_count", &PresetGraph::edge_count)
      .def("subgroup_order", &PresetGraph::subgroup_order, py::arg("v"))
      .def("diameter", &PresetGraph::diameter, py::arg("workers") = 0)
      .def("diameter_oracle", &PresetGraph::diameter_oracle)
      .def("band", &PresetGraph::band, py::arg("workers") = 0)
      .def("distance", &PresetGraph::distance, py::arg("u"), py::arg("v"))
      .def("shortest_path", &PresetGraph::shortest_path, py::arg("u"),
           py::arg("v"))
      .def("maximal_induced", &PresetGraph::maximal_induced)
      .def("dihedral_connectors", &PresetGraph::dihedral_connectors)
      .def("double_count", &PresetGraph::double_count)
      .def("lattice_oracle_agrees", &PresetGraph::lattice_oracle_agrees)
      .def("l2q_pointstab", &PresetGraph::l2q_pointstab);
}
