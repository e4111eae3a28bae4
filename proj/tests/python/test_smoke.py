"""Smoke tests: the python package and the command-line binary.

The package import path is provided through PYTHONPATH (the staged build
tree) and the binary through INTERGRAPH_CLI; ctest sets both.
"""

import json
import os
import subprocess

import jsonschema
import pytest

import intergraph as ig


# ---------------------------------------------------------------------------
# package


def test_version_and_presets():
    assert ig.__version__ == "0.1.0"
    names = ig.preset_names()
    assert "a5" in names and "u3_3" in names
    assert os.path.isdir(ig.data_dir())
    assert os.path.isfile(ig.schema_path())


def test_arith_checks():
    assert ig.prime_powers(3, 20) == [3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19]
    assert ig.un_order(3, 3) == "6048"
    assert ig.u3_ratio_check(3, 500)["passed"]
    u5 = ig.u5_ratio_check(2, 500)
    assert u5["passed"]
    assert u5["totally_singular"]["min_ratio"] == "27648/55"  # q = 2: 248832/495
    assert ig.m23_check()["passed"]
    bm = ig.bm_check()
    assert bm["passed"]
    assert bm["lhs"] == "34482904041612950998"


def test_witness_construction():
    r = ig.verify_proposition(3)
    assert r["passed"] and r["pairs_checked"] == 91
    assert sum(r["case_counts"]) == 91

    points = ig.enumerate_points(3)
    assert len(points) == 91
    w = ig.witness(3, (1, 0, 0), tuple(points[7]))
    assert len(w["matrix"]) == 3 and all(len(row) == 3 for row in w["matrix"])
    assert w["case"] in (0, 1, 2)

    with pytest.raises(ValueError):
        ig.verify_proposition(2)  # outside the hypothesis
    with pytest.raises(ValueError):
        ig.witness(3, (0, 0, 0), (1, 0, 0))  # zero vector


def test_preset_graph_a5():
    g = ig.PresetGraph("a5")
    assert (g.order, g.subgroup_count, g.vertex_count) == (60, 59, 57)
    assert g.maximal_count == 21
    d = g.diameter()
    assert d["connected"] and 3 <= d["diameter"] <= 4
    assert g.diameter_oracle() == d["diameter"]
    assert g.band()["passed"]
    assert g.dihedral_connectors()["passed"]
    assert g.double_count()["passed"]
    assert g.lattice_oracle_agrees()
    u, v = d["attaining"]
    path = g.shortest_path(u, v)
    assert len(path["vertices"]) == d["diameter"] + 1
    assert all(o > 1 for o in path["intersection_orders"])


def test_cap_exception():
    with pytest.raises(ig.CapExceeded):
        ig.PresetGraph("a5", cap=5)


# ---------------------------------------------------------------------------
# command-line binary


def cli():
    path = os.environ.get("INTERGRAPH_CLI")
    if not path:
        pytest.skip("INTERGRAPH_CLI not set")
    return path


def run_cli(args, **kw):
    return subprocess.run([cli(), *args], capture_output=True, text=True, **kw)


def load_schema():
    with open(ig.schema_path()) as f:
        return json.load(f)


def test_cli_report_validates_against_schema(tmp_path):
    out = tmp_path / "report.json"
    r = run_cli(["verify", "--check", "bm", "--json", str(out)])
    assert r.returncode == 0, r.stderr
    report = json.loads(out.read_text())
    jsonschema.validate(report, load_schema())
    names = [c["name"] for c in report["checks"]]
    assert names == ["u3_ratio", "u5_ratio", "m23_maximals", "bm_counting"]
    assert len(names) == len(set(names))  # each declared check exactly once
    assert report["passed"] is True


def test_cli_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        r = run_cli(["graph", "--preset", "a5", "--full-checks", "--json", str(out)])
        assert r.returncode == 0, r.stderr
    assert a.read_bytes() == b.read_bytes()
    jsonschema.validate(json.loads(a.read_text()), load_schema())


def test_cli_witness_report(tmp_path):
    out = tmp_path / "w.json"
    r = run_cli(["witness", "--q", "3", "--json", str(out)])
    assert r.returncode == 0, r.stderr
    report = json.loads(out.read_text())
    jsonschema.validate(report, load_schema())
    (check,) = report["checks"]
    assert check["name"] == "witness_q3_e1"
    assert check["details"]["pairs_checked"] == 91


def test_cli_exit_codes(tmp_path):
    assert run_cli(["witness", "--q", "2"]).returncode == 2
    assert run_cli(["graph", "--preset", "u3_3"]).returncode == 2
    assert run_cli(["graph", "--preset", "no_such"]).returncode == 2

    env = dict(os.environ, INTERGRAPH_CAP="10")
    r = subprocess.run(
        [cli(), "graph", "--preset", "a5", "--json", str(tmp_path / "c.json")],
        capture_output=True, text=True, env=env,
    )
    assert r.returncode == 0  # skips are not failures without --strict
    report = json.loads((tmp_path / "c.json").read_text())
    jsonschema.validate(report, load_schema())
    assert any(c["verdict"] == "skipped" for c in report["checks"])
    assert report["passed"] is True

    r = subprocess.run(
        [cli(), "graph", "--preset", "a5", "--strict"],
        capture_output=True, text=True, env=env,
    )
    assert r.returncode == 3
