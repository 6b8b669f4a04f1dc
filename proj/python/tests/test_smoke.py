import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import ballsearch as bs

CLI = os.environ.get("BALLSEARCH_CLI")
SCHEMAS = pathlib.Path(os.environ.get("BALLSEARCH_SCHEMAS", pathlib.Path(__file__).parents[2] / "docs" / "schemas"))


def test_graph_basics():
    g = bs.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4
    assert g.edge_count == 3
    assert bs.ball(g, 1, 1) == [0, 1, 2]
    assert bs.distance(g, 0, 3) == 3
    assert bs.diameter(g) == 3
    assert bs.distance(bs.Graph(2, []), 0, 1) is None


def test_hypercube_search_and_bounds():
    q = bs.Graph.hypercube(5)
    assert q.is_hypercube
    for hidden in (0, 17, 31):
        t = bs.run_search(q, "hypercube", oracle=f"fixed:{hidden}")
        assert t["resolved"] == hidden
        assert t["length"] <= 5 - 1 + 3
    assert bs.v_ball(7, 1) == 8
    assert bs.sphere_covering_lower(7, 1) == 16
    assert bs.hamming_code()["size"] == 16


def test_separation_and_exact_values():
    p4 = bs.Graph.generate("path:4")
    assert bs.min_nonadaptive(p4)["size"] == 3
    assert bs.metric_dimension(p4)["size"] == 1
    assert bs.sandwich_check(p4)["holds"]
    assert bs.exact_adaptive(bs.Graph.hypercube(3))["value"] == 3
    assert bs.is_separating(p4, [(0, 0), (1, 0), (2, 0)])
    assert not bs.is_separating(p4, [(0, 0)])


def test_fano():
    v = bs.fano_verify()
    assert v["separating"] and v["empty_signature_vertices"] == [127]
    assert bs.fano_signature(0) == 0x7F


def test_gnp_experiment_reproducible():
    a = bs.gnp_experiment(60, 0.3, r=1, trials=2, seed=5)
    b = bs.gnp_experiment(60, 0.3, r=1, trials=2, seed=5, threads=2)
    assert a == b
    assert 0.0 <= a["success_rate"] <= 1.0


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        bs.Graph.generate("nonsense:3")
    with pytest.raises(Exception):
        bs.greedy_covering(40, 1)


CLI_CASES = [
    ("fano-verify", ["fano-verify"]),
    ("covering", ["covering", "--n", "3", "--r", "1", "--exact"]),
    ("covering", ["covering", "--n", "7", "--r", "1", "--hamming"]),
    ("min-nonadaptive", ["min-nonadaptive", "--gen", "path:5"]),
    ("metric-dimension", ["metric-dimension", "--gen", "cycle:6"]),
    ("sandwich-check", ["sandwich-check", "--gen", "star:5"]),
    ("adaptive", ["adaptive", "--hypercube", "4", "--strategy", "hypercube", "--oracle", "fixed:9"]),
    ("adaptive", ["adaptive", "--gen", "bounded:30:3", "--strategy", "halving", "--oracle", "adversarial"]),
    ("adaptive", ["adaptive", "--hypercube", "7", "--strategy", "cover", "--cover-mode", "exact"]),
    ("adaptive-exact", ["adaptive-exact", "--gen", "cycle:6"]),
    ("gnp-experiment", ["gnp-experiment", "--n", "50", "--p", "0.3", "--trials", "2", "--seed", "3"]),
    ("ball-stats", ["ball-stats", "--gen", "gnp:40:0.2", "--r", "1", "--samples", "20"]),
]


@pytest.mark.skipif(not CLI, reason="BALLSEARCH_CLI not set")
@pytest.mark.parametrize("schema,args", CLI_CASES)
def test_cli_output_matches_schema(schema, args):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), json.loads((SCHEMAS / f"{schema}.schema.json").read_text()))


@pytest.mark.skipif(not CLI, reason="BALLSEARCH_CLI not set")
def test_cli_usage_error_exit_code():
    r = subprocess.run([CLI, "min-nonadaptive"], capture_output=True, text=True)
    assert r.returncode == 2
