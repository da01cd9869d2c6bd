"""End-to-end runs of the command line front end."""

import io
import json
import subprocess
import sys

import pytest

from vrips.cli import BAD_INPUT, FAILED, OK, run_command
from vrips.documents import parse_result, results_equal
from vrips.semiuniform import AxiomVerdict

SQUARE_CSV = """\
,v0,v1,v2,v3
v0,0,1,1.41421356,1
v1,1,0,1,1.41421356
v2,1.41421356,1,0,1
v3,1,1.41421356,1,0
"""

CLOSURE_JSON = json.dumps({
    "kind": "closure",
    "labels": ["a", "b", "c"],
    "neighborhoods": [[0], [1], [2]],
    "cover": [[0, 1], [1, 2], [0, 2]],
})


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def square_csv(tmp_path):
    path = tmp_path / "square.csv"
    path.write_text(SQUARE_CSV)
    return str(path)


@pytest.fixture
def cycle_edges(tmp_path):
    path = tmp_path / "cycle.txt"
    path.write_text("a b\nb c\nc d\nd a\n")
    return str(path)


def test_homology_of_a_distance_table(square_csv):
    code, out, err = run(["homology", square_csv, "--scale", "1"])
    assert (code, err) == (OK, "")
    doc = parse_result(out)
    assert doc["command"] == "homology"
    assert doc["results"]["betti"] == [1, 1]
    assert doc["results"]["torsion"] == [[], []]
    assert doc["results"]["members"] == 1
    assert doc["results"]["stabilized"] is True
    assert len(doc["parameters"]["deltas"]) == 1


def test_homology_with_field_coefficients(square_csv):
    code, out, _ = run(["homology", square_csv, "--scale", "1", "--coeffs", "Q"])
    assert code == OK
    assert parse_result(out)["results"]["cohomology_betti"] == [1, 1]


def test_homology_relative_to_a_subset(square_csv):
    code, out, _ = run(["homology", square_csv, "--scale", "1", "--subset", "0", "1", "2"])
    assert code == OK
    assert parse_result(out)["results"]["betti"] == [0, 1]


def test_explicit_deltas_build_a_tower(square_csv):
    code, out, _ = run(["homology", square_csv, "--scale", "1", "--delta", "1/4,1/2"])
    assert code == OK
    doc = parse_result(out)
    assert doc["results"]["members"] == 2
    # The coarse member is a solid simplex, so the tower is not stable.
    assert doc["results"]["stabilized"] is False
    assert doc["results"]["betti"] == [1, 1]


def test_homology_of_a_complex_document(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({
        "kind": "complex", "labels": ["a", "b", "c"], "simplices": [[0, 1, 2]],
    }))
    code, out, _ = run(["homology", str(path), "--reduced"])
    assert code == OK
    assert parse_result(out)["results"]["betti"] == [0, 0]


def test_graph_command(cycle_edges):
    code, out, _ = run(["graph", cycle_edges, "--coeffs", "F2"])
    assert code == OK
    doc = parse_result(out)
    assert doc["results"]["betti"] == [1, 1]
    assert doc["parameters"]["directed"] is False


def test_directed_graph_command(tmp_path):
    path = tmp_path / "chain.txt"
    path.write_text("a -> b\nb -> c\n")
    code, out, _ = run(["graph", str(path)])
    assert code == OK
    doc = parse_result(out)
    assert doc["parameters"]["directed"] is True
    assert doc["results"]["betti"] == [1, 0]


def test_closure_command_both_relations(tmp_path):
    path = tmp_path / "arcs.json"
    path.write_text(CLOSURE_JSON)
    code_i, out_i, _ = run(["closure", str(path)])
    code_v, out_v, _ = run(["closure", str(path), "--relation", "vietoris"])
    assert code_i == code_v == OK
    a, b = parse_result(out_i), parse_result(out_v)
    # Discrete neighborhoods make interior and plain overlap coincide.
    assert a["results"] == b["results"]
    assert a["results"]["betti"] == [1, 0]


def test_sweep_emits_exact_tsv(square_csv):
    code, out, err = run(["sweep", square_csv, "--scales", "1/2:3/2:1/2"])
    assert (code, err) == (OK, "")
    lines = out.splitlines()
    assert lines[0] == "scale\tbetti0\tbetti1"
    assert lines[1:] == ["1/2\t4\t0", "1\t1\t1", "3/2\t1\t0"]


def test_runs_are_deterministic(square_csv):
    _, first, _ = run(["homology", square_csv, "--scale", "1"])
    _, second, _ = run(["homology", square_csv, "--scale", "1"])
    assert results_equal(parse_result(first), parse_result(second))


def test_verify_prints_one_line_per_check():
    code, out, _ = run(["verify", "--suite", "dimension", "--seed", "1", "--trials", "2"])
    assert code == OK
    lines = out.splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert "checks passed (suite=dimension, seed=1)" in lines[-1]


def test_verify_reports_failures(monkeypatch):
    verdicts = [AxiomVerdict("made-up", "instance", False, "broken on purpose")]
    monkeypatch.setattr("vrips.cli.run_suite", lambda name, config: verdicts)
    code, out, _ = run(["verify", "--suite", "dimension"])
    assert code == FAILED
    assert "FAIL made-up" in out
    assert "broken on purpose" in out
    assert "0/1 checks passed" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["homology", "/nonexistent/nowhere.csv", "--scale", "1"],
        ["sweep", "SQUARE", "--scales", "2:1:1/2"],
        ["sweep", "SQUARE", "--scales", "1:2"],
        ["sweep", "SQUARE", "--scales", "1:2:0"],
        ["homology", "SQUARE", "--scale", "1", "--coeffs", "F4"],
        ["homology", "SQUARE", "--scale", "1", "--coeffs", "R"],
        ["homology", "SQUARE", "--scale", "nope"],
        ["homology", "SQUARE"],  # a distance table needs --scale
        ["nonsense"],
        [],
    ],
)
def test_bad_input_exits_two(argv, square_csv):
    argv = [square_csv if a == "SQUARE" else a for a in argv]
    code, _, _ = run(argv)
    assert code == BAD_INPUT


def test_wrong_document_kind_exits_two(square_csv, cycle_edges):
    code, _, err = run(["graph", square_csv])
    assert code == BAD_INPUT
    assert "error:" in err
    code, _, err = run(["homology", cycle_edges])
    assert code == BAD_INPUT
    assert "graph or closure" in err


def test_help_exits_zero():
    code, _, _ = run(["--help"])
    assert code == OK


def test_module_entry_point(square_csv):
    proc = subprocess.run(
        [sys.executable, "-m", "vrips.cli", "homology", square_csv, "--scale", "1"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == OK
    assert parse_result(proc.stdout)["results"]["betti"] == [1, 1]
