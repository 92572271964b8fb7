import io as _io
import json

import pytest

from crosscut import io
from crosscut.catalog import chain, fig1_right, hexagon
from crosscut.cli import run


def call(*argv):
    out = _io.StringIO()
    code = run(list(argv), stdout=out)
    return code, json.loads(out.getvalue())


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, L in {"fig1_right": fig1_right(), "chain3": chain(3), "hexagon": hexagon()}.items():
        path = tmp_path / f"{name}.json"
        path.write_text(io.dumps(io.poset_to_json(L)), encoding="utf-8")
        paths[name] = str(path)
    return paths


def test_check_fig1_right_fails_crosscut_simpliciality(files):
    code, data = call("check", files["fig1_right"], "--property", "crosscut-simplicial")
    assert code == 1
    report = data["reports"][0]
    assert report["verdict"] == "fails"
    assert report["witness"] == {"interval": ["0", "1"], "subset": ["a", "b"]}


def test_mobius_of_three_chain(files):
    code, data = call("mobius", files["chain3"])
    assert code == 0
    assert data["bottom_top"] == 0
    code, data = call("mobius", files["chain3"], "--interval", "0,1")
    assert data["mobius"] == -1


def test_quotient_then_check(files, tmp_path):
    code, data = call("quotient", files["hexagon"], "--collapse", "a,A")
    assert code == 0
    path = tmp_path / "q.json"
    del data["congruence"]
    path.write_text(io.dumps(data), encoding="utf-8")
    code, data = call("check", str(path))
    verdicts = {r["property"]: r["verdict"] for r in data["reports"]}
    assert code == 0
    assert verdicts["lattice"] == verdicts["crosscut-simplicial"] == verdicts["sd"] == "holds"


def test_crosscut_subcommand():
    code, data = call("crosscut", "catalog:M3")
    assert code == 0
    assert data["reduced_euler"] == data["mobius"] == 2
    assert sorted(data["complex"]["facets"]) == [["a"], ["b"], ["c"]]


def test_double_subcommand():
    code, data = call("double", "catalog:chain:2", "--subset", "1")
    assert code == 0
    assert data["elements"] == ["0.0", "1.0", "1.1"]


def test_chambers_and_bineighborly():
    code, data = call("chambers", "catalog:fig2", "--poset")
    assert code == 0 and len(data["chambers"]) == 6
    code, data = call("bineighborly", "catalog:prism4", "--base", "++++")
    assert code == 1
    walls = [f["walls"] for f in data["failures"]]
    assert ["x+y+z", "x+y-z"] in walls
    code, data = call("bineighborly", "catalog:braid:3")
    assert code == 0 and data["report"]["verdict"] == "holds"


def test_catalog_subcommand(tmp_path):
    code, data = call("catalog", "N5")
    assert code == 0 and len(data["elements"]) == 5
    out = tmp_path / "n5.json"
    code, data = call("catalog", "boolean", "2", "--out", str(out))
    assert code == 0 and json.loads(out.read_text())["elements"] == ["0", "1", "a", "b"]


def test_sb_search_subcommand():
    code, data = call("sb-search", "catalog:M3", "--max-labels", "3")
    assert code == 1 and data["report"]["verdict"] == "fails"
    code, data = call("sb-search", "catalog:boolean:2", "--max-labels", "2")
    assert code == 0 and data["report"]["verdict"] == "holds"


def test_verify_subcommand(tmp_path):
    out = tmp_path / "r.json"
    code, data = call("verify", "congruences", "--out", str(out))
    assert code == 0
    assert data["summary"]["unexpected"] == 0
    assert json.loads(out.read_text()) == data
    assert "seconds" not in data["reports"][0]
    code, data = call("verify", "congruences", "--timing")
    assert "seconds" in data["reports"][0]


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["check", "/nonexistent.json"], "InvalidInput"),
        (["check", "catalog:nope"], "UnknownName"),
        (["mobius", "catalog:N5", "--interval", "a,b"], "NotComparable"),
        (["quotient", "catalog:N5"], "InvalidInput"),
        (["double", "catalog:N5", "--subset", "0,c"], "NotOrderConvex"),
        (["chambers", "catalog:prism4", "--base", "++--"], "InvalidInput"),
        (["verify", "nosuch"], "InvalidInput"),
        (["bogus"], "InvalidInput"),
    ],
)
def test_errors_exit_two(argv, kind):
    code, data = call(*argv)
    assert code == 2
    assert data["error"]["type"] == kind
