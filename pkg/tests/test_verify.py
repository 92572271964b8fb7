import pytest

from crosscut import verify
from crosscut.arrangement import Arrangement
from crosscut.errors import InvalidInput
from crosscut.lattice import Lattice


def test_resolve_references():
    assert isinstance(verify.resolve("catalog:N5"), Lattice)
    assert verify.resolve("enum:5:0").n == 5
    assert len(verify.resolve("braid4:0,1,3")) == 3
    assert isinstance(verify.resolve("random:7:0"), Arrangement)
    for bad in ("enum:5:99", "braid4:x", "nothing", "random:7"):
        with pytest.raises(InvalidInput):
            verify.resolve(bad)


def test_subject_sets():
    refs = verify.expand("arrangements", 7)
    assert len(refs) == 63 + 2 + 20
    assert len(verify.expand("small-lattices", 7)) == 1 + 1 + 1 + 2 + 5 + 15
    assert verify.expand("catalog:M3", 7) == ["catalog:M3"]


def test_evaluate_reports_witness_names():
    r = verify.evaluate("catalog:fig1_right", "crosscut-simplicial")
    assert r.verdict == verify.FAILS
    assert r.witness == {"interval": ["0", "1"], "subset": ["a", "b"]}


def test_evaluate_marks_guard_trips_unverified():
    r = verify.evaluate("catalog:weak_order:4", "doubling-classifier")
    assert r.verdict == verify.UNVERIFIED


def test_report_json_and_expectations():
    r = verify.PropertyReport("s", "p", verify.HOLDS, None, verify.FAILS, 0.5)
    assert not r.as_expected
    assert r.to_json() == {"subject": "s", "property": "p", "verdict": "holds", "expected": "fails"}
    assert r.to_json(timing=True)["seconds"] == 0.5


def test_unknown_suite():
    with pytest.raises(InvalidInput):
        verify.run_suite("nope")


@pytest.mark.parametrize("suite", ["crosscut", "semidistributive", "congruences", "sb", "doubling"])
def test_lattice_suites_meet_expectations(suite):
    reports = verify.run_suite(suite)
    assert all(r.as_expected for r in reports), [r.to_json() for r in reports if not r.as_expected]


def test_threads_do_not_change_reports():
    a = verify.suite_report("semidistributive", verify.run_suite("semidistributive"), 7)
    b = verify.suite_report("semidistributive", verify.run_suite("semidistributive", threads=4), 7)
    assert a == b


def test_all_suite_is_concatenation():
    names = [n for n in verify.SUITES if n != "all"]
    assert verify.SUITES["all"] == [row for n in names for row in verify.SUITES[n]]
