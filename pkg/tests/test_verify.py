import pytest

from pcalm import verify


def test_registry_contents():
    names = [n for n, _, _ in verify.list_suites()]
    assert len(names) >= 10 and len(set(names)) == len(names)
    for required in ("psi-vs-brute", "pprime-subdiagram", "saturated-nim-table",
                     "calm-counterexample", "sg-classical-sum"):
        assert required in names
    assert names == [n for n, _, _ in verify.list_suites()]


def test_examples():
    v = verify.run_suite("saturated-nim-table", {"p": 3, "m": 2, "bound": 3})
    assert v.passed and v.ok and v.positions_checked == 16
    v = verify.run_suite("calm-counterexample", {"p": 3})
    assert not v.passed and v.ok and v.expect == "fail"
    assert (v.counterexample["A"], v.counterexample["B"]) == ([3], [0])
    v = verify.run_suite("sg-classical-sum", {"bound": 7})
    assert v.passed and v.positions_checked == 64


@pytest.mark.parametrize("name", [n for n, _, _ in verify.list_suites()])
def test_every_suite_meets_its_expectation(name):
    v = verify.run_suite(name)
    assert v.ok, v.counterexample
    if not v.passed:
        assert v.counterexample is not None


@pytest.mark.parametrize("name", ["calm-counterexample", "pn-counterexample"])
def test_failures_replay_as_singletons(name):
    v = verify.run_suite(name)
    again = verify.run_suite(name, v.counterexample["replay"])
    assert not again.passed and again.positions_checked == 1
    assert again.counterexample == v.counterexample


@pytest.mark.parametrize("name,bounds", [("psi-vs-brute", range(7)), ("welter-sum", range(5)),
                                         ("saturated-nim-table", range(8))])
def test_monotone_in_bound(name, bounds):
    results = [verify.run_suite(name, {"bound": b}) for b in bounds]
    assert all(r.passed for r in results)
    counts = [r.positions_checked for r in results]
    assert counts == sorted(counts)


def test_errors(monkeypatch):
    with pytest.raises(verify.SuiteError):
        verify.run_suite("no-such-suite")
    with pytest.raises(verify.SuiteError):
        verify.run_suite("psi-vs-brute", {"bound": 7})
    with pytest.raises(verify.SuiteError):
        verify.run_suite("psi-vs-brute", {"colour": 1})
    with pytest.raises(verify.SuiteError):
        verify.run_suite("macdonald", {"cells": 15})
    monkeypatch.setenv("GRUNDY_MAX_BOUND", "7")
    assert verify.run_suite("psi-vs-brute", {"bound": 7, "p": 2}).passed


def test_verdict_record():
    d = verify.run_suite("hook-formula", {"cells": 4}).to_dict()
    assert set(d) == {"suite", "params", "passed", "expect", "ok", "counterexample", "positions_checked", "elapsed"}
