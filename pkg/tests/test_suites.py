import pytest

from graphpowers import constructions as cons
from graphpowers import suites
from graphpowers.graph import SearchTimeout, make_graph
from graphpowers.homomorphism import SearchOptions


def assert_clean(report):
    assert report.records
    assert not report.failures, "\n".join(report.lines())
    assert not report.inconclusive, "\n".join(report.lines())


@pytest.mark.parametrize("name", sorted(suites.SUITES))
def test_suite_defaults_pass(name):
    assert_clean(suites.SUITES[name]({"opts": SearchOptions()}))


def test_hajos_suite_with_explicit_parameters():
    report = suites.suite_hajos(2, 4) + suites.suite_hajos(3, 4)
    assert_clean(report)
    assert len(report.records) == 16


@pytest.mark.slow
def test_run_all_with_long_records():
    report = suites.run_all(include_long=True)
    assert_clean(report)
    claims = {r.claim for r in report.records}
    assert "multichromatic/K11^(1/3)-/->Petersen" in claims
    assert "unavoidable/chic(K7^(1/3))" in claims


def test_tiny_budget_never_fails():
    report = suites.run_all(budget=1e-4)
    assert not report.failures, "\n".join(r for r in report.lines() if r.startswith("FAIL"))
    for r in report.inconclusive:
        assert r.computed == "?" and not r.passed
        assert "SearchTimeout" in r.note


def test_recorder_marks_timeouts_inconclusive():
    rec = suites._Recorder(None)

    def boom():
        raise SearchTimeout("out of time")

    assert rec.check("t", "anchor", {}, 1, boom) is None
    rec.check("u", "anchor", {}, 2, lambda: 2)
    rec.check("v", "anchor", {}, 2, lambda: 3)
    report = rec.report
    assert [r.status for r in report.records] == ["INCONCLUSIVE", "PASS", "FAIL"]
    assert len(report.failures) == 1 and len(report.inconclusive) == 1
    assert not report.ok
    assert report.lines()[0].startswith("INCONCLUSIVE")
    assert report.to_dicts()[1]["computed"] == "2"


def test_mutated_circular_clique_is_caught(monkeypatch):
    real = cons.circular_complete

    def off_by_one(n, d):
        # drop the wrap-around: j - i == n - d is no longer an edge
        g = real(n, d)
        return make_graph(n, [(i, j) for i, j in g.edges if j - i != n - d])

    monkeypatch.setattr(cons, "circular_complete", off_by_one)
    report = suites.suite_circular_power(max_n=7)
    assert report.failures


def test_formula_helpers():
    from fractions import Fraction

    assert suites.subdivision_formula(Fraction(4), 0, 1) == Fraction(12, 5)
    assert suites.subdivision_formula(Fraction(4), 1, 2) == Fraction(20, 7)
    assert suites.fractional_bound(Fraction(10), 1) == Fraction(30, 11)
    assert suites.fmt(Fraction(9, 4)) == "9/4"
    assert suites.fmt(True) == "true"


def test_kneser_walk_mismatches_empty():
    assert suites.kneser_walk_mismatches(5, 2, 8) == []
    assert suites.kneser_walk_mismatches(7, 3, 8) == []


def test_hard_record_times_out_as_inconclusive():
    report = suites.suite_multichromatic(include_long=True, opts=SearchOptions(time_budget=0.01))
    hard = [r for r in report.records if r.claim == "multichromatic/K11^(1/3)-/->Petersen"]
    assert hard and hard[0].status == "INCONCLUSIVE"
    assert not report.failures
