"""Acceptance criteria 1-9.

Each criterion prints one PASS/FAIL line with its timing (shown at the end of
the pytest run, and by scripts/acceptance.py).  Criteria 5 and 6 include
displays that do not hold as printed; their as-printed tests are strict
xfails, and the corrected forms are asserted separately.
"""
import pytest

from isingff.acceptance import CRITERIA

pytestmark = pytest.mark.acceptance

REPORT_LINES: dict[int, str] = {}
_cache = {}


def report(k: int):
    if k not in _cache:
        rep = CRITERIA[k]()
        _cache[k] = rep
        REPORT_LINES[k] = rep.line()
        print(rep.line())
    return _cache[k]


@pytest.mark.parametrize("k", [1, 2, 3, 4, 7, 8])
def test_criterion_holds(k):
    rep = report(k)
    failing = [r.line() for r in rep.results if not r.finding.holds]
    assert not failing
    assert rep.in_time, f"{rep.elapsed:.1f}s over {rep.budget}s"
    assert rep.passed


@pytest.mark.parametrize("k", [5, 6])
def test_corrected_forms_hold(k):
    rep = report(k)
    assert rep.corrected_ok, [r.line() for r in rep.results if not r.finding.holds]
    assert rep.in_time


@pytest.mark.parametrize("k", [5, 6])
@pytest.mark.xfail(strict=True, reason="some displays do not hold as printed; see the decisions ledger")
def test_printed_displays_hold(k):
    rep = report(k)
    assert rep.printed_ok, sorted({r.finding.name for r in rep.printed if not r.finding.holds})


def test_printed_failures_are_the_known_ones():
    rep5, rep6 = report(5), report(6)
    bad5 = {r.finding.name for r in rep5.printed if not r.finding.holds}
    assert bad5 == {"Omega2_1", "c1rr2", "c1rr2_sum", "c1rr3", "coupled1", "eqn2", "recrelc33"}
    bad6 = {r.finding.name for r in rep6.printed if not r.finding.holds}
    assert len(bad6) == 2 and all("Sym4(L2(N+1))" in name for name in bad6)


def test_criterion_9_emits_findings():
    rep = report(9)
    assert rep.passed
    names = {r.finding.name for r in rep.results}
    assert len(names) == 2
    by_N = {(r.finding.name, r.finding.N): r.finding for r in rep.results}
    # the second form of a_n only agrees at N = 1; the harmonic closed form holds throughout
    holds = sorted((name, N) for (name, N), f in by_N.items() if f.holds)
    assert len(holds) == 7
    for r in rep.results:
        if not r.finding.holds:
            assert r.finding.witness
