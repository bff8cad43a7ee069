"""Acceptance gate: every criterion of the built-in suite, exact (zero tolerance).

Prints one PASS/FAIL line per criterion, also repeated in the terminal summary.
"""

import io as stdio
import time

import pytest

from conftest import ACCEPTANCE_LINES
from cybekit.cli import main
from cybekit.suite import CRITERIA, run_criterion

MIN_SAMPLES = {
    2: ("lift_equivalence[", 100),
    4: ("drinfeld[", 50),
    5: ("", 100),
    6: ("basis_formulas", 100),
    7: ("duality[", 50),
}


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion):
    res = run_criterion(criterion)
    failed = [rec["name"] for rec in res.records if not rec["ok"]]
    line = f"criterion {res.number}: {'PASS' if res.ok else 'FAIL'} ({res.seconds:.2f}s) {res.title}"
    if failed:
        line += " failed=" + ",".join(failed)
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert res.ok, failed
    if res.number in MIN_SAMPLES:
        prefix, minimum = MIN_SAMPLES[res.number]
        sized = [rec for rec in res.records if rec["name"].startswith(prefix) and "samples" in rec]
        assert sized and all(rec["samples"] >= minimum for rec in sized)


def test_runtime_budgets():
    by_number = {i + 1: fn for i, fn in enumerate(CRITERIA)}
    t0 = time.perf_counter()
    run_criterion(by_number[1])
    assert time.perf_counter() - t0 < 1.0
    t0 = time.perf_counter()
    run_criterion(by_number[2])
    assert time.perf_counter() - t0 < 30.0


def test_fixtures_command_runs_whole_suite():
    out = stdio.StringIO()
    t0 = time.perf_counter()
    code = main(["fixtures"], out=out)
    elapsed = time.perf_counter() - t0
    lines = out.getvalue().splitlines()
    assert code == 0
    assert all("status=ok" in line for line in lines)
    assert sum(line.startswith("name=criterion.") for line in lines) == len(CRITERIA)
    assert elapsed < 120
    again = stdio.StringIO()
    main(["fixtures"], out=again)
    assert again.getvalue() == out.getvalue()
