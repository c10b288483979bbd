"""Acceptance suite: every criterion at full size with the default seed.

Run directly (``python tests/test_acceptance.py``) for the same lines
without pytest.
"""

import sys

import pytest

from dqlinalg.verify import CRITERION_NAMES, DEFAULT_SEED, DEFAULT_TRIALS, run_suite

try:
    import conftest
except ImportError:  # direct execution outside pytest
    conftest = None

TIME_BUDGET = 120.0


@pytest.fixture(scope="module")
def report():
    return run_suite(DEFAULT_SEED, DEFAULT_TRIALS, command="acceptance")


def criterion_line(report, k):
    mine = [c for c in report.checks if c.criterion == k]
    status = "PASS" if report.criterion_passed(k) else "FAIL"
    detail = "; ".join(f"{c.name}: {c.instances} instances, {c.violations} violations" for c in mine)
    return f"[{status}] criterion {k:>2} {CRITERION_NAMES[k]} ({detail})"


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(report, k):
    line = criterion_line(report, k)
    print(line)
    if conftest is not None:
        conftest.ACCEPTANCE_LINES.append(line)
    failing = [c.line() for c in report.checks if c.criterion == k and not c.passed]
    assert report.criterion_passed(k), "\n".join(failing)


def test_time_budget(report):
    line = f"[{'PASS' if report.wall_time < TIME_BUDGET else 'FAIL'}] full run {report.wall_time:.1f}s (budget {TIME_BUDGET:.0f}s)"
    print(line)
    if conftest is not None:
        conftest.ACCEPTANCE_LINES.append(line)
    assert report.wall_time < TIME_BUDGET


if __name__ == "__main__":
    rep = run_suite(DEFAULT_SEED, DEFAULT_TRIALS, command="acceptance")
    for k in range(1, 11):
        print(criterion_line(rep, k))
    print(f"full run {rep.wall_time:.1f}s")
    sys.exit(0 if rep.passed else 1)
