"""The acceptance gate: one test per criterion, each printing its own
PASS/FAIL line with the measured runtime against the pinned budget."""

import pytest

from cyclehom.acceptance import BUDGETS, run_criterion


def _check(i: int):
    ok, elapsed, detail = run_criterion(i)
    status = "PASS" if ok and elapsed <= BUDGETS[i] else "FAIL"
    print(f"{status} criterion {i}: {detail} "
          f"[{elapsed:.1f}s / budget {BUDGETS[i]}s]")
    assert ok, detail
    assert elapsed <= BUDGETS[i], f"{elapsed:.1f}s over {BUDGETS[i]}s budget"


@pytest.mark.parametrize("i", sorted(BUDGETS))
def test_criterion(i):
    _check(i)
