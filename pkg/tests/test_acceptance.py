"""Every acceptance criterion at its stated tolerance, one PASS/FAIL line each."""

import pytest

from semicoh.acceptance import CRITERIA, run_one


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    r = run_one(number)
    print(r.line())
    assert r.passed, r.line()
