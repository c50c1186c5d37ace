"""The acceptance gate: every criterion of the suite must pass at its stated
exact tolerance.  One pass/fail line is printed per criterion."""

import pytest

from dgskew.suite import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.__name__)
def test_acceptance_criterion(criterion):
    result = criterion()
    print(result.line())
    assert result.passed, result.detail
