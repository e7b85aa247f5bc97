"""Acceptance battery: one test per criterion, each printing a PASS/FAIL line."""
import pytest

from chibound.acceptance import CRITERIA, DEFAULT_SEED


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"ac{i}" for i in range(1, len(CRITERIA) + 1)])
def test_criterion(criterion, capsys):
    result = criterion(DEFAULT_SEED)
    with capsys.disabled():
        print(f"\n{result.line()}")
    assert result.passed, "\n".join(result.failures[:5])


def test_runtime_budgets(capsys):
    # witness and oracle checks are meant to be near-instant
    for criterion, budget in ((CRITERIA[0], 1.0), (CRITERIA[1], 1.0), (CRITERIA[10], 10.0)):
        result = criterion(DEFAULT_SEED)
        with capsys.disabled():
            print(f"\nAC{result.number} runtime {result.seconds:.3f}s (budget {budget:.0f}s)")
        assert result.seconds < budget
