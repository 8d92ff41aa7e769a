"""Unit tests for the enumeration node budget."""

import pytest

from schubert_cone.services.budget import WorkBudget, charge, work_budget
from schubert_cone.services.combinatorics import GrassmannIndex, dominates_support
from schubert_cone.services.hilbert import hilbert_direct, minimal_nonfaces
from shared.errors import BudgetExceededError


class TestWorkBudget:
    def test_charge_and_remaining(self) -> None:
        budget = WorkBudget(limit=5)
        budget.charge(3)
        assert budget.spent == 3
        assert budget.remaining == 2

    def test_exceeding_raises(self) -> None:
        budget = WorkBudget(limit=2)
        budget.charge(2)
        with pytest.raises(BudgetExceededError) as exc_info:
            budget.charge()
        assert exc_info.value.limit == 2
        assert exc_info.value.spent == 3
        assert "budget exceeded" in str(exc_info.value)
        assert budget.remaining == 0


class TestWorkBudgetContext:
    def test_uncapped(self) -> None:
        with work_budget(None) as budget:
            assert budget is None
            charge(10**6)

    def test_charges_go_to_the_open_budget(self) -> None:
        with work_budget(100) as budget:
            charge()
            charge(4)
        assert budget is not None
        assert budget.spent == 5

    def test_budget_closes_on_exit(self) -> None:
        with work_budget(1) as budget:
            charge()
        charge(10**9)
        assert budget is not None
        assert budget.spent == 1

    def test_nested_budget_restores_the_outer_one(self) -> None:
        with work_budget(100) as outer:
            with work_budget(10) as inner:
                charge(3)
            charge(2)
        assert inner is not None and outer is not None
        assert (inner.spent, outer.spent) == (3, 2)

    def test_charging_outside_is_free(self) -> None:
        charge(10**9)

    def test_enumeration_is_capped(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        with pytest.raises(BudgetExceededError), work_budget(3):
            hilbert_direct(v12, w24, 6)
        hilbert_direct(v12, w24, 2)


class TestColdMemos:
    """Each test starts from empty service memos, so node counts do not depend on test order."""

    def test_first_run_fills_the_memo(self, v12: GrassmannIndex, w24: GrassmannIndex) -> None:
        assert dominates_support.cache_info().currsize == 0
        with work_budget(10**6) as budget:
            hilbert_direct(v12, w24, 2)
        assert budget is not None and budget.spent > 0
        assert dominates_support.cache_info().currsize > 0

    def test_memo_is_empty_again(self) -> None:
        assert dominates_support.cache_info().currsize == 0
        assert minimal_nonfaces.cache_info().currsize == 0
