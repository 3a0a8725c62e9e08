"""Point-count budget shared by grids, convolutions and sample loops."""

from __future__ import annotations

DEFAULT_POINT_BUDGET = 100_000_000


class BudgetExceededError(ValueError):
    """A requested resolution would allocate more points than allowed."""


def require_budget(points: int, budget: int | None = None, what: str = "evaluation") -> None:
    limit = DEFAULT_POINT_BUDGET if budget is None else budget
    if points > limit:
        raise BudgetExceededError(
            f"{what} needs {points} points, exceeding the budget of {limit}; "
            "lower the resolution or raise the budget explicitly"
        )
