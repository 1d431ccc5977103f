"""The two graph parameters computed here: quantifier-free order expressibility and interval number."""

from __future__ import annotations

from ..errors import BudgetExceeded, UsageError
from ..graphs import Graph
from .interval import interval_number
from .search import DEFAULT_BUDGET

LAMBDA_MAX_N = {1: 8, 2: 6}


def lambda_foqf(g: Graph, kmax: int = 2, budget: int = DEFAULT_BUDGET):
    """Least ``k <= kmax`` such that ``g`` is k-expressible, with the witness; ``None`` if none."""
    from ..dags import expressible

    if kmax < 1:
        raise UsageError(f"need kmax >= 1, got {kmax}")
    for k in range(1, kmax + 1):
        limit = LAMBDA_MAX_N.get(k)
        if limit is None or g.n > limit:
            raise BudgetExceeded(f"expressibility search at k={k} is limited to n <= {limit or 0}")
        found = expressible(g, k, budget)
        if found is not None:
            return k, found
    return None


__all__ = ["lambda_foqf", "interval_number"]
