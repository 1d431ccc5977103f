"""Weak orders (ordered set partitions) and semantic signatures.

Whether a quantifier-free order formula holds depends only on which of its
variables are equal and how the distinct values compare, i.e. on the weak
order a tuple induces on its positions.  The set of weak orders satisfying a
formula is therefore a complete semantic invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..errors import BudgetExceeded, UnsupportedFragment, UsageError
from .formula import Formula, holds_unchecked

MAX_POSITIONS = 8


def order_type(values: Sequence[int]) -> tuple[int, ...]:
    """Dense 0-based rank of each entry; equal entries share a rank."""
    ranks = {v: r for r, v in enumerate(sorted(set(values)))}
    return tuple(ranks[v] for v in values)


@dataclass(frozen=True, order=True)
class WeakOrder:
    """Ordered blocks of 1-based positions; earlier blocks carry smaller values."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = sorted(p for b in blocks for p in b)
        if any(not b for b in blocks) or flat != list(range(1, len(flat) + 1)):
            raise UsageError(f"blocks {blocks} do not partition [m]")

    @classmethod
    def of(cls, values: Sequence[int]) -> "WeakOrder":
        """The weak order induced by a tuple of values."""
        return cls.from_ranks(order_type(values))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "WeakOrder":
        blocks = [[] for _ in range(max(ranks) + 1 if ranks else 0)]
        for pos, r in enumerate(ranks, start=1):
            blocks[r].append(pos)
        return cls(tuple(tuple(b) for b in blocks))

    @property
    def m(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def ranks(self) -> tuple[int, ...]:
        out = [0] * self.m
        for r, b in enumerate(self.blocks):
            for p in b:
                out[p - 1] = r
        return tuple(out)

    def representative(self) -> tuple[int, ...]:
        """The least positive tuple inducing this weak order."""
        return tuple(r + 1 for r in self.ranks)

    def induces(self, values: Sequence[int]) -> bool:
        return len(values) == self.m and order_type(values) == self.ranks

    def __str__(self):
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)


def _rank_vectors(m: int):
    """All dense rank vectors of length m, i.e. all weak orders on [m]."""
    if m == 0:
        yield ()
        return
    # choose the positions of block 0, then recurse on the rest
    positions = list(range(m))
    for size in range(1, m + 1):
        for first in itertools.combinations(positions, size):
            rest = [p for p in positions if p not in first]
            for sub in _rank_vectors(len(rest)):
                out = [0] * m
                for p, r in zip(rest, sub):
                    out[p] = r + 1
                yield tuple(out)


def weak_orders(m: int, max_m: int = MAX_POSITIONS) -> list[WeakOrder]:
    """All weak orders on ``[m]``, each exactly once, sorted by block structure."""
    if m < 1:
        raise UsageError(f"need m >= 1, got {m}")
    if m > max_m:
        raise BudgetExceeded(f"weak orders on {m} positions exceed the budget m <= {max_m}")
    return sorted(WeakOrder.from_ranks(r) for r in _rank_vectors(m))


def _require_order_fragment(phi: Formula):
    if not phi.quantifier_free or not phi.arithmetic_free:
        raise UnsupportedFragment("semantic signatures need a quantifier-free, arithmetic-free formula")


def signature_ranks(phi: Formula) -> frozenset:
    """Rank vectors (see :func:`order_type`) of the weak orders satisfying ``phi``."""
    _require_order_fragment(phi)
    m = phi.arity
    if m > MAX_POSITIONS:
        raise BudgetExceeded(f"signature over {m} positions exceeds the budget {MAX_POSITIONS}")
    return frozenset(r for r in _rank_vectors(m)
                     if holds_unchecked(phi, m, [x + 1 for x in r]))


def semantic_signature(phi: Formula) -> frozenset:
    """The set of weak orders on ``[2k]`` whose tuples satisfy ``phi``."""
    return frozenset(WeakOrder.from_ranks(r) for r in signature_ranks(phi))


def equivalent(phi: Formula, psi: Formula) -> bool:
    if phi.k != psi.k:
        raise UsageError(f"formulas have different k ({phi.k} vs {psi.k})")
    return signature_ranks(phi) == signature_ranks(psi)
