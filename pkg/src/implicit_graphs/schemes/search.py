"""Backtracking search for a labeling that realises a given graph.

Labels are indices into a finite alphabet and adjacency of two labels is a
fixed binary relation.  Vertices are labeled in the order 1..n and labels
are tried in alphabet order, so the first witness found is the
lexicographically least one among those admitted by the symmetry breaking.

Forward checking keeps, for every unlabeled vertex, the bitmask of labels
still consistent with all labeled vertices.  Relation rows are computed
lazily the first time a label is used.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..errors import BudgetExceeded
from ..graphs import Graph

DEFAULT_BUDGET = 10**8
ROW_LIMIT = 4096  # larger alphabets check candidates pair by pair instead of caching rows


class Counter:
    """Shared evaluation counter; raises once the budget is spent."""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self.spent = 0

    def charge(self, amount: int = 1):
        self.spent += amount
        if self.spent > self.budget:
            raise BudgetExceeded(f"search budget of {self.budget} evaluations exhausted",
                                 spent=self.spent, budget=self.budget)


def twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """0-based pairs u < v such that swapping u and v is an automorphism of g."""
    n, adj, radj = g.n, g.adj, g.radj
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            m = ~((1 << u) | (1 << v))
            if (adj[u] & m) == (adj[v] & m) and (radj[u] & m) == (radj[v] & m) \
                    and (adj[u] >> v & 1) == (adj[v] >> u & 1):
                out.append((u, v))
    return out


def find_labeling(
    g: Graph,
    size: int,
    relation: Callable[[int, int], bool],
    *,
    counter: Counter | None = None,
    values: Callable[[int], Sequence[int]] | None = None,
    dense_max: int | None = None,
) -> list[int] | None:
    """Least labeling ``l`` (alphabet indices) with ``relation(l[u], l[v]) == ((u,v) in g)``.

    Only ordered pairs of distinct vertices are constrained.  Returns ``None``
    when the search space is exhausted without a witness.

    If ``values`` and ``dense_max`` are given, each label is a tuple of
    integers in ``[1, dense_max]`` and only labelings whose entries together
    use exactly ``{1, ..., m}`` for some ``m`` are considered.
    """
    counter = counter or Counter()
    n = g.n
    if n == 0:
        return []
    full = (1 << size) - 1
    out_rows: dict[int, int] = {}
    in_rows: dict[int, int] = {}

    def rows(a):
        if a not in out_rows:
            counter.charge(2 * size)
            o = i = 0
            for b in range(size):
                if relation(a, b):
                    o |= 1 << b
                if relation(b, a):
                    i |= 1 << b
            out_rows[a], in_rows[a] = o, i
        return out_rows[a], in_rows[a]

    adj = g.adj
    twins_before: list[list[int]] = [[] for _ in range(n)]
    for u, v in twin_pairs(g):
        twins_before[v].append(u)

    labels = [0] * n
    used = [0] * (dense_max + 1) if dense_max else None

    def dense_ok(depth):
        # the used values must be extendable to an initial segment
        top = max((x for x in range(1, dense_max + 1) if used[x]), default=0)
        missing = sum(1 for x in range(1, top + 1) if not used[x])
        slots = (n - depth) * len(values(0))
        return missing <= slots

    def consistent(a, depth):
        for u in range(depth):
            b = labels[u]
            counter.charge(2)
            if relation(b, a) != bool(adj[u] >> depth & 1) or relation(a, b) != bool(adj[depth] >> u & 1):
                return False
        return True

    def rec_direct(depth):
        if depth == n:
            return used is None or dense_ok(n)
        lo = max((labels[u] for u in twins_before[depth]), default=0)
        for a in range(lo, size):
            counter.charge()
            if used is not None:
                for x in values(a):
                    used[x] += 1
                if not dense_ok(depth + 1):
                    for x in values(a):
                        used[x] -= 1
                    continue
            labels[depth] = a
            if consistent(a, depth) and rec_direct(depth + 1):
                return True
            if used is not None:
                for x in values(a):
                    used[x] -= 1
        return False

    if size > ROW_LIMIT:
        return labels if rec_direct(0) else None

    def rec(depth, domains):
        if depth == n:
            if used is not None and not dense_ok(n):
                return False
            return True
        dom = domains[depth]
        for u in twins_before[depth]:
            dom &= ~((1 << labels[u]) - 1)
        while dom:
            a = (dom & -dom).bit_length() - 1
            dom &= dom - 1
            counter.charge()
            if used is not None:
                for x in values(a):
                    used[x] += 1
                if not dense_ok(depth + 1):
                    for x in values(a):
                        used[x] -= 1
                    continue
            labels[depth] = a
            o, i = rows(a)
            new = list(domains)
            ok = True
            for w in range(depth + 1, n):
                # relation(a, l(w)) must equal edge (depth, w); relation(l(w), a) edge (w, depth)
                m = new[w] & (o if adj[depth] >> w & 1 else full & ~o)
                m &= i if adj[w] >> depth & 1 else full & ~i
                if not m:
                    ok = False
                    break
                new[w] = m
            if ok and rec(depth + 1, new):
                return True
            if used is not None:
                for x in values(a):
                    used[x] -= 1
        return False

    if rec(0, [full] * n):
        return labels
    return None
