"""Interval number by search over sweep-line event sequences.

A k-interval model is read left to right as a sequence of events, each
opening or closing one interval.  Opening an interval of ``v`` meets every
interval currently open, so every open vertex must be a neighbour of ``v``;
an edge is realised once one of its endpoints opens while the other is open.
The search explores states ``(open set, intervals left, realised edges)``
depth first and remembers states already refuted.
"""

from __future__ import annotations

from ..errors import BudgetExceeded, UsageError
from ..graphs import Graph
from .search import DEFAULT_BUDGET, Counter

MAX_N = 10
MAX_K = 3


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def k_interval_model(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> list[list[tuple[int, int]]] | None:
    """k closed intervals per vertex, endpoints in ``[2kn]``, representing ``g``; or None."""
    if g.directed and not g.is_symmetric():
        raise UsageError("interval models exist only for undirected graphs")
    if k < 1:
        raise UsageError(f"need k >= 1, got {k}")
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    pairs = [(u - 1, v - 1) for (u, v) in g.undirected_edges()]
    inc = [0] * n
    edge_id = [[-1] * n for _ in range(n)]
    for e, (u, v) in enumerate(pairs):
        inc[u] |= 1 << e
        inc[v] |= 1 << e
        edge_id[u][v] = edge_id[v][u] = e
    goal = (1 << len(pairs)) - 1
    counter = Counter(budget)
    refuted = set()
    events: list[tuple[str, int]] = []

    def dfs(open_mask, left, done):
        mark = len(events)
        # closing a vertex whose edges are all realised never hurts
        for v in _bits(open_mask):
            if inc[v] & ~done == 0:
                open_mask &= ~(1 << v)
                events.append(("close", v))
        if done == goal:
            return True
        key = (open_mask, left, done)
        if key not in refuted:
            counter.charge()
            if _viable(open_mask, left, done) and _expand(open_mask, left, done):
                return True
            refuted.add(key)
        del events[mark:]
        return False

    def _viable(open_mask, left, done):
        # every missing edge needs both endpoints still able to hold an interval
        for e, (u, v) in enumerate(pairs):
            if done >> e & 1:
                continue
            if not (open_mask >> u & 1 or left[u]) or not (open_mask >> v & 1 or left[v]):
                return False
        return True

    def _expand(open_mask, left, done):
        for v in range(n):
            if open_mask >> v & 1 or not left[v] or open_mask & ~adj[v]:
                continue
            if inc[v] & ~done == 0:
                continue
            gained = 0
            for u in _bits(open_mask):
                gained |= 1 << edge_id[u][v]
            events.append(("open", v))
            if dfs(open_mask | 1 << v, left[:v] + (left[v] - 1,) + left[v + 1:], done | gained):
                return True
            events.pop()
        for v in _bits(open_mask):
            events.append(("close", v))
            if dfs(open_mask & ~(1 << v), left, done):
                return True
            events.pop()
        return False

    if not dfs(0, (k,) * n, 0):
        return None
    return _model_from_events(events, n, k)


def _model_from_events(events, n, k):
    intervals: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    opened: dict[int, int] = {}
    pos = 0
    for kind, v in events:
        pos += 1
        if kind == "open":
            opened[v] = pos
        else:
            intervals[v].append((opened.pop(v), pos))
    for v in sorted(opened):
        pos += 1
        intervals[v].append((opened[v], pos))
    for v in range(n):
        if not intervals[v]:
            # vertex without edges: a private interval to the right of everything
            pos += 1
            intervals[v].append((pos, pos))
        while len(intervals[v]) < k:
            intervals[v].append(intervals[v][0])
    return intervals


def model_labels(model: list[list[tuple[int, int]]]) -> list[tuple[int, ...]]:
    """Flatten a k-interval model into labels for ``k_interval_formula(k)``."""
    return [tuple(x for iv in ivs for x in iv) for ivs in model]


def intervals_meet(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return not (a[1] < b[0] or b[1] < a[0])


def graph_of_model(model: list[list[tuple[int, int]]]) -> Graph:
    n = len(model)
    edges = [(u + 1, v + 1) for u in range(n) for v in range(u + 1, n)
             if any(intervals_meet(a, b) for a in model[u] for b in model[v])]
    return Graph.from_edges(n, edges)


def interval_number(g: Graph, kmax: int = MAX_K, budget: int = DEFAULT_BUDGET,
                    max_n: int = MAX_N) -> tuple[int, list] | None:
    """Least ``k <= kmax`` with a k-interval model, together with that model.

    ``None`` means the interval number exceeds ``kmax``.
    """
    if g.n > max_n:
        raise BudgetExceeded(f"interval number search is limited to n <= {max_n}")
    if kmax > MAX_K:
        raise BudgetExceeded(f"interval number search is limited to k <= {MAX_K}")
    for k in range(1, kmax + 1):
        model = k_interval_model(g, k, budget)
        if model is not None:
            return k, model
    return None
