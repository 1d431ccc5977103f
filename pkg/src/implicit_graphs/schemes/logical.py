"""Logical labeling schemes: each vertex carries k numbers and a formula decides adjacency."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from ..errors import BudgetExceeded, UsageError
from ..graphs import Graph
from ..logic import Formula, evaluate, order_type, parse_formula
from ..logic.formula import And, Eq, Not, Or, Var, disj, free_name, holds_unchecked, rename_free
from .search import DEFAULT_BUDGET, ROW_LIMIT, Counter, find_labeling, twin_pairs

Labeling = list  # vertex v (1-based) -> labeling[v-1], a k-tuple of positive integers

MAX_ALPHABET = 200_000


@dataclass(frozen=True)
class LogicalScheme:
    """A formula with 2k free variables; labels are k-tuples over ``[n**c]``."""

    formula: Formula
    c: int

    def __post_init__(self):
        if self.c < 1:
            raise UsageError(f"universe exponent c must be >= 1, got {self.c}")

    @property
    def k(self) -> int:
        return self.formula.k

    def universe(self, n: int) -> int:
        return max(1, n) ** self.c


def _check_labeling(labeling, k, bound=None):
    for v, lab in enumerate(labeling, start=1):
        if len(lab) != k:
            raise UsageError(f"label of vertex {v} has {len(lab)} entries, expected {k}")
        for x in lab:
            if x < 1 or (bound is not None and x > bound):
                raise UsageError(f"label entry {x} of vertex {v} outside [1, {bound}]")


def graph_of_labeling(scheme: LogicalScheme, labeling: Sequence[Sequence[int]]) -> Graph:
    """Directed graph with edge (u, v), u != v, iff the formula holds on (l(u), l(v))."""
    n = len(labeling)
    big_n = scheme.universe(n)
    _check_labeling(labeling, scheme.k, big_n)
    phi = scheme.formula
    edges = [(u + 1, v + 1) for u in range(n) for v in range(n)
             if u != v and evaluate(phi, big_n, tuple(labeling[u]) + tuple(labeling[v]))]
    return Graph(n, frozenset(edges), directed=True)


def normalize_labeling(labeling: Sequence[Sequence[int]], k: int | None = None) -> list[tuple]:
    """Replace every entry ``a`` by its rank among all entries used.

    ``ord(a) = |{b used : b < a}| + 1``, so the result uses ``1..m`` for the
    number ``m`` of distinct entries, which is at most ``k * n``.  Order and
    equality between entries are preserved, hence so is every graph induced
    by a quantifier-free order formula.
    """
    if k is not None:
        _check_labeling(labeling, k)
    support = sorted({x for lab in labeling for x in lab})
    rank = {a: i + 1 for i, a in enumerate(support)}
    return [tuple(rank[x] for x in lab) for lab in labeling]


def member_logical(scheme: LogicalScheme, g: Graph, budget: int = DEFAULT_BUDGET) -> list[tuple] | None:
    """A labeling witnessing ``g`` in gr(scheme), or ``None`` if there is none.

    For quantifier-free order formulas only labelings whose entries form an
    initial segment ``1..m`` are searched; every witness can be compressed
    to such a one without changing the induced graph.  Other formulas are
    searched over the full universe ``[n**c]``.
    """
    n, k, phi = g.n, scheme.k, scheme.formula
    if n == 0:
        return []
    big_n = scheme.universe(n)
    order_only = phi.quantifier_free and phi.arithmetic_free
    top = min(k * n, big_n) if order_only else big_n
    size = top ** k
    if size > MAX_ALPHABET and not order_only:
        raise BudgetExceeded(f"label alphabet of {size} tuples exceeds {MAX_ALPHABET}")
    counter = Counter(budget)
    if order_only and size > ROW_LIMIT:
        alphabet = []
    else:
        alphabet = list(itertools.product(range(1, top + 1), repeat=k))
    if order_only:
        verdicts: dict[tuple, bool] = {}

        def verdict(t):
            # only the order type of the pair matters; evaluate once per type
            if t not in verdicts:
                verdicts[t] = holds_unchecked(phi, 2 * k, tuple(r + 1 for r in t))
            return verdicts[t]

        def relation(a, b):
            return verdict(order_type(alphabet[a] + alphabet[b]))

        if size > ROW_LIMIT:
            return _interleaving_search(g, k, lambda t: verdict(t), counter)
        found = find_labeling(g, size, relation, counter=counter,
                              values=lambda a: alphabet[a], dense_max=top)
    else:
        def relation(a, b):
            return holds_unchecked(phi, big_n, alphabet[a] + alphabet[b])

        found = find_labeling(g, size, relation, counter=counter)
    return None if found is None else [alphabet[a] for a in found]


def _gap_orders(size, ties):
    """Dense rank vectors of ``size`` entries with ``size - ties`` distinct ranks."""
    if size == 0:
        if ties == 0:
            yield ()
        return
    want = size - ties
    if want < 1:
        return
    for ranks in itertools.product(range(want), repeat=size):
        if len(set(ranks)) == want:
            yield ranks


def _candidates(m, k):
    """Every way to place k new entries relative to the existing values 1..m.

    Entries are returned scaled: existing value v sits at ``(k+1)*v`` and the
    gap below it offers the k positions just underneath, so each distinct
    order type relative to the existing values appears exactly once.
    Placements with fewer coinciding entries come first.
    """
    step = k + 1
    for ties in range(k + 1):
        for slots in itertools.product(range(2 * m + 1), repeat=k):
            on_values = sum(s % 2 for s in slots)
            if on_values > ties:
                continue
            gaps = sorted({s for s in slots if s % 2 == 0})
            groups = [[i for i, s in enumerate(slots) if s == gap] for gap in gaps]
            rest = ties - on_values
            for split in _splits(rest, [len(grp) for grp in groups]):
                for choice in itertools.product(*(_gap_orders(len(grp), t) for grp, t in zip(groups, split))):
                    out = [0] * k
                    for i, s in enumerate(slots):
                        if s % 2:
                            out[i] = step * (s // 2 + 1)
                    for grp, ranks in zip(groups, choice):
                        base = step * (slots[grp[0]] // 2)
                        for i, r in zip(grp, ranks):
                            out[i] = base + 1 + r
                    yield tuple(out)


def _splits(total, sizes):
    """Ways to distribute ``total`` ties over groups, at most ``size - 1`` per group."""
    if not sizes:
        if total == 0:
            yield ()
        return
    for t in range(min(total, sizes[0] - 1) + 1):
        for rest in _splits(total - t, sizes[1:]):
            yield (t,) + rest


def _interleaving_search(g, k, verdict, counter):
    """Vertex-by-vertex search over order types, for large order-only alphabets.

    Each new label is placed relative to the values already in use; after
    every step all labels are compressed back to ranks.
    """
    n, adj = g.n, g.adj
    twins_before = [[] for _ in range(n)]
    for u, v in twin_pairs(g):
        twins_before[v].append(u)

    def rec(labels):
        depth = len(labels)
        if depth == n:
            return labels
        m = len({x for lab in labels for x in lab})
        step = k + 1
        scaled = [tuple(step * x for x in lab) for lab in labels]
        for cand in _candidates(m, k):
            counter.charge()
            if any(cand < scaled[u] for u in twins_before[depth]):
                continue
            ok = True
            for u in range(depth):
                counter.charge(2)
                if verdict(order_type(scaled[u] + cand)) != bool(adj[u] >> depth & 1) or \
                        verdict(order_type(cand + scaled[u])) != bool(adj[depth] >> u & 1):
                    ok = False
                    break
            if ok:
                found = rec(normalize_labeling(scaled + [cand]))
                if found is not None:
                    return found
        return None

    return rec([])


# --- union construction ---

def union_scheme(phi: Formula, psi: Formula) -> Formula:
    """Formula with 2k+2 variables whose class contains gr(phi) and gr(psi).

    Every label gets one extra slot (position k+1).  Equal extra slots on the
    two endpoints select ``phi``, different ones select ``psi``.
    """
    if phi.k != psi.k:
        raise UsageError(f"union needs equal k, got {phi.k} and {psi.k}")
    k = phi.k
    shift = {free_name(k + i): free_name(k + 1 + i) for i in range(1, k + 1)}
    phi2 = rename_free(phi.body, shift)
    psi2 = rename_free(psi.body, shift)
    guard = Eq(Var(free_name(k + 1)), Var(free_name(2 * k + 2)))
    body = And((Or((Not(guard), phi2)), Or((Not(Not(guard)), psi2))))
    return Formula(body, k + 1)


def extend_for_first(labeling: Sequence[Sequence[int]]) -> list[tuple]:
    """Witness for the union from a witness for its first formula: equal guard slots."""
    return [tuple(lab) + (1,) for lab in labeling]


def extend_for_second(labeling: Sequence[Sequence[int]]) -> list[tuple]:
    """Witness for the union from a witness for its second formula: distinct guard slots."""
    return [tuple(lab) + (v,) for v, lab in enumerate(labeling, start=1)]


# --- interval schemes ---

INTERVAL_TEXT = "!(x2 < y1 | y2 < x1)"


def interval_formula() -> LogicalScheme:
    """Two numbers per vertex, the endpoints of an interval; adjacent iff they meet."""
    return LogicalScheme(parse_formula(INTERVAL_TEXT), c=2)


def k_interval_formula(k: int) -> LogicalScheme:
    """2k numbers per vertex, k intervals; adjacent iff some interval pair meets.

    The universe exponent is 2k, the number of entries per label, which is
    large enough to hold every compressed labeling.
    """
    if k < 1:
        raise UsageError(f"need k >= 1 intervals, got {k}")
    m = 2 * k  # numbers per vertex
    overlaps = []
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            xl, xr = 2 * i - 1, 2 * i
            yl, yr = m + 2 * j - 1, m + 2 * j
            overlaps.append(parse_formula(f"!(x{xr} < x{yl} | x{yr} < x{xl})", k=m).body)
    return LogicalScheme(Formula(disj(*overlaps), m), c=m)
