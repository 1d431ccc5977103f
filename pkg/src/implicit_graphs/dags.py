"""k-DAGs: partitions of the 2k label positions with strict-order arcs between parts.

Together with a labeling, a k-DAG induces the graph whose edges (u, v) are
the pairs where positions in a common part carry equal values and every
arc (A, B) has all values in A below all values in B.  Conjunctive clauses
of order atoms compile to k-DAGs and back; a quantifier-free order formula
becomes the edge-union of the graphs of its clauses' DAGs.

An arc may carry a weight ``w``, meaning ``x_j - x_i >= w`` for i in A and
j in B; weight 1 is the strict order.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceeded, ParseError, UsageError
from .graphs import Graph
from .logic import Atom, Clause, Formula, clause_conflict, order_type, to_dnf, to_nnf_lt
from .schemes.search import DEFAULT_BUDGET, Counter, twin_pairs


@dataclass(frozen=True)
class KDag:
    k: int
    parts: tuple  # tuple of frozensets of 1-based positions
    arcs: frozenset = frozenset()  # pairs (a, b) of 0-based part indices
    weights: tuple = ()  # sorted ((a, b), w) entries for arcs with w != 1

    def __post_init__(self):
        parts = tuple(frozenset(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        w = {arc: wt for arc, wt in dict(self.weights).items() if wt != 1}
        object.__setattr__(self, "weights", tuple(sorted(w.items())))
        self._validate()

    def _validate(self):
        if self.k < 1:
            raise UsageError(f"k must be >= 1, got {self.k}")
        seen = []
        for p in self.parts:
            if not p:
                raise UsageError("k-DAG parts must be non-empty")
            seen.extend(p)
        if sorted(seen) != list(range(1, 2 * self.k + 1)):
            raise UsageError(f"parts {self} do not partition [1..{2 * self.k}]")
        m = len(self.parts)
        for a, b in self.arcs:
            if not (0 <= a < m and 0 <= b < m):
                raise UsageError(f"arc ({a}, {b}) refers to a missing part")
            if a == b:
                raise UsageError(f"self-arc on part {a + 1}")
        for arc, wt in self.weights:
            if arc not in self.arcs:
                raise UsageError(f"weight given for missing arc {arc}")
            if wt < 1:
                raise UsageError(f"arc weights must be positive, got {wt}")
        if _has_cycle(m, self.arcs):
            raise UsageError("arcs of a k-DAG must be acyclic")

    def weight(self, a: int, b: int) -> int:
        return dict(self.weights).get((a, b), 1)

    @property
    def weighted(self) -> bool:
        return bool(self.weights)

    def holds(self, values: Sequence[int]) -> bool:
        """Whether the 2k-tuple ``values`` satisfies both k-DAG conditions."""
        for p in self.parts:
            it = iter(p)
            first = values[next(it) - 1]
            if any(values[i - 1] != first for i in it):
                return False
        wmap = dict(self.weights)
        for a, b in self.arcs:
            w = wmap.get((a, b), 1)
            hi = max(values[i - 1] for i in self.parts[a])
            lo = min(values[j - 1] for j in self.parts[b])
            if lo - hi < w:
                return False
        return True

    def __str__(self):
        return format_dag(self)


def _has_cycle(m, arcs):
    succ = [[] for _ in range(m)]
    indeg = [0] * m
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    queue = [v for v in range(m) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen < m


def graph_of_dag(dag: KDag, labeling: Sequence[Sequence[int]]) -> Graph:
    n = len(labeling)
    for v, lab in enumerate(labeling, start=1):
        if len(lab) != dag.k:
            raise UsageError(f"label of vertex {v} has {len(lab)} entries, expected {dag.k}")
    edges = [(u + 1, v + 1) for u in range(n) for v in range(n)
             if u != v and dag.holds(tuple(labeling[u]) + tuple(labeling[v]))]
    return Graph(n, frozenset(edges), directed=True)


def graph_of_dags(dags: Sequence[KDag], labeling: Sequence[Sequence[int]]) -> Graph:
    """Edge-union of the graphs of several k-DAGs under one labeling."""
    n = len(labeling)
    edges = set()
    for d in dags:
        edges |= graph_of_dag(d, labeling).edges
    return Graph(n, frozenset(edges), directed=True)


def _sorted_dag(k, parts, arcs, weights=()):
    """Reorder parts by their least position and renumber arcs accordingly."""
    order = sorted(range(len(parts)), key=lambda i: min(parts[i]))
    new_index = {old: new for new, old in enumerate(order)}
    return KDag(k, tuple(parts[i] for i in order),
                frozenset((new_index[a], new_index[b]) for a, b in arcs),
                tuple(((new_index[a], new_index[b]), w) for (a, b), w in weights))


def clause_to_dag(clause: Clause) -> KDag:
    """Parts are the classes of the equality atoms; ``<`` atoms become arcs between parts."""
    why = clause_conflict(clause)
    if why is not None:
        raise UsageError(f"clause is unsatisfiable: {why}")
    k = clause.k
    parent = list(range(2 * k + 1))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in clause.atoms:
        if a.rel == "=":
            ri, rj = find(a.i), find(a.j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, set] = {}
    for v in range(1, 2 * k + 1):
        groups.setdefault(find(v), set()).add(v)
    roots = sorted(groups)
    index = {r: i for i, r in enumerate(roots)}
    parts = tuple(frozenset(groups[r]) for r in roots)
    arcs = {(index[find(a.i)], index[find(a.j)]) for a in clause.atoms if a.rel == "<"}
    return _sorted_dag(k, parts, arcs)


def dag_to_clause(dag: KDag) -> Clause:
    """Equalities from each part's least position to its other members, one ``<`` per arc."""
    if dag.weighted:
        raise UsageError("weighted arcs have no clause form")
    reps = [min(p) for p in dag.parts]
    atoms = [Atom("=", r, x) for r, p in zip(reps, dag.parts) for x in sorted(p) if x != r]
    atoms += [Atom("<", reps[a], reps[b]) for a, b in sorted(dag.arcs)]
    return Clause(tuple(atoms), dag.k)


def formula_to_dags(phi: Formula) -> list[KDag]:
    """One k-DAG per satisfiable clause of the disjunctive normal form of ``phi``."""
    return [clause_to_dag(c) for c in to_dnf(to_nnf_lt(phi))]


def closure_canon(dag: KDag) -> KDag:
    """Same parts (ordered by least position) with the transitive closure of the arcs."""
    if dag.weighted:
        raise UsageError("closure canonical form is defined for unweighted k-DAGs only")
    m = len(dag.parts)
    reach = [set() for _ in range(m)]
    for a, b in dag.arcs:
        reach[a].add(b)
    for mid in range(m):
        for a in range(m):
            if mid in reach[a]:
                reach[a] |= reach[mid]
    arcs = {(a, b) for a in range(m) for b in reach[a]}
    return _sorted_dag(dag.k, dag.parts, arcs)


def weak_order_dag(ranks: Sequence[int]) -> KDag:
    """The k-DAG satisfied exactly by tuples of the given order type: a chain of blocks."""
    m = len(ranks)
    if m % 2:
        raise UsageError("order types of label pairs have even length")
    blocks = [frozenset(i + 1 for i in range(m) if ranks[i] == r) for r in range(max(ranks) + 1)]
    arcs = {(r, r + 1) for r in range(len(blocks) - 1)}
    return _sorted_dag(m // 2, blocks, arcs)


# --- text form ---

_PART = re.compile(r"\{([^{}]*)\}")
_ARC = re.compile(r"\s*(\d+)\s*->\s*(\d+)\s*(?:\(\s*w\s*=\s*(\d+)\s*\))?\s*\Z")


def format_dag(dag: KDag) -> str:
    parts = "".join("{" + ",".join(map(str, sorted(p))) + "}" for p in dag.parts)
    wmap = dict(dag.weights)
    arcs = []
    for a, b in sorted(dag.arcs):
        w = wmap.get((a, b), 1)
        arcs.append(f"{a + 1}->{b + 1}" + (f" (w={w})" if w != 1 else ""))
    return f"parts: {parts}; arcs: {', '.join(arcs)}".rstrip()


def parse_dag(text: str, k: int | None = None) -> KDag:
    """Parse ``parts: {1,3}{2}{4}; arcs: 1->2 (w=1), 2->3``; parts are numbered from 1."""
    s = text.strip()
    m = re.match(r"parts\s*:\s*(.*?)\s*(?:;\s*arcs\s*:\s*(.*))?\Z", s, re.DOTALL)
    if not m:
        raise ParseError("expected 'parts: {..}{..}; arcs: a->b, ...'", offset=0)
    parts_text, arcs_text = m.group(1), m.group(2) or ""
    parts = []
    pos = 0
    for pm in _PART.finditer(parts_text):
        if parts_text[pos:pm.start()].strip():
            raise ParseError(f"unexpected text {parts_text[pos:pm.start()]!r} in parts", offset=pm.start())
        try:
            parts.append(frozenset(int(x) for x in pm.group(1).split(",") if x.strip()))
        except ValueError:
            raise ParseError(f"bad part {pm.group(0)!r}", offset=pm.start()) from None
        pos = pm.end()
    if parts_text[pos:].strip() or not parts:
        raise ParseError("malformed parts list", offset=pos)
    arcs, weights = set(), []
    if arcs_text.strip() and arcs_text.strip() != "-":
        for item in arcs_text.split(","):
            am = _ARC.match(item)
            if not am:
                raise ParseError(f"malformed arc {item.strip()!r}")
            a, b = int(am.group(1)) - 1, int(am.group(2)) - 1
            arcs.add((a, b))
            if am.group(3) is not None:
                weights.append(((a, b), int(am.group(3))))
    size = sum(len(p) for p in parts)
    if size % 2:
        raise ParseError(f"parts cover {size} positions; a k-DAG covers 2k")
    if k is None:
        k = size // 2
    return KDag(k, tuple(parts), frozenset(arcs), tuple(weights))


# --- expressibility ---

def expressible(g: Graph, k: int, budget: int = DEFAULT_BUDGET, max_n: int | None = None):
    """A k-labeling and k-DAGs whose edge-union is ``g``, or ``None`` if none exists.

    Under a fixed labeling, ``g`` is an edge-union of k-DAG graphs iff no
    order type of a label pair occurs both on an edge and on a non-edge
    (ordered pairs of distinct vertices).  The complete order type of each
    edge then serves as one DAG.  Labelings are searched exhaustively over
    tuples whose entries form an initial segment of the positive integers,
    which loses nothing because the criterion depends on order types only.
    """
    n = g.n
    if k < 1:
        raise UsageError(f"need k >= 1, got {k}")
    if max_n is not None and n > max_n:
        raise BudgetExceeded(f"expressibility search limited to n <= {max_n}")
    if n == 0:
        return [], []
    counter = Counter(budget)
    top = k * n
    alphabet = list(itertools.product(range(1, top + 1), repeat=k))
    adj = g.adj
    twins_before = [[] for _ in range(n)]
    for u, v in twin_pairs(g):
        twins_before[v].append(u)

    labels: list[int] = [0] * n
    verdict: dict[tuple, bool] = {}
    used = [0] * (top + 1)

    def dense_ok(depth):
        hi = max((x for x in range(1, top + 1) if used[x]), default=0)
        missing = sum(1 for x in range(1, hi + 1) if not used[x])
        return missing <= (n - depth) * k

    def rec(depth):
        if depth == n:
            return dense_ok(n)
        lo = max((labels[u] for u in twins_before[depth]), default=0)
        for a in range(lo, len(alphabet)):
            counter.charge()
            lab = alphabet[a]
            for x in lab:
                used[x] += 1
            added = []
            ok = dense_ok(depth + 1)
            if ok:
                for u in range(depth):
                    for t, is_edge in ((order_type(alphabet[labels[u]] + lab), bool(adj[u] >> depth & 1)),
                                       (order_type(lab + alphabet[labels[u]]), bool(adj[depth] >> u & 1))):
                        prev = verdict.get(t)
                        if prev is None:
                            verdict[t] = is_edge
                            added.append(t)
                        elif prev != is_edge:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                labels[depth] = a
                if rec(depth + 1):
                    return True
            for t in added:
                del verdict[t]
            for x in lab:
                used[x] -= 1
        return False

    if not rec(0):
        return None
    labeling = [alphabet[a] for a in labels]
    edge_types = sorted(t for t, e in verdict.items() if e)
    return labeling, [weak_order_dag(t) for t in edge_types]
