"""Negation-free and disjunctive normal forms of quantifier-free order formulas."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BudgetExceeded, UnsupportedFragment
from .formula import (Add, And, Eq, Exists, Forall, Formula, Lt, Mul, Not, Or, Var,
                      disj, conj, free_index, free_name)

DNF_CLAUSE_BUDGET = 1 << 16


@dataclass(frozen=True, order=True)
class Atom:
    """``x_i < x_j`` or ``x_i = x_j`` (1-based variable indices)."""

    rel: str
    i: int
    j: int

    def __post_init__(self):
        if self.rel not in ("<", "="):
            raise ValueError(f"unknown relation {self.rel!r}")
        if self.rel == "=" and self.i > self.j:
            i, j = self.j, self.i
            object.__setattr__(self, "i", i)
            object.__setattr__(self, "j", j)

    def holds(self, values) -> bool:
        a, b = values[self.i - 1], values[self.j - 1]
        return a < b if self.rel == "<" else a == b

    def to_node(self):
        a, b = Var(free_name(self.i)), Var(free_name(self.j))
        return Lt(a, b) if self.rel == "<" else Eq(a, b)

    def __str__(self):
        return f"x{self.i} {self.rel} x{self.j}"


@dataclass(frozen=True)
class Clause:
    """A conjunction of atoms over the variables ``x1 .. x2k``."""

    atoms: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(sorted(set(self.atoms))))
        for a in self.atoms:
            if not (1 <= a.i <= 2 * self.k and 1 <= a.j <= 2 * self.k):
                raise ValueError(f"atom {a} uses a variable outside x1..x{2 * self.k}")

    def holds(self, values) -> bool:
        return all(a.holds(values) for a in self.atoms)

    def to_formula(self) -> Formula:
        if not self.atoms:
            # the empty conjunction: a tautology over x1
            return Formula(Eq(Var("x1"), Var("x1")), self.k)
        return Formula(conj(*(a.to_node() for a in self.atoms)), self.k)

    def __str__(self):
        return " & ".join(map(str, self.atoms)) if self.atoms else "true"


def _check_fragment(node):
    if isinstance(node, (Exists, Forall)):
        raise UnsupportedFragment("quantifiers are not supported here")
    if isinstance(node, (Lt, Eq)):
        for t in (node.left, node.right):
            if isinstance(t, (Add, Mul)):
                raise UnsupportedFragment("arithmetic is not supported here")
    elif isinstance(node, Not):
        _check_fragment(node.arg)
    elif isinstance(node, (And, Or)):
        for a in node.args:
            _check_fragment(a)


def _nnf(node, negate: bool):
    if isinstance(node, Not):
        return _nnf(node.arg, not negate)
    if isinstance(node, (And, Or)):
        args = tuple(_nnf(a, negate) for a in node.args)
        flip = isinstance(node, And) == negate
        return Or(args) if flip else And(args)
    if not negate:
        return node
    x, y = node.left, node.right
    if isinstance(node, Eq):
        return Or((Lt(x, y), Lt(y, x)))
    return Or((Lt(y, x), Eq(x, y)))


def to_nnf_lt(phi: Formula) -> Formula:
    """Equivalent negation-free formula.

    Negations are pushed to the atoms and then removed:
    ``!(x = y)`` becomes ``x < y | y < x`` and ``!(x < y)`` becomes
    ``y < x | x = y``.
    """
    _check_fragment(phi.body)
    return Formula(_nnf(phi.body, False), phi.k)


def _atom_of(node) -> Atom:
    i, j = free_index(node.left.name), free_index(node.right.name)
    return Atom("<" if isinstance(node, Lt) else "=", i, j)


def _dnf(node, budget):
    if isinstance(node, (Lt, Eq)):
        return [frozenset([_atom_of(node)])]
    if isinstance(node, Or):
        out = []
        for a in node.args:
            out.extend(_dnf(a, budget))
            if len(out) > budget:
                raise BudgetExceeded(f"DNF exceeds {budget} clauses", budget=budget)
        return out
    if isinstance(node, And):
        acc = [frozenset()]
        for a in node.args:
            part = _dnf(a, budget)
            if len(acc) * len(part) > budget:
                raise BudgetExceeded(f"DNF exceeds {budget} clauses", budget=budget)
            acc = list({c | d for c in acc for d in part})
        return acc
    raise UnsupportedFragment(f"negation-free formula expected, found {type(node).__name__}")


def to_dnf(phi: Formula, budget: int = DNF_CLAUSE_BUDGET) -> list[Clause]:
    """Satisfiable clauses whose disjunction is equivalent to ``phi``.

    Formulas that still contain negations are first passed through
    :func:`to_nnf_lt`.  Duplicate and unsatisfiable clauses are dropped, so an
    unsatisfiable formula yields an empty list.
    """
    _check_fragment(phi.body)
    body = phi.body
    if any(isinstance(n, Not) for n in _nodes(body)):
        body = to_nnf_lt(phi).body
    clauses = {Clause(tuple(c), phi.k) for c in _dnf(body, budget)}
    kept = [c for c in clauses if clause_satisfiable(c)]
    return sorted(kept, key=lambda c: (len(c.atoms), c.atoms))


def _nodes(node):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, Not):
            stack.append(n.arg)
        elif isinstance(n, (And, Or)):
            stack.extend(n.args)


def from_clauses(clauses, k: int) -> Formula:
    """Disjunction of clauses as a formula; no clauses gives ``x1 < x1``."""
    if not clauses:
        return Formula(Lt(Var("x1"), Var("x1")), k)
    return Formula(disj(*(c.to_formula().body for c in clauses)), k)


def _components(clause: Clause) -> dict[int, int]:
    """Union-find over the equality atoms; maps each variable to its root."""
    parent = {v: v for v in range(1, 2 * clause.k + 1)}
    for a in clause.atoms:
        parent.setdefault(a.i, a.i)
        parent.setdefault(a.j, a.j)

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
    return {v: find(v) for v in parent}


def clause_conflict(clause: Clause) -> str | None:
    """Why the clause is unsatisfiable, or ``None`` if it is satisfiable.

    Equal variables are merged first; the clause is satisfiable over the
    naturals iff no ``<`` atom falls inside a merged class and the ``<``
    relation between classes is acyclic.
    """
    root = _components(clause)
    succ: dict[int, set] = {}
    for a in clause.atoms:
        if a.rel != "<":
            continue
        ri, rj = root[a.i], root[a.j]
        if ri == rj:
            return f"atom {a} relates two variables forced equal"
        succ.setdefault(ri, set()).add(rj)
    # Kahn's algorithm on the merged < graph
    nodes = set(root.values())
    indeg = {v: 0 for v in nodes}
    for v, ws in succ.items():
        for w in ws:
            indeg[w] += 1
    queue = [v for v in nodes if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ.get(v, ()):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen < len(nodes):
        cyc = sorted(v for v in nodes if indeg[v] > 0)
        return "the < atoms form a cycle among " + ", ".join(f"x{v}" for v in cyc)
    return None


def clause_satisfiable(clause: Clause) -> bool:
    return clause_conflict(clause) is None
