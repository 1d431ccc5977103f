"""Formula syntax trees and their semantics over the capped arithmetic structures.

The structure on ``[N]`` has the usual order, and addition and multiplication
that fall back to 1 whenever the true result would leave the universe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from ..errors import UsageError


# --- terms ---

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, Add, Mul]


# --- formulas ---

@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    arg: "Node"


@dataclass(frozen=True)
class And:
    args: tuple


@dataclass(frozen=True)
class Or:
    args: tuple


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Node"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Node"


Node = Union[Lt, Eq, Not, And, Or, Exists, Forall]

_FREE_RE = re.compile(r"x([1-9][0-9]*)\Z")


def free_name(i: int) -> str:
    return f"x{i}"


def free_index(name: str) -> int | None:
    m = _FREE_RE.match(name)
    return int(m.group(1)) if m else None


def conj(*args) -> Node:
    return args[0] if len(args) == 1 else And(tuple(args))


def disj(*args) -> Node:
    return args[0] if len(args) == 1 else Or(tuple(args))


def lt(i: int, j: int) -> Lt:
    return Lt(Var(free_name(i)), Var(free_name(j)))


def eq(i: int, j: int) -> Eq:
    return Eq(Var(free_name(i)), Var(free_name(j)))


@dataclass(frozen=True)
class Formula:
    """A label-decoder formula with free variables ``x1 .. x2k``.

    The first ``k`` variables describe the label of the source vertex, the
    last ``k`` the label of the target vertex.  Not every one of them has to
    occur in ``body``.
    """

    body: Node
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise UsageError(f"k must be >= 1, got {self.k}")
        for name in free_vars(self.body):
            i = free_index(name)
            if i is None or i > 2 * self.k:
                raise UsageError(f"free variable {name!r} is not among x1..x{2 * self.k}")

    @property
    def arity(self) -> int:
        return 2 * self.k

    @property
    def quantifier_free(self) -> bool:
        return not any(isinstance(n, (Exists, Forall)) for n in walk(self.body))

    @property
    def arithmetic_free(self) -> bool:
        return not any(isinstance(n, (Add, Mul)) for n in walk(self.body))

    def __str__(self):
        return to_text(self.body)


def walk(node) -> Iterable:
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, (Add, Mul, Lt, Eq)):
            stack += [n.left, n.right]
        elif isinstance(n, Not):
            stack.append(n.arg)
        elif isinstance(n, (And, Or)):
            stack += list(n.args)
        elif isinstance(n, (Exists, Forall)):
            stack.append(n.body)


def free_vars(node, bound: frozenset = frozenset()) -> set[str]:
    if isinstance(node, Var):
        return set() if node.name in bound else {node.name}
    if isinstance(node, (Add, Mul, Lt, Eq)):
        return free_vars(node.left, bound) | free_vars(node.right, bound)
    if isinstance(node, Not):
        return free_vars(node.arg, bound)
    if isinstance(node, (And, Or)):
        out = set()
        for a in node.args:
            out |= free_vars(a, bound)
        return out
    if isinstance(node, (Exists, Forall)):
        return free_vars(node.body, bound | {node.var})
    raise TypeError(f"not a formula node: {node!r}")


def rename_free(node, mapping: Mapping[str, str], bound: frozenset = frozenset()):
    """Substitute free variable names; bound occurrences are left alone."""
    if isinstance(node, Var):
        if node.name in bound or node.name not in mapping:
            return node
        return Var(mapping[node.name])
    if isinstance(node, Add):
        return Add(rename_free(node.left, mapping, bound), rename_free(node.right, mapping, bound))
    if isinstance(node, Mul):
        return Mul(rename_free(node.left, mapping, bound), rename_free(node.right, mapping, bound))
    if isinstance(node, Lt):
        return Lt(rename_free(node.left, mapping, bound), rename_free(node.right, mapping, bound))
    if isinstance(node, Eq):
        return Eq(rename_free(node.left, mapping, bound), rename_free(node.right, mapping, bound))
    if isinstance(node, Not):
        return Not(rename_free(node.arg, mapping, bound))
    if isinstance(node, And):
        return And(tuple(rename_free(a, mapping, bound) for a in node.args))
    if isinstance(node, Or):
        return Or(tuple(rename_free(a, mapping, bound) for a in node.args))
    if isinstance(node, Exists):
        return Exists(node.var, rename_free(node.body, mapping, bound | {node.var}))
    if isinstance(node, Forall):
        return Forall(node.var, rename_free(node.body, mapping, bound | {node.var}))
    raise TypeError(f"not a formula node: {node!r}")


# --- semantics ---

def capped_add(x: int, y: int, n: int) -> int:
    s = x + y
    return s if s <= n else 1


def capped_mul(x: int, y: int, n: int) -> int:
    p = x * y
    return p if p <= n else 1


def _term(t, env, n):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Add):
        return capped_add(_term(t.left, env, n), _term(t.right, env, n), n)
    if isinstance(t, Mul):
        return capped_mul(_term(t.left, env, n), _term(t.right, env, n), n)
    raise TypeError(f"not a term: {t!r}")


def _holds(node, env, n) -> bool:
    if isinstance(node, Lt):
        return _term(node.left, env, n) < _term(node.right, env, n)
    if isinstance(node, Eq):
        return _term(node.left, env, n) == _term(node.right, env, n)
    if isinstance(node, Not):
        return not _holds(node.arg, env, n)
    if isinstance(node, And):
        return all(_holds(a, env, n) for a in node.args)
    if isinstance(node, Or):
        return any(_holds(a, env, n) for a in node.args)
    if isinstance(node, Exists):
        saved = env.get(node.var)
        try:
            for v in range(1, n + 1):
                env[node.var] = v
                if _holds(node.body, env, n):
                    return True
            return False
        finally:
            _restore(env, node.var, saved)
    if isinstance(node, Forall):
        saved = env.get(node.var)
        try:
            for v in range(1, n + 1):
                env[node.var] = v
                if not _holds(node.body, env, n):
                    return False
            return True
        finally:
            _restore(env, node.var, saved)
    raise TypeError(f"not a formula node: {node!r}")


def _restore(env, name, saved):
    if saved is None:
        env.pop(name, None)
    else:
        env[name] = saved


def evaluate(phi: Formula, universe: int, assignment: Sequence[int]) -> bool:
    """Truth of ``phi`` in the structure on ``[universe]`` under ``x_i := assignment[i-1]``."""
    if universe < 1:
        raise UsageError(f"universe size must be >= 1, got {universe}")
    if len(assignment) != phi.arity:
        raise UsageError(f"assignment has {len(assignment)} values, formula has {phi.arity} free variables")
    for i, a in enumerate(assignment, start=1):
        if not 1 <= a <= universe:
            raise UsageError(f"value x{i}={a} outside [1, {universe}]")
    env = {free_name(i): a for i, a in enumerate(assignment, start=1)}
    return _holds(phi.body, env, universe)


def holds_unchecked(phi: Formula, universe: int, assignment: Sequence[int]) -> bool:
    """:func:`evaluate` without range checks, for inner search loops."""
    env = {free_name(i): a for i, a in enumerate(assignment, start=1)}
    return _holds(phi.body, env, universe)


# --- printing ---

_PREC = {Or: 1, And: 2, Not: 3}


def _term_text(t, parent=0) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Add):
        s = f"{_term_text(t.left, 1)} + {_term_text(t.right, 2)}"
        return f"({s})" if parent > 1 else s
    if isinstance(t, Mul):
        return f"{_term_text(t.left, 2)} * {_term_text(t.right, 3)}" if parent <= 2 else \
            f"({_term_text(t.left, 2)} * {_term_text(t.right, 3)})"
    raise TypeError(f"not a term: {t!r}")


def to_text(node, parent: int = 0) -> str:
    """Render in the input DSL; the output parses back to an equal tree."""
    if isinstance(node, Lt):
        return f"{_term_text(node.left)} < {_term_text(node.right)}"
    if isinstance(node, Eq):
        return f"{_term_text(node.left)} = {_term_text(node.right)}"
    if isinstance(node, Not):
        return "!" + to_text(node.arg, 3)
    if isinstance(node, (And, Or)):
        prec = _PREC[type(node)]
        sep = " & " if isinstance(node, And) else " | "
        s = sep.join(to_text(a, prec + 1) for a in node.args)
        return f"({s})" if parent >= prec else s
    if isinstance(node, (Exists, Forall)):
        q = "exists" if isinstance(node, Exists) else "forall"
        s = f"{q} {node.var}. {to_text(node.body)}"
        return f"({s})" if parent > 0 else s
    raise TypeError(f"not a formula node: {node!r}")
