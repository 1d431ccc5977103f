"""Random generators and brute-force oracles shared by the test modules."""

import itertools
import random

from implicit_graphs.graphs import Graph
from implicit_graphs.logic import And, Clause, Atom, Eq, Formula, Lt, Not, Or, Var
from implicit_graphs.logic.formula import free_name


def random_qf_formula(rng: random.Random, k: int, max_atoms: int = 6) -> Formula:
    """Random quantifier-free order formula over x1..x2k with at most ``max_atoms`` atoms."""
    m = 2 * k
    budget = [rng.randint(1, max_atoms)]

    def atom():
        i, j = rng.randint(1, m), rng.randint(1, m)
        cls = rng.choice((Lt, Eq))
        return cls(Var(free_name(i)), Var(free_name(j)))

    def build(depth):
        if budget[0] <= 1 or depth > 4 or rng.random() < 0.3:
            budget[0] -= 1
            node = atom()
        else:
            op = rng.choice(("and", "or", "not"))
            if op == "not":
                node = Not(build(depth + 1))
            else:
                budget[0] -= 1
                left = build(depth + 1)
                right = build(depth + 1)
                node = (And if op == "and" else Or)((left, right))
        return node

    return Formula(build(0), k)


def random_clause(rng: random.Random, k: int, max_atoms: int = 6) -> Clause:
    m = 2 * k
    atoms = [Atom(rng.choice("<="), rng.randint(1, m), rng.randint(1, m))
             for _ in range(rng.randint(1, max_atoms))]
    return Clause(tuple(atoms), k)


def random_labeling(rng: random.Random, n: int, k: int, top: int):
    return [tuple(rng.randint(1, top) for _ in range(k)) for _ in range(n)]


def brute_satisfiable(clause: Clause) -> bool:
    m = 2 * clause.k
    return any(clause.holds(vals) for vals in itertools.product(range(1, m + 1), repeat=m))


def graph_by_predicate(n: int, pred) -> Graph:
    """Directed graph on 1..n with edge (u, v), u != v, iff pred(u-1, v-1)."""
    edges = [(u + 1, v + 1) for u in range(n) for v in range(n) if u != v and pred(u, v)]
    return Graph(n, frozenset(edges), directed=True)


def brute_canonical_code(g: Graph) -> str:
    """Least adjacency code over all n! relabelings."""
    n = g.n
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        if g.directed:
            cells = [(i, j) for i in range(n) for j in range(n) if i != j]
        else:
            cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
        code = "".join("1" if (perm[i], perm[j]) in g.edges else "0" for i, j in cells)
        if best is None or code < best:
            best = code
    return best or ""


def random_interval_model(rng: random.Random, n: int, span: int = 12):
    out = []
    for _ in range(n):
        a, b = sorted((rng.randint(1, span), rng.randint(1, span)))
        out.append((a, b))
    return out


def interval_graph(model) -> Graph:
    n = len(model)
    edges = [(u + 1, v + 1) for u in range(n) for v in range(u + 1, n)
             if not (model[u][1] < model[v][0] or model[v][1] < model[u][0])]
    return Graph.from_edges(n, edges)


def fubini(m: int) -> int:
    """Ordered Bell numbers by the binomial recurrence."""
    from math import comb
    a = [1]
    for j in range(1, m + 1):
        a.append(sum(comb(j, i) * a[j - i] for i in range(1, j + 1)))
    return a[m]
