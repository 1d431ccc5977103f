"""Finite simple graphs, their canonical codes, and the order on unlabeled graphs.

Vertices are the integers ``1..n``.  An undirected graph is stored as a
symmetric set of ordered pairs, so everything downstream deals with ordered
pairs only.

The order on unlabeled graphs is the lexicographic order of canonical codes.
A canonical code is the lexicographically least adjacency bit string over all
vertex relabelings: the upper triangle in row-major order for undirected
graphs, the full off-diagonal in row-major order for directed ones.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, UsageError

DEFAULT_CANON_MAX_N = 10
DEFAULT_ENUM_MAX_N = 6
DEFAULT_ENUM_MAX_N_DIRECTED = 4


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    directed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise UsageError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise UsageError(f"edge ({u}, {v}) out of range 1..{self.n}")
        if not self.directed:
            for u, v in self.edges:
                if (v, u) not in self.edges:
                    raise UsageError(f"undirected graph has unpaired edge ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], directed: bool = False) -> "Graph":
        """Build a graph; for undirected graphs each pair is added in both orientations."""
        es = set()
        for u, v in edges:
            es.add((u, v))
            if not directed:
                es.add((v, u))
        return cls(n, frozenset(es), directed)

    @functools.cached_property
    def adj(self) -> tuple[int, ...]:
        """Out-neighbourhood bitmasks, 0-based: bit ``j`` of ``adj[i]`` is edge (i+1, j+1)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
        return tuple(masks)

    @functools.cached_property
    def radj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return sorted(w for (u, w) in self.edges if u == v)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def num_edges(self) -> int:
        """Number of edges, counting an undirected edge once."""
        return len(self.edges) if self.directed else len(self.edges) // 2

    def undirected_edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for (u, v) in self.edges if u < v or (v, u) not in self.edges)

    def is_symmetric(self) -> bool:
        return all((v, u) in self.edges for (u, v) in self.edges)

    def as_undirected(self) -> "Graph":
        if not self.is_symmetric():
            raise UsageError("graph is not symmetric")
        return Graph(self.n, self.edges, directed=False)

    def same_edges(self, other: "Graph") -> bool:
        """Equality as labeled graphs, ignoring the directedness flag."""
        return self.n == other.n and self.edges == other.edges

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, {kind}, edges={self.undirected_edges() if not self.directed else sorted(self.edges)})"


def empty_graph(n: int, directed: bool = False) -> Graph:
    return Graph(n, frozenset(), directed)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise UsageError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((1, i) for i in range(2, leaves + 2)))


def family_fig1(i: int) -> Graph:
    """``i`` four-cycles glued at one centre vertex.

    Vertex 1 is the centre; the ``j``-th cycle is ``1 - a - d - b - 1`` with
    ``a = 3j-1``, ``b = 3j``, ``d = 3j+1``.
    """
    if i < 1:
        raise UsageError(f"family index must be >= 1, got {i}")
    edges = []
    for j in range(1, i + 1):
        a, b, d = 3 * j - 1, 3 * j, 3 * j + 1
        edges += [(1, a), (1, b), (a, d), (b, d)]
    return Graph.from_edges(3 * i + 1, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered ``1..|S|`` in increasing order."""
    s = sorted(set(vertices))
    if not s:
        raise UsageError("induced subgraph needs a non-empty vertex set")
    if s[0] < 1 or s[-1] > g.n:
        raise UsageError(f"vertex subset {s} out of range 1..{g.n}")
    pos = {v: i + 1 for i, v in enumerate(s)}
    edges = [(pos[u], pos[v]) for (u, v) in g.edges if u in pos and v in pos]
    return Graph(len(s), frozenset(edges), g.directed)


def edge_union(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise UsageError("edge union of an empty list")
    n, directed = graphs[0].n, graphs[0].directed
    for h in graphs[1:]:
        if h.n != n or h.directed != directed:
            raise UsageError("edge union needs graphs on the same vertex set with equal directedness")
    return Graph(n, frozenset().union(*(h.edges for h in graphs)), directed)


# --- canonical codes ------------------------------------------------------

def code_length(n: int, directed: bool) -> int:
    return n * (n - 1) if directed else n * (n - 1) // 2


def _positions(n: int, directed: bool) -> list[tuple[int, int]]:
    if directed:
        return [(i, j) for i in range(n) for j in range(n) if i != j]
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def adjacency_code(g: Graph, order: Sequence[int] | None = None) -> str:
    """Bit string of ``g`` with its vertices listed in ``order`` (0-based indices)."""
    if order is None:
        order = range(g.n)
    adj = g.adj
    return "".join(
        "1" if adj[order[i]] >> order[j] & 1 else "0" for i, j in _positions(g.n, g.directed)
    )


def graph_from_code(n: int, bits: str, directed: bool = False) -> Graph:
    pos = _positions(n, directed)
    if len(bits) != len(pos):
        raise UsageError(f"code length {len(bits)} does not match {len(pos)} for n={n}")
    edges = [(i + 1, j + 1) for (i, j), b in zip(pos, bits) if b == "1"]
    return Graph.from_edges(n, edges, directed)


def _twins(g: Graph) -> list[int]:
    """``mask[v]`` has bit ``u`` set when swapping u and v is an automorphism."""
    n, adj, radj = g.n, g.adj, g.radj
    out = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            m = ~((1 << u) | (1 << v))
            if (adj[u] & m) != (adj[v] & m) or (radj[u] & m) != (radj[v] & m):
                continue
            if (adj[u] >> v & 1) != (adj[v] >> u & 1):
                continue
            out[u] |= 1 << v
            out[v] |= 1 << u
    return out


def canonical_order(g: Graph, max_n: int = DEFAULT_CANON_MAX_N) -> tuple[str, tuple[int, ...]]:
    """Least adjacency code and one vertex order (0-based) attaining it.

    Exact branch and bound over vertex orders.  Positions are filled one at a
    time; the vertices still to be placed are kept as an ordered partition
    into cells whose position ranges are already forced by the rows emitted
    so far.  Each row is minimised by putting non-neighbours before
    neighbours inside every cell, and only candidates yielding the least row
    are branched on.  Candidates that are twins of an already tried candidate
    lead to the same code and are skipped.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"canonical code for n={n} exceeds the permutation budget n <= {max_n}")
    if n <= 1:
        return "", tuple(range(n))
    adj, directed = g.adj, g.directed
    twins = _twins(g)
    best: list = [None, None]

    def row(v, fixed, cells):
        bits = [adj[v] >> f & 1 for f in fixed] if directed else []
        new_cells = []
        for cell in cells:
            lo = [w for w in cell if w != v and not adj[v] >> w & 1]
            hi = [w for w in cell if w != v and adj[v] >> w & 1]
            bits += [0] * len(lo) + [1] * len(hi)
            if lo:
                new_cells.append(lo)
            if hi:
                new_cells.append(hi)
        return bits, new_cells

    def search(fixed, cells, prefix, tight):
        if not cells:
            if best[0] is None or prefix < best[0]:
                best[0], best[1] = list(prefix), tuple(fixed)
            return
        tried = 0
        options = []
        for v in cells[0]:
            if twins[v] & tried:
                continue
            tried |= 1 << v
            bits, new_cells = row(v, fixed, cells)
            options.append((bits, v, new_cells))
        least = min(o[0] for o in options)
        new_prefix = prefix + least
        new_tight = tight
        if tight and best[0] is not None:
            ref = best[0][: len(new_prefix)]
            if new_prefix > ref:
                return
            new_tight = new_prefix == ref
        for bits, v, new_cells in options:
            if bits == least:
                search(fixed + [v], new_cells, new_prefix, new_tight)
                if best[0] is not None and not new_tight:
                    # a strictly smaller code was just found below this node
                    new_tight = True

    search([], [list(range(n))], [], True)
    return "".join(map(str, best[0])), best[1]


def canonical_code(g: Graph, max_n: int = DEFAULT_CANON_MAX_N) -> str:
    return canonical_order(g, max_n)[0]


def canonical_form(g: Graph, max_n: int = DEFAULT_CANON_MAX_N) -> Graph:
    """The labeled graph whose adjacency code is the canonical code of ``g``."""
    return graph_from_code(g.n, canonical_code(g, max_n), g.directed)


def compare_unlabeled(g: Graph, h: Graph) -> int:
    """-1, 0 or 1 as ``g`` precedes, equals or follows ``h`` as unlabeled graphs."""
    if g.n != h.n or g.directed != h.directed:
        raise UsageError("can only compare graphs with equal vertex count and directedness")
    a, b = canonical_code(g), canonical_code(h)
    return (a > b) - (a < b)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return compare_unlabeled(g, h) == 0


# --- enumeration ----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _classes(n: int, directed: bool) -> tuple[str, ...]:
    """Sorted canonical codes of all unlabeled graphs on n vertices.

    Every graph on n vertices arises from one on n-1 vertices by adding a
    vertex with some in/out neighbourhood, so it suffices to extend one
    representative per smaller class.
    """
    if n <= 1:
        return ("",)
    codes = set()
    m = n - 1
    for small in _classes(m, directed):
        h = graph_from_code(m, small, directed)
        base = set(h.edges)
        if directed:
            choices = itertools.product(range(4), repeat=m)
        else:
            choices = itertools.product(range(2), repeat=m)
        for choice in choices:
            es = set(base)
            for i, c in enumerate(choice, start=1):
                if c & 1:
                    es.add((n, i))
                    if not directed:
                        es.add((i, n))
                if c & 2:
                    es.add((i, n))
            codes.add(canonical_code(Graph(n, frozenset(es), directed)))
    return tuple(sorted(codes))


def enumerate_graphs(n: int, directed: bool = False, max_n: int | None = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, in increasing order."""
    if n < 0:
        raise UsageError("vertex count must be non-negative")
    if max_n is None:
        max_n = DEFAULT_ENUM_MAX_N_DIRECTED if directed else DEFAULT_ENUM_MAX_N
    if n > max_n:
        raise BudgetExceeded(f"enumeration of n={n} {'directed' if directed else 'undirected'} graphs exceeds budget n <= {max_n}")
    for code in _classes(n, directed):
        yield graph_from_code(n, code, directed)


def iter_unlabeled(n: int, directed: bool = False, max_n: int = DEFAULT_CANON_MAX_N) -> Iterator[Graph]:
    """Lazy stream of unlabeled graphs in increasing order.

    Within the enumeration budget this is :func:`enumerate_graphs`; beyond it
    the bit strings are scanned in lexicographic order and only canonical
    ones are yielded, so a consumer that stops early pays only for the prefix.
    """
    small = DEFAULT_ENUM_MAX_N_DIRECTED if directed else DEFAULT_ENUM_MAX_N
    if n <= small:
        yield from enumerate_graphs(n, directed)
        return
    if n > max_n:
        raise BudgetExceeded(f"n={n} exceeds the canonical-code budget n <= {max_n}")
    m = code_length(n, directed)
    for x in range(1 << m):
        bits = (format(x, f"0{m}b") if m else "")
        g = graph_from_code(n, bits, directed)
        if canonical_code(g, max_n) == bits:
            yield g


def all_labeled_graphs(n: int, directed: bool = False) -> Iterator[Graph]:
    m = code_length(n, directed)
    for x in range(1 << m):
        yield graph_from_code(n, (format(x, f"0{m}b") if m else ""), directed)
