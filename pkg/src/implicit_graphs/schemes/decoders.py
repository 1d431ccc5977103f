"""Label decoders on bit strings and the labeling schemes built from them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import UsageError
from ..graphs import Graph
from .search import DEFAULT_BUDGET, Counter, find_labeling


@dataclass(frozen=True)
class LabelDecoder:
    """A named adjacency predicate on pairs of equal-length bit strings."""

    name: str
    fn: Callable[[str, str], bool]

    def __call__(self, x: str, y: str) -> bool:
        if len(x) != len(y):
            raise UsageError(f"decoder {self.name!r} called on labels of unequal length {len(x)} and {len(y)}")
        return bool(self.fn(x, y))

    def __repr__(self):
        return f"LabelDecoder({self.name!r})"


def language_decoder(name: str, language: Callable[[str], bool]) -> LabelDecoder:
    """Decoder induced by a language: accept (x, y) iff the word xy is in it."""
    return LabelDecoder(name, lambda x, y: language(x + y))


def _interval_language(word: str) -> bool:
    # word = x1 x2 y1 y2 with four blocks of equal length; strings compare lexicographically
    if len(word) % 4:
        return False
    q = len(word) // 4
    x1, x2, y1, y2 = (word[i * q:(i + 1) * q] for i in range(4))
    return not (x2 < y1 or y2 < x1)


ALL = LabelDecoder("all", lambda x, y: True)
NONE = LabelDecoder("none", lambda x, y: False)
EQ = LabelDecoder("eq", lambda x, y: x == y)
LT = LabelDecoder("lt", lambda x, y: x < y)
INTERVAL = language_decoder("interval", _interval_language)

BUILTIN_DECODERS = {d.name: d for d in (ALL, NONE, EQ, LT, INTERVAL)}


def get_decoder(name: str) -> LabelDecoder:
    try:
        return BUILTIN_DECODERS[name]
    except KeyError:
        raise UsageError(f"unknown decoder {name!r}; built-ins are {', '.join(BUILTIN_DECODERS)}") from None


def log2ceil(n: int) -> int:
    """Ceiling of log2 n, with log 1 = 0."""
    return 0 if n <= 1 else math.ceil(math.log2(n))


@dataclass(frozen=True)
class BitScheme:
    decoder: LabelDecoder
    c: int

    def __post_init__(self):
        if self.c < 0:
            raise UsageError(f"label length multiplier must be >= 0, got {self.c}")

    def label_length(self, n: int) -> int:
        return self.c * log2ceil(n)


def graph_of_bitscheme(scheme: BitScheme, labels: Sequence[str]) -> Graph:
    """Directed graph with edge (u, v), u != v, iff the decoder accepts (l(u), l(v))."""
    n = len(labels)
    want = scheme.label_length(n)
    for v, lab in enumerate(labels, start=1):
        if len(lab) != want or set(lab) - {"0", "1"}:
            raise UsageError(f"label of vertex {v} must be a {want}-bit string, got {lab!r}")
    edges = [(u + 1, v + 1) for u in range(n) for v in range(n)
             if u != v and scheme.decoder(labels[u], labels[v])]
    return Graph(n, frozenset(edges), directed=True)


def member_bitscheme(scheme: BitScheme, g: Graph, budget: int = DEFAULT_BUDGET) -> list[str] | None:
    """A labeling witnessing ``g`` in gr(scheme), or ``None`` if there is none.

    The search is exhaustive; :class:`~implicit_graphs.errors.BudgetExceeded`
    is raised when it runs out of budget before deciding.
    """
    m = scheme.label_length(g.n)
    words = [format(i, f"0{m}b") if m else "" for i in range(1 << m)]
    found = find_labeling(g, len(words), lambda a, b: scheme.decoder(words[a], words[b]),
                          counter=Counter(budget))
    return None if found is None else [words[a] for a in found]
