"""Diagonalization at desk scale.

Vertex counts are paired with schemes through ``tau``: ``n = 2**(2**y * 3**z * 5**w)``
selects decoder ``y`` of a registry with label multiplier ``z``.  For each such
``n`` the class stores the least unlabeled graph (by canonical code) that the
selected scheme cannot represent.  A lookup decoder built from the stored
graphs represents the whole class with labels of exactly ``log2 n`` bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BudgetExceeded, UsageError, VerificationError
from .graph6 import write_graph6
from .graphs import Graph, canonical_form, compare_unlabeled, is_isomorphic, iter_unlabeled
from .schemes.decoders import NONE, BitScheme, LabelDecoder, get_decoder, graph_of_bitscheme, log2ceil, member_bitscheme
from .schemes.search import DEFAULT_BUDGET

DEFAULT_NMAX = 8
DIRECTED_NMAX = 4


def tau(x: int) -> tuple[int, int] | None:
    """``(y, z)`` when ``x = 2**(2**y * 3**z * 5**w)`` for some ``w >= 0``, else ``None``."""
    full = tau_full(x)
    return None if full is None else full[:2]


def tau_full(x: int) -> tuple[int, int, int] | None:
    if x < 1:
        raise UsageError(f"tau is defined on positive integers, got {x}")
    if x & (x - 1):
        return None
    e = x.bit_length() - 1
    if e == 0:
        return None
    exps = []
    for p in (2, 3, 5):
        c = 0
        while e % p == 0:
            e //= p
            c += 1
        exps.append(c)
    return tuple(exps) if e == 1 else None


def tau_preimage(y: int, z: int, w: int = 0) -> int:
    return 2 ** (2 ** y * 3 ** z * 5 ** w)


@dataclass(frozen=True)
class DecoderRegistry:
    """Finite, ordered list of decoders indexed from 0."""

    decoders: tuple
    policy: str = "modulo"  # or "empty": indices past the end resolve to the empty decoder

    def __post_init__(self):
        object.__setattr__(self, "decoders", tuple(self.decoders))
        if not self.decoders:
            raise UsageError("decoder registry must not be empty")
        if self.policy not in ("modulo", "empty"):
            raise UsageError(f"unknown index policy {self.policy!r}")

    @classmethod
    def parse(cls, text: str, policy: str = "modulo") -> "DecoderRegistry":
        names = [s.strip() for s in text.split(",") if s.strip()]
        return cls(tuple(get_decoder(s) for s in names), policy)

    def resolve(self, index: int) -> LabelDecoder:
        if index < 0:
            raise UsageError(f"registry index must be >= 0, got {index}")
        if self.policy == "modulo":
            return self.decoders[index % len(self.decoders)]
        return self.decoders[index] if index < len(self.decoders) else NONE

    @property
    def names(self) -> list[str]:
        return [d.name for d in self.decoders]


def scheme_at(n: int, registry: DecoderRegistry) -> BitScheme | None:
    t = tau(n)
    if t is None:
        return None
    y, z = t
    return BitScheme(registry.resolve(y), z)


def smallest_missing_graph(n: int, scheme: BitScheme, directed: bool = False,
                           budget: int = DEFAULT_BUDGET) -> Graph | None:
    """Least unlabeled ``n``-vertex graph outside gr(scheme), or ``None`` if there is none."""
    if directed and n > DIRECTED_NMAX:
        raise BudgetExceeded(f"directed diagonalization is limited to n <= {DIRECTED_NMAX}")
    for g in iter_unlabeled(n, directed):
        if member_bitscheme(scheme, g, budget) is None:
            return g
    return None


@dataclass(frozen=True)
class DiagEntry:
    n: int
    tau: tuple
    decoder: str
    z: int
    graph: Graph | None
    status: str  # "stored", "none-missing" or "budget"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "tau": list(self.tau),
            "decoder": self.decoder,
            "z": self.z,
            "status": self.status,
            "graph6": None if self.graph is None else write_graph6(self.graph),
        }


@dataclass(frozen=True)
class DiagClass:
    entries: tuple
    registry: tuple = ()
    policy: str = "modulo"
    directed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(sorted(self.entries, key=lambda e: e.n)))
        ns = [e.n for e in self.entries]
        if len(set(ns)) != len(ns):
            raise UsageError("at most one entry per vertex count")

    @property
    def graphs(self) -> dict[int, Graph]:
        return {e.n: e.graph for e in self.entries if e.graph is not None}

    def to_json(self) -> dict:
        return {
            "registry": list(self.registry),
            "policy": self.policy,
            "directed": self.directed,
            "entries": [e.to_json() for e in self.entries],
        }


def build_diag_class(registry: DecoderRegistry, n_max: int = DEFAULT_NMAX, directed: bool = False,
                     budget: int = DEFAULT_BUDGET) -> DiagClass:
    """One entry per ``n <= n_max`` in the domain of ``tau``, in increasing order.

    A budget overrun at one ``n`` is recorded in that entry and does not stop
    the construction.
    """
    if n_max > DEFAULT_NMAX:
        raise BudgetExceeded(f"diagonalization is limited to n_max <= {DEFAULT_NMAX}")
    entries = []
    for n in range(1, n_max + 1):
        t = tau(n)
        if t is None:
            continue
        scheme = scheme_at(n, registry)
        try:
            g = smallest_missing_graph(n, scheme, directed, budget)
            status = "stored" if g is not None else "none-missing"
        except BudgetExceeded:
            g, status = None, "budget"
        entries.append(DiagEntry(n, t, scheme.decoder.name, scheme.c, g, status))
    return DiagClass(tuple(entries), tuple(registry.names), registry.policy, directed)


@dataclass(frozen=True)
class InducedDecoder:
    """Adjacency lookup on m-bit labels, read off the canonical labeled form of each stored graph."""

    tables: dict = field(default_factory=dict)  # m -> canonical Graph on 2**m vertices

    def accepts(self, x: str, y: str) -> bool:
        g = self.tables.get(len(x))
        if g is None or len(y) != len(x):
            return False
        return g.has_edge(int(x, 2) + 1, int(y, 2) + 1) if x else False

    def decoder(self) -> LabelDecoder:
        return LabelDecoder("induced", self.accepts)


def build_induced_decoder(dclass: DiagClass) -> InducedDecoder:
    tables = {}
    for n, g in dclass.graphs.items():
        if n & (n - 1) or n < 2:
            raise UsageError(f"induced decoder needs power-of-two vertex counts, got n={n}")
        tables[n.bit_length() - 1] = canonical_form(g)
    return InducedDecoder(tables)


def identity_labels(n: int) -> list[str]:
    m = log2ceil(n)
    return [format(i, f"0{m}b") if m else "" for i in range(n)]


@dataclass
class DiagReport:
    checks: list = field(default_factory=list)  # dicts with n, clause, ok, detail

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def failures(self) -> list[dict]:
        return [c for c in self.checks if not c["ok"]]

    def clause_ok(self, clause: str) -> bool:
        return all(c["ok"] for c in self.checks if c["clause"] == clause)

    def raise_on_failure(self):
        bad = self.failures()
        if bad:
            c = bad[0]
            raise VerificationError(f"clause ({c['clause']}) fails at n={c['n']}: {c['detail']}")

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}


def verify_diagonal(dclass: DiagClass, registry: DecoderRegistry, budget: int = DEFAULT_BUDGET) -> DiagReport:
    """Re-check every stored graph from scratch.

    (a) it is outside gr of the scheme selected by its vertex count;
    (b) every smaller unlabeled graph on as many vertices is inside it;
    (c) the induced decoder with multiplier 1 reproduces it.
    """
    report = DiagReport()
    lengths = [log2ceil(n) for n in dclass.graphs]
    if len(set(lengths)) != len(lengths):
        report.checks.append({"n": None, "clause": "c", "ok": False,
                              "detail": "two stored graphs share a label length"})
    induced = None
    try:
        induced = build_induced_decoder(dclass)
    except UsageError as exc:
        report.checks.append({"n": None, "clause": "c", "ok": False, "detail": str(exc)})
    for n, g in dclass.graphs.items():
        scheme = scheme_at(n, registry)
        if scheme is None:
            report.checks.append({"n": n, "clause": "a", "ok": False, "detail": "n outside the domain of tau"})
            continue
        witness = member_bitscheme(scheme, g, budget)
        report.checks.append({"n": n, "clause": "a", "ok": witness is None,
                              "detail": "not representable" if witness is None
                              else f"representable with labels {witness}"})
        earlier = None
        for h in iter_unlabeled(n, dclass.directed):
            if compare_unlabeled(h, g) >= 0:
                break
            if member_bitscheme(scheme, h, budget) is None:
                earlier = h
                break
        report.checks.append({"n": n, "clause": "b", "ok": earlier is None,
                              "detail": "least non-representable graph" if earlier is None
                              else f"smaller non-representable graph {write_graph6(earlier)}"})
        if induced is not None:
            h = graph_of_bitscheme(BitScheme(induced.decoder(), 1), identity_labels(n))
            if not dclass.directed:
                h = h.as_undirected() if h.is_symmetric() else h
            ok = h.directed == g.directed and is_isomorphic(h, g)
            report.checks.append({"n": n, "clause": "c", "ok": ok,
                                  "detail": "reproduced by the induced decoder" if ok
                                  else "induced decoder yields a different graph"})
    return report


def diag_json(dclass: DiagClass, report: DiagReport) -> str:
    """Deterministic JSON text for a class and its verification."""
    return json.dumps({"class": dclass.to_json(), "verification": report.to_json()}, sort_keys=True, indent=2)
