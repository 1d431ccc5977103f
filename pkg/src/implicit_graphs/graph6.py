"""graph6 / digraph6 reading and writing.

graph6 stores the upper triangle column by column (x(0,1), x(0,2), x(1,2),
x(0,3), ...); digraph6 is prefixed with ``&`` and stores the full n*n
matrix row by row.  Bits are packed six to a byte, offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import ParseError, UsageError
from .graphs import Graph

MAX_WRITE_N = 62


def _decode_size(data: bytes, start: int) -> tuple[int, int]:
    def byte(i):
        if i >= len(data):
            raise ParseError("truncated size header", offset=i)
        b = data[i]
        if not 63 <= b <= 126:
            raise ParseError(f"character {chr(b)!r} out of range", offset=i)
        return b - 63

    first = byte(start)
    if first < 63:
        return first, start + 1
    if start + 1 < len(data) and data[start + 1] == 126:
        n = 0
        for i in range(start + 2, start + 8):
            n = (n << 6) | byte(i)
        return n, start + 8
    n = 0
    for i in range(start + 1, start + 4):
        n = (n << 6) | byte(i)
    return n, start + 4


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 or digraph6 (``&``-prefixed) string."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    elif line.startswith(">>digraph6<<"):
        line = line[len(">>digraph6<<"):]
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        bad = next(i for i, ch in enumerate(line) if ord(ch) > 127)
        raise ParseError(f"non-ASCII character {line[bad]!r}", offset=bad) from None
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    directed = data[0] == ord("&")
    n, pos = _decode_size(data, 1 if directed else 0)

    if directed:
        cells = [(i, j) for i in range(n) for j in range(n)]
    else:
        cells = [(i, j) for j in range(1, n) for i in range(j)]
    nbytes = (len(cells) + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"truncated bit field: expected {nbytes} data bytes, got {len(body)}",
                         offset=pos + len(body))
    if len(body) > nbytes:
        raise ParseError("trailing characters after bit field", offset=pos + nbytes)
    bits = []
    for k, b in enumerate(body):
        if not 63 <= b <= 126:
            raise ParseError(f"character {chr(b)!r} out of range", offset=pos + k)
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[len(cells):]):
        raise ParseError("non-zero padding bits", offset=pos + nbytes - 1)

    edges = set()
    for (i, j), bit in zip(cells, bits):
        if not bit:
            continue
        if i == j:
            raise ParseError(f"self-loop at vertex {i + 1} is not supported", offset=pos)
        edges.add((i + 1, j + 1))
        if not directed:
            edges.add((j + 1, i + 1))
    return Graph(n, frozenset(edges), directed)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_WRITE_N:
        raise UsageError(f"writing graphs with n={n} > {MAX_WRITE_N} is not supported")
    if g.directed:
        cells = [(i, j) for i in range(n) for j in range(n)]
    else:
        cells = [(i, j) for j in range(1, n) for i in range(j)]
    adj = g.adj
    bits = [adj[i] >> j & 1 for i, j in cells]
    bits += [0] * (-len(bits) % 6)
    out = ["&"] if g.directed else []
    out.append(chr(n + 63))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from graph6 lines; blank lines and ``#`` comments are skipped."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_graph6(line)


def read_graph6_file(path) -> list[Graph]:
    with open(Path(path), encoding="ascii") as fh:
        return list(iter_graph6_lines(fh))
