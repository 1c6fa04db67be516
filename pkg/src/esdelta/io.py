"""graph6 and plain edge-list reading/writing.

graph6 packs the upper triangle of the adjacency matrix column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``) into big-endian 6-bit groups, each
offset by 63 into printable ASCII, after a size header ``N(n)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size header")
        groups, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size header")
        groups, start = data[1:4], 4
    n = 0
    for b in groups:
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b!r}")
        n = (n << 6) | (b - 63)
    return n, start


def to_graph6(g: Graph, header: bool = False) -> str:
    bits = []
    for j in range(1, g.n):
        adj_j = g._adjsets[j]
        for i in range(j):
            bits.append(1 if i in adj_j else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    out = _encode_size(g.n) + "".join(body)
    return GRAPH6_HEADER + out if header else out


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="strict")
    data = text.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER) :]
    if data.startswith(b":") or data.startswith(b"&"):
        raise ParseError("sparse6/digraph6 input is not supported")
    n, start = _decode_size(data)
    if n < 0:
        raise ParseError("invalid graph6 size byte")
    body = data[start:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    i, j = 0, 1
    for byte in body:
        if not 63 <= byte <= 126:
            raise ParseError(f"invalid graph6 byte {byte!r}")
        x = byte - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (x >> shift) & 1:
                    raise ParseError("nonzero padding bits in graph6 string")
                continue
            if (x >> shift) & 1:
                edges.append((i, j))
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph.from_edges(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse one graph per non-blank line; ``#`` lines are skipped."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield from_graph6(line)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Endpoints that are all integers in ``0..n-1`` are used as indices.
    Otherwise tokens are treated as vertex names, numbered in order of
    first appearance, and kept as the graph's label table.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ParseError("empty edge list")
    header = rows[0]
    try:
        n, m = int(header[0]), int(header[1])
    except (IndexError, ValueError):
        raise ParseError(f"bad edge-list header {' '.join(header)!r}") from None
    if len(header) != 2 or n < 0 or m < 0:
        raise ParseError(f"bad edge-list header {' '.join(header)!r}")
    pairs = rows[1:]
    if len(pairs) != m:
        raise ParseError(f"header announces {m} edges, found {len(pairs)}")
    for p in pairs:
        if len(p) != 2:
            raise ParseError(f"bad edge line {' '.join(p)!r}")

    def as_index(tok: str) -> int | None:
        try:
            x = int(tok)
        except ValueError:
            return None
        return x if 0 <= x < n else None

    labels = None
    if all(as_index(t) is not None for p in pairs for t in p):
        edges = [(int(a), int(b)) for a, b in pairs]
    else:
        names: dict[str, int] = {}
        for p in pairs:
            for t in p:
                names.setdefault(t, len(names))
        if len(names) > n:
            raise ParseError(f"{len(names)} distinct vertex names but n={n}")
        labels = list(names) + [f"_{i}" for i in range(len(names), n)]
        edges = [(names[a], names[b]) for a, b in pairs]
    try:
        return Graph.from_edges(n, edges, labels)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_graph_text(text: str) -> Graph:
    """Accept either a single graph6 line or an edge list."""
    stripped = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(stripped) == 1 and len(stripped[0].split()) == 1:
        return from_graph6(stripped[0])
    return from_edgelist(text)
