"""Edge-list and graph6 reading/writing, plus JSON report helpers."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import GraphInputError, ParseError
from .graph import Graph

FORMATS = ("edge-list", "graph6")


# ---------------------------------------------------------------------------
# edge list
#
#   # comment
#   n 5          (optional header; otherwise n = max id + 1)
#   0 1
#   1 2


def parse_edge_list(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None or edges:
                raise ParseError("header 'n <count>' must come before any edge", lineno)
            if len(parts) != 2:
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count is not an integer: {parts[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"vertex ids must be integers: {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"vertex ids must be non-negative: {line!r}", lineno)
        if u == v:
            raise GraphInputError(f"line {lineno}: self-loop at vertex {u}")
        if n is not None and max(u, v) >= n:
            raise ParseError(f"vertex id {max(u, v)} out of range for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        vals = data[2:8]
        width, start = 6, 8
    else:
        vals = data[1:4]
        width, start = 3, 4
    if len(vals) != width:
        raise ParseError("truncated graph6 size field")
    n = 0
    for b in vals:
        n = (n << 6) | (b - 63)
    return n, start


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise ParseError("graph6 contains characters outside 63..126")
    n, start = _g6_size(data)
    bits = []
    for b in data[start:]:
        val = b - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need or len(bits) - need >= 6:
        raise ParseError(f"graph6 body has {len(bits)} bits, expected {need} plus padding")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [int(g.has_edge(i, j)) for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [sum(bits[i + t] << (5 - t) for t in range(6)) + 63 for i in range(0, len(bits), 6)]
    return bytes(head + body).decode("ascii")


# ---------------------------------------------------------------------------
# files


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    return "graph6" if suffix in (".g6", ".graph6") else "edge-list"


def parse_graph(source: str, fmt: str = "edge-list") -> Graph:
    """Parse graph text in the given format."""
    if fmt == "edge-list":
        return parse_edge_list(source)
    if fmt == "graph6":
        lines = [ln for ln in source.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    raise GraphInputError(f"unknown format {fmt!r}; choose from {FORMATS}")


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(path)
    return parse_graph(Path(path).read_text(), fmt)


def serialize_graph(g: Graph, fmt: str = "edge-list") -> str:
    if fmt == "edge-list":
        return to_edge_list(g)
    if fmt == "graph6":
        if g.is_colored():
            raise GraphInputError("graph6 cannot carry vertex colors")
        return to_graph6(g) + "\n"
    raise GraphInputError(f"unknown format {fmt!r}; choose from {FORMATS}")


def write_graph(path: str | Path, g: Graph, fmt: str | None = None) -> None:
    Path(path).write_text(serialize_graph(g, fmt or detect_format(path)))


def dumps_report(report: dict) -> str:
    """Deterministic JSON: sorted keys, integers stay integers."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
