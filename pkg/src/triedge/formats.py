"""Text formats: graph6, plain edge lists, and weighted graphs.

Edge list::

    n m
    u v        (m lines, 0-based ids; blank lines and '#' comments ignored)

Weighted graph::

    n m
    id num/den (n lines; integers may omit the denominator)
    u v        (m lines)
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, TextIO

from .graph import Graph

if TYPE_CHECKING:
    from .weighted import WeightedGraph

HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


# -- graph6 ---------------------------------------------------------------


def _encode_n(n: int) -> str:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError("order too large for graph6")


def graph6_bits(g: Graph):
    """Upper-triangle bits in graph6 order: column by column."""
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            yield row >> i & 1


def code_to_graph6(n: int, code: int) -> str:
    """graph6 text for the graph whose upper-triangle bit string is ``code``."""
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    value = code << pad
    groups = (nbits + pad) // 6
    body = "".join(chr(((value >> (6 * (groups - 1 - k))) & 63) + 63) for k in range(groups))
    return _encode_n(n) + body


def to_graph6(g: Graph, header: bool = False) -> str:
    code = 0
    for bit in graph6_bits(g):
        code = (code << 1) | bit
    text = code_to_graph6(g.n, code)
    return HEADER + text if header else text


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= x <= 63 for x in data):
        raise FormatError("graph6 bytes must lie in 63..126")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 order")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 order")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# -- edge lists -------------------------------------------------------------


def _content_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} fields in {what} line: {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise FormatError(f"non-integer field in {what} line: {line!r}") from exc


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def from_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    n, m = _ints(lines[0], 2, "header")
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = [tuple(_ints(line, 2, "edge")) for line in lines[1:]]
    try:
        g = Graph.from_edges(n, edges)  # type: ignore[arg-type]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if g.e != m:
        raise FormatError("duplicate edges in edge list")
    return g


# -- weighted graphs --------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_weighted_text(wg: WeightedGraph) -> str:
    g = wg.graph
    lines = [f"{g.n} {g.e}"]
    lines += [f"{label} {format_rational(w)}" for label, w in zip(wg.labels, wg.weights)]
    lines += [f"{wg.labels[u]} {wg.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_weighted_text(text: str) -> WeightedGraph:
    from .weighted import WeightedGraph

    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty weighted graph")
    n, m = _ints(lines[0], 2, "header")
    if len(lines) != 1 + n + m:
        raise FormatError(f"expected {n} weight lines and {m} edge lines")
    labels: list[int] = []
    weights: list[Fraction] = []
    for line in lines[1:1 + n]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad weight line: {line!r}")
        try:
            labels.append(int(parts[0]))
            weights.append(Fraction(parts[1]))
        except ValueError as exc:
            raise FormatError(f"bad weight line: {line!r}") from exc
    pos = {label: i for i, label in enumerate(labels)}
    if len(pos) != n:
        raise FormatError("duplicate vertex ids")
    edges = []
    for line in lines[1 + n:]:
        u, v = _ints(line, 2, "edge")
        if u not in pos or v not in pos:
            raise FormatError(f"edge references unknown vertex: {line!r}")
        edges.append((pos[u], pos[v]))
    try:
        return WeightedGraph(Graph.from_edges(n, edges), tuple(weights), tuple(labels))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# -- files ------------------------------------------------------------------

FORMATS = ("g6", "el", "wg")
_EXT = {".g6": "g6", ".graph6": "g6", ".el": "el", ".txt": "el", ".wg": "wg"}


def detect_format(path: str, text: str) -> str:
    fmt = _EXT.get(Path(path).suffix.lower()) if path != "-" else None
    if fmt:
        return fmt
    lines = _content_lines(text)
    if lines and (lines[0].startswith(HEADER) or len(lines[0].split()) == 1):
        return "g6"
    return "el"


def read_text(path: str, stdin: TextIO | None = None) -> str:
    if path == "-":
        return (stdin or sys.stdin).read()
    return Path(path).read_text()


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "g6":
        lines = _content_lines(text)
        if len(lines) != 1:
            raise FormatError("expected exactly one graph6 line")
        return from_graph6(lines[0])
    if fmt == "el":
        return from_edge_list(text)
    raise FormatError(f"format {fmt!r} does not describe an unweighted graph")


def render_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "el":
        return to_edge_list(g)
    raise FormatError(f"cannot write an unweighted graph as {fmt!r}")
