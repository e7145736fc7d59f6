"""Graph interchange: edge-list text, graph6 lines, digests, DOT export.

Edge lists are the primary, human-debuggable format. graph6 is kept
bit-exact for corpus interop, including the three-byte extended order
form. Digests hash the canonical edge-list rendering, so two graphs with
the same vertex count and edge set always share a digest.
"""

from __future__ import annotations

import hashlib
from typing import Iterable

from .errors import GraphError
from .graph import Graph

_G6_HEADER = ">>graph6<<"
_G6_MAX_N = 258047


def parse_edge_list(text: str) -> Graph:
    """Parse "u v" lines into a graph.

    A '#' starts a comment anywhere on a line. An optional header line
    "n <count>" may appear before the first edge and fixes the vertex
    count; otherwise the count is one past the largest id seen. Errors
    carry the offending line number.
    """
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if edges:
                raise GraphError(f"line {lineno}: header must precede all edges")
            if declared is not None:
                raise GraphError(f"line {lineno}: repeated 'n' header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            declared = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(
                f"line {lineno}: non-integer vertex id in {line!r}"
            ) from None
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        if declared is not None and max(u, v) >= declared:
            raise GraphError(
                f"line {lineno}: vertex id {max(u, v)} outside declared order {declared}"
            )
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphError(f"line {lineno}: duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
    if declared is not None:
        n = declared
    else:
        n = 1 + max((e[1] for e in edges), default=-1)
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Canonical text form: an "n <count>" header, then sorted edges."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    """sha256 hex digest of the canonical edge-list rendering."""
    return hashlib.sha256(emit_edge_list(g).encode("ascii")).hexdigest()


def emit_graph6(g: Graph) -> str:
    """Standard graph6 line: order, then the upper triangle column by column."""
    n = g.n
    if n > _G6_MAX_N:
        raise GraphError(f"graph6 supports at most {_G6_MAX_N} vertices, got {n}")
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    else:
        out.append(126)
        out.append(((n >> 12) & 63) + 63)
        out.append(((n >> 6) & 63) + 63)
        out.append((n & 63) + 63)
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            filled += 1
            if filled == 6:
                out.append(acc + 63)
                acc, filled = 0, 0
    if filled:
        out.append((acc << (6 - filled)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line, with or without the optional format header."""
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    data = line.encode("ascii", errors="replace")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise GraphError(f"graph6: invalid character at position {pos}")
    if not data:
        raise GraphError("graph6: empty input")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("graph6: eight-byte order form is not supported")
        if len(data) < 4:
            raise GraphError("graph6: truncated extended order")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(body) != want:
        raise GraphError(
            f"graph6: order {n} needs {want} payload bytes, got {len(body)}"
        )
    edges: list[tuple[int, int]] = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if (byte >> (5 - idx % 6)) & 1:
                edges.append((i, j))
            idx += 1
    if want:
        tail = body[-1] - 63
        pad = want * 6 - nbits
        if pad and tail & ((1 << pad) - 1):
            raise GraphError("graph6: nonzero padding bits")
    return Graph(n, edges)


def to_dot(g: Graph, highlight: Iterable[int] = ()) -> str:
    """DOT rendering with the given vertices drawn filled."""
    chosen = set(highlight)
    for v in chosen:
        if not 0 <= v < g.n:
            raise GraphError(f"highlight vertex {v} out of range for n={g.n}")
    lines = ["graph G {"]
    for v in range(g.n):
        if v in chosen:
            lines.append(f'  {v} [style=filled fillcolor="gold"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
