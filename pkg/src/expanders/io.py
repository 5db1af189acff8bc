"""Edge-list text format, graph hashing, and DOT export.

Format: an optional header line ``# n=<count>``, then one ``u v`` pair per
line (0-based, whitespace-separated). Duplicate and reversed pairs collapse;
self-loops are rejected with an error naming the offending line.
"""

from __future__ import annotations

import hashlib
import sys
from pathlib import Path
from typing import Iterable

from .graph import Graph


class GraphFormatError(ValueError):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


def parse_graph_text(text: str) -> Graph:
    declared_n: int | None = None
    edges: set[tuple[int, int]] = set()
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                if declared_n is not None:
                    raise GraphFormatError("duplicate n= header", lineno)
                try:
                    declared_n = int(body[2:])
                except ValueError:
                    raise GraphFormatError(f"bad vertex count {body[2:]!r}", lineno)
                if declared_n < 0:
                    raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if declared_n is not None and (u >= declared_n or v >= declared_n):
            raise GraphFormatError(
                f"vertex id exceeds declared n={declared_n}", lineno
            )
        edges.add((u, v) if u < v else (v, u))
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    return Graph(max(n, 0), edges)


def load_graph(source: str | Path) -> Graph:
    """Parse a graph from a file path, or from stdin when source is '-'."""
    if str(source) == "-":
        return parse_graph_text(sys.stdin.read())
    return parse_graph_text(Path(source).read_text())


def serialize_graph(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_hash(g: Graph) -> str:
    """Order-independent 64-bit hash of the canonical (sorted) edge list."""
    h = hashlib.blake2b(digest_size=8)
    h.update(f"n={g.n};".encode())
    for u, v in g.edges:
        h.update(f"{u},{v};".encode())
    return h.hexdigest()


def write_dot(
    g: Graph,
    highlight_edges: Iterable[tuple[int, int]] = (),
    vertex_colors: dict[int, str] | None = None,
    fill_vertices: Iterable[int] = (),
) -> str:
    """Render the graph as DOT, highlighting a found structure.

    ``highlight_edges`` are drawn bold red; ``vertex_colors`` maps vertex ->
    fill color (used for branch sets); ``fill_vertices`` get a uniform gray
    fill (used for witness sets and cuts).
    """
    hl = {(min(e), max(e)) for e in highlight_edges}
    colors = dict(vertex_colors or {})
    for v in fill_vertices:
        colors.setdefault(v, "gray80")
    out = ["graph G {", "  node [shape=circle];"]
    for v in range(g.n):
        attrs = ""
        if v in colors:
            attrs = f' [style=filled, fillcolor="{colors[v]}"]'
        out.append(f"  {v}{attrs};")
    for u, v in g.edges:
        attrs = " [color=red, penwidth=2.0]" if (u, v) in hl else ""
        out.append(f"  {u} -- {v}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"
