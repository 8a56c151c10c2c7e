"""Edge-list text format.

    # optional comment lines
    p <n> <m>
    e <u> <v> <w>      (m lines, 0-based vertex ids, weight >= 1)

Every line, the last included, ends with a newline. Edge ids are assigned
0..m-1 in file order.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph

_UINT = re.compile(r"[0-9]+\Z")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    for t in tokens:
        if not _UINT.match(t):
            raise ParseError(f"expected a nonnegative decimal integer, got {t!r}", lineno)
    return [int(t) for t in tokens]


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format into a strict-mode graph."""
    if not text.endswith("\n"):
        raise ParseError("missing final newline", text.count("\n") + 1)
    header = None
    edges = []
    for lineno, line in enumerate(text[:-1].split("\n"), start=1):
        if line.startswith("#"):
            continue
        tokens = line.split(" ")
        tag = tokens[0]
        if tag == "p":
            if header is not None:
                raise ParseError("duplicate header", lineno)
            if len(tokens) != 3:
                raise ParseError("header must read 'p <n> <m>'", lineno)
            n, m = _ints(tokens[1:], lineno)
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            header = (n, m)
        elif tag == "e":
            if header is None:
                raise ParseError("edge line before header", lineno)
            if len(tokens) != 4:
                raise ParseError("edge line must read 'e <u> <v> <w>'", lineno)
            u, v, w = _ints(tokens[1:], lineno)
            n = header[0]
            if u >= n or v >= n:
                raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
            if w < 1:
                raise ParseError("edge weight must be at least 1", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            if len(edges) == header[1]:
                raise ParseError(f"more than the {header[1]} declared edges", lineno)
            edges.append((u, v, w))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if header is None:
        raise ParseError("missing 'p <n> <m>' header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return Graph(header[0], edges, strict=True)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def render_graph(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {e.u} {e.v} {e.weight}" for e in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(render_graph(g))
