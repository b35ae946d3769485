"""Plain-text edge lists: a header line ``n m``, then ``u v`` or ``u v color``
per edge (0-based vertices); ``#`` starts a comment line."""

from __future__ import annotations

from typing import Optional, TextIO

from .coloring import ColoringError, EdgeColoring
from .graph import Graph, GraphError


class FormatError(ValueError):
    pass


def parse_edgelist(text: str) -> tuple[Graph, Optional[EdgeColoring]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers, got {raw!r}") from None
    if not rows:
        raise FormatError("missing header line 'n m'")
    lineno, header = rows[0]
    if len(header) != 2 or min(header) < 0:
        raise FormatError(f"line {lineno}: header must be two non-negative integers 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges, found {len(body)}")
    widths = {len(r) for _, r in body}
    if len(widths) > 1 or widths - {2, 3}:
        raise FormatError("every edge line needs the same width: 'u v' or 'u v color'")
    try:
        g = Graph(n, tuple((r[0], r[1]) for _, r in body))
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    coloring = None
    if widths == {3}:
        try:
            coloring = EdgeColoring(tuple(r[2] for _, r in body))
        except ColoringError as exc:
            raise FormatError(str(exc)) from None
    return g, coloring


def format_edgelist(g: Graph, coloring: Optional[EdgeColoring] = None) -> str:
    lines = [f"{g.n} {g.m}"]
    if coloring is None:
        lines += [f"{u} {v}" for u, v in g.edges]
    else:
        coloring.check(g)
        canon = coloring.canonical()
        lines += [f"{u} {v} {c}" for (u, v), c in zip(g.edges, canon.colors)]
    return "\n".join(lines) + "\n"


def read_edgelist(fh: TextIO) -> tuple[Graph, Optional[EdgeColoring]]:
    return parse_edgelist(fh.read())


def write_edgelist(fh: TextIO, g: Graph, coloring: Optional[EdgeColoring] = None) -> None:
    fh.write(format_edgelist(g, coloring))
