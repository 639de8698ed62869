"""Text formats for point sets and graphs.

Point-set file:  line 1 holds n, followed by n lines "x y" with decimal
integers.  A graph file appends a line holding m and then m lines "i j"
with 0-based vertex indices.  Lines starting with '#' are comments and
blank lines are ignored.  Writers emit canonical, diffable output.
"""

from __future__ import annotations

from .geometry import PointSet, Strictness
from .graphs import GeometricGraph


class FileFormatError(ValueError):
    """Malformed input file; carries 1-based line and column."""

    def __init__(self, line: int, column: int, message: str) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _tokens(text: str):
    """Yield (value, line_no, column) for every whitespace token."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        col = 0
        for tok in line.split():
            col = line.index(tok, col) + 1
            yield tok, line_no, col
            col += len(tok) - 1


def _read_int(stream, what: str) -> int:
    try:
        tok, line, col = next(stream)
    except StopIteration:
        raise FileFormatError(0, 0, f"unexpected end of file, expected {what}")
    try:
        return int(tok)
    except ValueError:
        raise FileFormatError(line, col, f"expected {what}, got {tok!r}")


def parse_points(text: str, strictness: Strictness = Strictness.STRICT) -> PointSet:
    stream = _tokens(text)
    n = _read_int(stream, "point count")
    if n < 0:
        raise FileFormatError(1, 1, "negative point count")
    coords = []
    for i in range(n):
        x = _read_int(stream, f"x coordinate of point {i}")
        y = _read_int(stream, f"y coordinate of point {i}")
        coords.append((x, y))
    return PointSet.from_coords(coords, strictness)


def parse_graph(text: str, strictness: Strictness = Strictness.STRICT) -> GeometricGraph:
    stream = _tokens(text)
    n = _read_int(stream, "point count")
    if n < 0:
        raise FileFormatError(1, 1, "negative point count")
    coords = []
    for i in range(n):
        x = _read_int(stream, f"x coordinate of point {i}")
        y = _read_int(stream, f"y coordinate of point {i}")
        coords.append((x, y))
    m = _read_int(stream, "edge count")
    if m < 0:
        raise FileFormatError(0, 0, "negative edge count")
    edges = []
    for k in range(m):
        a = _read_int(stream, f"first endpoint of edge {k}")
        b = _read_int(stream, f"second endpoint of edge {k}")
        edges.append((a, b))
    pts = PointSet.from_coords(coords, strictness)
    return GeometricGraph(pts, tuple(edges))


def format_points(ps: PointSet) -> str:
    lines = [str(len(ps))]
    lines.extend(f"{p.x} {p.y}" for p in ps.points)
    return "\n".join(lines) + "\n"


def format_graph(g: GeometricGraph) -> str:
    lines = [format_points(g.points).rstrip("\n"), str(g.m)]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"
