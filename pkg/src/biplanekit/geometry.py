"""Exact integer geometry: predicates, hulls, and validated point sets.

Every predicate here works on plain Python integers, so all signs are exact.
Point coordinates are capped at |x|, |y| <= 2**30 when a PointSet is built;
with that bound a 3x3 orientation determinant always fits in double-width
integer arithmetic, which matters for any port of these routines to a
fixed-width backend (Python itself never overflows).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterable, NamedTuple, Sequence

COORD_LIMIT = 2**30

Edge = tuple[int, int]


class Strictness(Enum):
    """General-position contract carried by a point set.

    STRICT forbids any three collinear points.  RELAXED only requires
    distinct points; graphs on relaxed sets must separately guarantee that
    no vertex lies in the open interior of an edge.
    """

    STRICT = "strict"
    RELAXED = "relaxed"


class Point(NamedTuple):
    x: int
    y: int


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


def cross(o: Point, a: Point, b: Point) -> int:
    """Signed double area of triangle (o, a, b)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Turn direction of the path p -> q -> r."""
    c = cross(p, q, r)
    if c > 0:
        return Orientation.COUNTERCLOCKWISE
    if c < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def collinear(p: Point, q: Point, r: Point) -> bool:
    return cross(p, q, r) == 0


def edge(a: int, b: int) -> Edge:
    """Canonical unordered vertex pair (a < b)."""
    if a == b:
        raise ValueError(f"degenerate edge ({a}, {a})")
    return (a, b) if a < b else (b, a)


def direction_cmp(d1: Point, d2: Point) -> int:
    """Compare two nonzero direction vectors counterclockwise.

    Directions are ordered starting just above the positive x-axis and
    sweeping counterclockwise.  Returns -1, 0, or 1.
    """
    h1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    h2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def dir_in_ccw_sector(d: Point, u: Point, w: Point) -> bool:
    """Is direction d strictly inside the counterclockwise sector u -> w?"""

    def c(p: Point, q: Point) -> int:
        return p[0] * q[1] - p[1] * q[0]

    cu_w = c(u, w)
    if cu_w > 0:
        return c(u, d) > 0 and c(d, w) > 0
    if cu_w < 0:
        # Reflex sector: complement of the closed sector w -> u.
        return not (c(w, d) >= 0 and c(d, u) >= 0)
    # u and w collinear: either opposite (half-plane sector) or equal.
    if u[0] * w[0] + u[1] * w[1] < 0:
        return c(u, d) > 0
    raise ValueError("sector endpoints point in the same direction")


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do the OPEN segments ab and cd share a point?

    Segments meeting only at shared endpoints do not cross.  Collinear
    segments whose open intervals overlap do cross.
    """
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    if d1 == 0 and d2 == 0:
        # All four points on one line: compare open 1D intervals.
        if a[0] != b[0] or c[0] != d[0]:
            a1, b1 = sorted((a[0], b[0]))
            c1, d1_ = sorted((c[0], d[0]))
        else:
            a1, b1 = sorted((a[1], b[1]))
            c1, d1_ = sorted((c[1], d[1]))
        return max(a1, c1) < min(b1, d1_)
    return False


def point_on_open_segment(p: Point, a: Point, b: Point) -> bool:
    """Does p lie strictly inside segment ab?"""
    if cross(a, b, p) != 0:
        return False
    if a[0] != b[0]:
        lo, hi = sorted((a[0], b[0]))
        return lo < p[0] < hi
    lo, hi = sorted((a[1], b[1]))
    return lo < p[1] < hi


@dataclass(frozen=True)
class PointSet:
    """Ordered, validated set of integer points.

    Immutable; safe to share between threads.  Distinctness and the
    coordinate cap are enforced at construction.  Collinearity checks are
    deferred to validate() because they are cubic.
    """

    points: tuple[Point, ...]
    strictness: Strictness = Strictness.STRICT

    def __post_init__(self) -> None:
        pts = tuple(Point(int(p[0]), int(p[1])) for p in self.points)
        object.__setattr__(self, "points", pts)
        for i, p in enumerate(pts):
            if abs(p.x) > COORD_LIMIT or abs(p.y) > COORD_LIMIT:
                raise ValueError(
                    f"point {i} = ({p.x}, {p.y}) exceeds |coord| <= 2**30"
                )
        if len(set(pts)) != len(pts):
            seen: dict[Point, int] = {}
            for i, p in enumerate(pts):
                if p in seen:
                    raise ValueError(f"duplicate point at indices {seen[p]} and {i}")
                seen[p] = i

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def from_coords(
        cls,
        coords: Iterable[Sequence[int]],
        strictness: Strictness = Strictness.STRICT,
    ) -> "PointSet":
        return cls(tuple(Point(int(c[0]), int(c[1])) for c in coords), strictness)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    collinear_triple: tuple[int, int, int] | None = None
    message: str = "ok"


def validate(ps: PointSet) -> ValidationReport:
    """Check the general-position contract of a point set.

    Under STRICT this scans all triples for collinearity (cubic, intended
    for desk-scale inputs).  Under RELAXED only distinctness applies, which
    the constructor already guarantees.
    """
    if ps.strictness is Strictness.RELAXED:
        return ValidationReport(True)
    pts = ps.points
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cross(pts[i], pts[j], pts[k]) == 0:
                    return ValidationReport(
                        False,
                        (i, j, k),
                        f"collinear points {i}, {j}, {k}",
                    )
    return ValidationReport(True)


def convex_hull(ps: PointSet | Sequence[Point]) -> list[int]:
    """Convex hull vertex indices in counterclockwise order.

    For STRICT point sets, strictly collinear boundary runs cannot occur and
    the hull is the usual strict hull.  For RELAXED sets the weak hull is
    returned: points lying on the boundary between corners are kept, in
    boundary order, so that 3n - h - 3 matches triangulations of such sets.
    """
    if isinstance(ps, PointSet):
        pts: Sequence[Point] = ps.points
        keep = ps.strictness is Strictness.RELAXED
    else:
        pts = ps
        keep = False
    n = len(pts)
    if n < 3:
        raise ValueError("convex hull needs at least 3 points")
    order = sorted(range(n), key=lambda i: pts[i])

    def build(seq: Sequence[int]) -> list[int]:
        chain: list[int] = []
        for i in seq:
            while len(chain) >= 2:
                c = cross(pts[chain[-2]], pts[chain[-1]], pts[i])
                if c < 0 or (c == 0 and not keep):
                    chain.pop()
                else:
                    break
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(order[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(set(hull)) < 3 or all(
        cross(pts[hull[0]], pts[hull[1]], pts[h]) == 0 for h in hull[2:]
    ):
        raise ValueError("all points are collinear; hull is degenerate")
    return hull
