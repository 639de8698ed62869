"""Biplane recognition: two-color the edge crossing graph or find an odd cycle.

A geometric graph is biplane exactly when its segment crossing graph is
bipartite.  Graphs with n >= 8 vertices and more than 6n - 18 edges are
rejected outright; below that the crossing graph is built by pairwise
testing (with a bounding-box sweep to skip far-apart pairs), which is the
right trade at desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .geometry import Edge, segments_cross
from .graphs import GeometricGraph


def biplane_edge_cap(n: int) -> int:
    """Hard upper bound on edge count of a biplane graph with n >= 8."""
    return 6 * n - 18


def exceeds_edge_cap(n: int, m: int) -> bool:
    """Fast-reject guard: n >= 8 and m > 6n - 18 cannot be biplane."""
    return n >= 8 and m > biplane_edge_cap(n)


@dataclass(frozen=True)
class BiplaneDecomposition:
    """Disjoint split of the edges into two crossing-free layers."""

    layer1: tuple[Edge, ...]
    layer2: tuple[Edge, ...]


@dataclass(frozen=True)
class OddCycleWitness:
    """Odd cycle in the crossing graph: consecutive edges pairwise cross."""

    cycle: tuple[Edge, ...]


@dataclass(frozen=True)
class TooManyEdges:
    """Rejected without building the crossing graph: m > 6n - 18, n >= 8."""

    n: int
    m: int
    cap: int


BiplaneResult = BiplaneDecomposition | OddCycleWitness | TooManyEdges


def crossing_pairs(g: GeometricGraph) -> list[tuple[int, int]]:
    """All pairs of edge indices whose open segments cross.

    Sweeps edges by x-extent so that only bbox-overlapping pairs reach the
    exact predicate; worst case stays quadratic.
    """
    pts = g.points.points
    m = g.m
    boxes = []
    for a, b in g.edges:
        pa, pb = pts[a], pts[b]
        boxes.append(
            (
                min(pa.x, pb.x),
                max(pa.x, pb.x),
                min(pa.y, pb.y),
                max(pa.y, pb.y),
            )
        )
    order = sorted(range(m), key=lambda i: boxes[i][0])
    pairs: list[tuple[int, int]] = []
    active: list[int] = []
    for i in order:
        x0, _, ylo, yhi = boxes[i]
        ai, bi = g.edges[i]
        pa, pb = pts[ai], pts[bi]
        keep = []
        for j in active:
            bj = boxes[j]
            if bj[1] < x0:
                continue
            keep.append(j)
            if bj[3] < ylo or bj[2] > yhi:
                continue
            aj, bj2 = g.edges[j]
            if segments_cross(pa, pb, pts[aj], pts[bj2]):
                pairs.append((j, i) if j < i else (i, j))
        keep.append(i)
        active = keep
    pairs.sort()
    return pairs


def crossing_graph(g: GeometricGraph) -> list[list[int]]:
    """Adjacency lists over edge indices; arc iff the open segments cross."""
    adj: list[list[int]] = [[] for _ in range(g.m)]
    for i, j in crossing_pairs(g):
        adj[i].append(j)
        adj[j].append(i)
    for lst in adj:
        lst.sort()
    return adj


def test_biplane(g: GeometricGraph) -> BiplaneResult:
    """Decide biplanarity.

    Returns a BiplaneDecomposition, an OddCycleWitness, or TooManyEdges.
    Deterministic: BFS two-coloring in edge index order, and within each
    crossing-graph component the lowest-index edge lands in layer1.
    """
    n, m = g.n, g.m
    if exceeds_edge_cap(n, m):
        return TooManyEdges(n, m, biplane_edge_cap(n))
    adj = crossing_graph(g)
    color = [-1] * m
    parent = [-1] * m
    for root in range(m):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return OddCycleWitness(_odd_cycle(g, parent, u, v))
    layer1 = tuple(g.edges[i] for i in range(m) if color[i] == 0)
    layer2 = tuple(g.edges[i] for i in range(m) if color[i] == 1)
    return BiplaneDecomposition(layer1, layer2)


# Keep pytest from collecting the library function as a test.
test_biplane.__test__ = False  # type: ignore[attr-defined]


def _odd_cycle(
    g: GeometricGraph, parent: list[int], u: int, v: int
) -> tuple[Edge, ...]:
    """Close the BFS tree paths of u and v (same color) with the arc uv."""
    path_u = [u]
    while parent[path_u[-1]] != -1:
        path_u.append(parent[path_u[-1]])
    on_u = {node: i for i, node in enumerate(path_u)}
    path_v = [v]
    while path_v[-1] not in on_u:
        path_v.append(parent[path_v[-1]])
    lca = path_v[-1]
    nodes = path_u[: on_u[lca] + 1] + path_v[-2::-1]
    assert len(nodes) % 2 == 1 and len(nodes) >= 3
    return tuple(g.edges[i] for i in nodes)
