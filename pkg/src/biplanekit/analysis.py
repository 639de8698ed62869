"""Connectivity, degree statistics, and brute-force oracles.

The oracles here are deliberately independent of the fast augmentation
path: maximality is checked by inserting every non-edge, and maximum size
by enumerating all triangulation pairs.  They exist to verify the fast
algorithms on desk-scale instances.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass

from .augmentation import maximal_augment
from .geometry import Edge, PointSet, edge
from .graphs import GeometricGraph
from .recognition import BiplaneDecomposition, test_biplane
from .triangulation import enumerate_triangulations


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    min_degree: int
    witness_cut: tuple[int, ...]  # empty when kappa == 0 or the graph is complete


def _bfs_components(n: int, adj: list[list[int]]) -> int:
    seen = [False] * n
    comps = 0
    for s in range(n):
        if seen[s]:
            continue
        comps += 1
        seen[s] = True
        q = deque([s])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    q.append(v)
    return comps


def _min_vertex_cut(g: GeometricGraph, s: int, t: int) -> tuple[int, list[int]]:
    """Exact s-t vertex cut by unit-capacity max flow on the split graph.

    Node 2i is the in-copy and 2i+1 the out-copy of vertex i; each vertex
    arc has capacity 1 and each edge is a pair of infinite arcs.
    """
    n = g.n
    inf = n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def add(u: int, v: int, c: int) -> None:
        if (u, v) not in cap:
            cap[(u, v)] = 0
            cap[(v, u)] = cap.get((v, u), 0)
            adj[u].append(v)
            adj[v].append(u)
        cap[(u, v)] += c

    for v in range(n):
        add(2 * v, 2 * v + 1, 1)
    for a, b in g.edges:
        add(2 * a + 1, 2 * b, inf)
        add(2 * b + 1, 2 * a, inf)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {src: src}
        q = deque([src])
        while q and sink not in parent:
            u = q.popleft()
            for v in adj[u]:
                if v not in parent and cap.get((u, v), 0) > 0:
                    parent[v] = u
                    q.append(v)
        if sink not in parent:
            break
        v = sink
        while v != src:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] = cap.get((v, u), 0) + 1
            v = u
        flow += 1
    reach = {src}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in reach and cap.get((u, v), 0) > 0:
                reach.add(v)
                q.append(v)
    cut = [v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach]
    return flow, cut


def vertex_connectivity(g: GeometricGraph) -> ConnectivityReport:
    """Exact vertex connectivity with a witness cut.

    Uses the standard pair set: a fixed minimum-degree vertex against all
    its non-neighbors, plus all non-adjacent pairs of its neighbors.
    """
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    adj = g.adjacency()
    deg = g.degrees()
    if _bfs_components(n, adj) > 1:
        return ConnectivityReport(0, min(deg), ())
    present = set(g.edges)
    if g.m == n * (n - 1) // 2:
        return ConnectivityReport(n - 1, n - 1, ())
    v = min(range(n), key=lambda i: (deg[i], i))
    nb = sorted(adj[v])
    nb_set = set(nb)
    pairs = [(v, u) for u in range(n) if u != v and u not in nb_set]
    pairs.extend(
        (x, y)
        for i, x in enumerate(nb)
        for y in nb[i + 1 :]
        if edge(x, y) not in present
    )
    best = deg[v]
    best_cut: list[int] = list(nb)
    for s, t in pairs:
        value, cut = _min_vertex_cut(g, s, t)
        if value < best:
            best = value
            best_cut = cut
    return ConnectivityReport(best, min(deg), tuple(sorted(best_cut)))


def maximality_oracle(g: GeometricGraph) -> bool:
    """Definition-level maximality: every non-edge insertion breaks biplanarity."""
    if not isinstance(test_biplane(g), BiplaneDecomposition):
        raise ValueError("input graph is not biplane")
    for e in g.complement_edges():
        if isinstance(test_biplane(g.with_edges([e])), BiplaneDecomposition):
            return False
    return True


@dataclass(frozen=True)
class OracleResult:
    maximum_edges: int
    witness: GeometricGraph
    triangulation_count: int


def brute_force_maximum(ps: PointSet, cap: int = 9) -> OracleResult:
    """Maximum biplane size by exhausting all triangulation pairs.

    Every maximal (hence every maximum) biplane graph is a union of two
    triangulations, so maximizing |E1 union E2| over all pairs is exact.
    """
    tris = enumerate_triangulations(ps, cap=cap)
    universe: dict[Edge, int] = {}
    masks = []
    edge_lists = []
    for t in tris:
        es = t.sorted_edges()
        mask = 0
        for e in es:
            bit = universe.setdefault(e, len(universe))
            mask |= 1 << bit
        masks.append(mask)
        edge_lists.append(es)
    best = -1
    best_pair = (0, 0)
    k = len(masks)
    for i in range(k):
        mi = masks[i]
        for j in range(i, k):
            size = (mi | masks[j]).bit_count()
            if size > best:
                best = size
                best_pair = (i, j)
    i, j = best_pair
    union_edges = tuple(sorted(set(edge_lists[i]) | set(edge_lists[j])))
    return OracleResult(best, GeometricGraph(ps, union_edges), k)


@dataclass(frozen=True)
class GapReport:
    smallest: int
    largest: int
    smallest_graph: GeometricGraph
    largest_graph: GeometricGraph
    sizes: tuple[int, ...]


def find_maximal_gap(ps: PointSet, trials: int, seed: int) -> GapReport:
    """Hunt for maximal biplane graphs of different sizes on one point set.

    Runs the augmentation from the empty graph and then repeatedly from a
    single random edge absent from the previous maximal graph.  Reproducible
    for a fixed seed.
    """
    rng = random.Random(seed)
    n = len(ps)
    results = []
    res = maximal_augment(GeometricGraph(ps, ()))
    results.append(res.graph)
    for _ in range(max(0, trials - 1)):
        prev = results[-1]
        missing = prev.complement_edges()
        if not missing:
            break
        start = rng.choice(missing)
        res = maximal_augment(GeometricGraph(ps, (start,)))
        results.append(res.graph)
    sizes = tuple(g.m for g in results)
    smallest = min(range(len(results)), key=lambda i: sizes[i])
    largest = max(range(len(results)), key=lambda i: sizes[i])
    return GapReport(
        sizes[smallest],
        sizes[largest],
        results[smallest],
        results[largest],
        sizes,
    )


def degree_histogram(g: GeometricGraph) -> dict[int, int]:
    """Map degree -> number of vertices of that degree."""
    return dict(sorted(Counter(g.degrees()).items()))
