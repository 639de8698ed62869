"""Shared fixtures-in-code for the test suite: seeded generators and
independent re-checks that deliberately avoid the library's fast paths."""

from __future__ import annotations

import random
from collections import deque

from biplanekit.geometry import PointSet, edge, segments_cross, validate
from biplanekit.graphs import GeometricGraph


def random_strict_points(rng: random.Random, n: int, span: int = 10**6) -> PointSet:
    """Random distinct integer points with no collinear triple."""
    while True:
        coords = [(rng.randrange(span), rng.randrange(span)) for _ in range(n)]
        if len(set(coords)) < n:
            continue
        ps = PointSet.from_coords(coords)
        if validate(ps).ok:
            return ps


def random_edge_subset_graph(
    rng: random.Random, ps: PointSet, density: float | None = None
) -> GeometricGraph:
    """Uniformly random subset of all vertex pairs (not necessarily biplane)."""
    n = len(ps)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    p = rng.random() if density is None else density
    chosen = tuple(e for e in pairs if rng.random() < p)
    return GeometricGraph(ps, chosen)


def random_biplane_graph(
    rng: random.Random, ps: PointSet, target: int
) -> GeometricGraph:
    """Greedy random biplane graph: add edges while the crossing graph stays
    bipartite (checked incrementally, independent of test_biplane)."""
    n = len(ps)
    pts = ps.points
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    adj: list[list[int]] = []
    for a, b in pairs:
        if len(edges) >= target:
            break
        crossers = [
            i
            for i, (u, v) in enumerate(edges)
            if segments_cross(pts[a], pts[b], pts[u], pts[v])
        ]
        edges.append((a, b))
        adj.append(list(crossers))
        for i in crossers:
            adj[i].append(len(edges) - 1)
        if not crossing_adjacency_is_bipartite(adj):
            for i in crossers:
                adj[i].pop()
            edges.pop()
            adj.pop()
    return GeometricGraph(ps, tuple(edge(a, b) for a, b in edges))


def crossing_adjacency_is_bipartite(adj: list[list[int]]) -> bool:
    color = [-1] * len(adj)
    for root in range(len(adj)):
        if color[root] != -1:
            continue
        color[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    q.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def brute_crossing_adjacency(g: GeometricGraph) -> list[list[int]]:
    """Crossing graph by plain double loop (no sweep acceleration)."""
    pts = g.points.points
    m = g.m
    adj: list[list[int]] = [[] for _ in range(m)]
    for i in range(m):
        a, b = g.edges[i]
        for j in range(i + 1, m):
            c, d = g.edges[j]
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def layer_is_plane(g: GeometricGraph, layer) -> bool:
    pts = g.points.points
    layer = list(layer)
    for i in range(len(layer)):
        a, b = layer[i]
        for j in range(i + 1, len(layer)):
            c, d = layer[j]
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                return False
    return True


def witness_cycle_is_valid(g: GeometricGraph, cycle) -> bool:
    """Odd length >= 3 and cyclically consecutive edges pairwise cross."""
    if len(cycle) < 3 or len(cycle) % 2 == 0:
        return False
    pts = g.points.points
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i]
        c, d = cycle[(i + 1) % k]
        if not segments_cross(pts[a], pts[b], pts[c], pts[d]):
            return False
    return True


def graph_is_connected_after_removal(g: GeometricGraph, removed) -> bool:
    removed = set(removed)
    keep = [v for v in range(g.n) if v not in removed]
    if len(keep) <= 1:
        return True
    adj = {v: [] for v in keep}
    for a, b in g.edges:
        if a in adj and b in adj:
            adj[a].append(b)
            adj[b].append(a)
    seen = {keep[0]}
    q = deque([keep[0]])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                q.append(v)
    return len(seen) == len(keep)
