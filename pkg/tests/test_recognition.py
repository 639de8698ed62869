import math
import random

from _helpers import (
    brute_crossing_adjacency,
    crossing_adjacency_is_bipartite,
    layer_is_plane,
    random_edge_subset_graph,
    random_strict_points,
    witness_cycle_is_valid,
)

from biplanekit.geometry import PointSet
from biplanekit.graphs import GeometricGraph
from biplanekit.recognition import (
    BiplaneDecomposition,
    OddCycleWitness,
    TooManyEdges,
    crossing_graph,
    crossing_pairs,
    exceeds_edge_cap,
    test_biplane,
)


def k_complete(ps: PointSet) -> GeometricGraph:
    n = len(ps)
    return GeometricGraph(ps, tuple((a, b) for a in range(n) for b in range(a + 1, n)))


def convex_polygon(n: int, r: int = 10**6) -> PointSet:
    pts = [
        (int(r * math.cos(2 * math.pi * i / n)), int(r * math.sin(2 * math.pi * i / n)))
        for i in range(n)
    ]
    return PointSet.from_coords(pts)


def test_quad_with_diagonals_single_crossing_arc():
    ps = PointSet.from_coords([(0, 0), (2, 0), (2, 2), (0, 2)])
    g = k_complete(ps)
    pairs = crossing_pairs(g)
    assert len(pairs) == 1
    i, j = pairs[0]
    assert {g.edges[i], g.edges[j]} == {(0, 2), (1, 3)}


def test_pentagon_k5_crossing_graph_is_five_cycle_plus_isolated_sides():
    g = k_complete(convex_polygon(5))
    adj = crossing_graph(g)
    degs = sorted(len(lst) for lst in adj)
    assert degs == [0] * 5 + [2] * 5
    # derived check: the degree-2 nodes form one cycle of length 5
    cyc = [i for i, lst in enumerate(adj) if lst]
    start = cyc[0]
    seen = {start}
    cur, prev = adj[start][0], start
    while cur != start:
        seen.add(cur)
        nxt = [x for x in adj[cur] if x != prev]
        assert len(nxt) == 1
        prev, cur = cur, nxt[0]
    assert len(seen) == 5


def test_plane_graph_has_empty_crossing_graph():
    ps = PointSet.from_coords([(0, 0), (4, 0), (2, 3), (2, 1)])
    g = GeometricGraph(ps, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)))
    assert crossing_pairs(g) == []


def test_k4_decomposes_with_diagonals_split():
    ps = PointSet.from_coords([(0, 0), (2, 0), (2, 2), (0, 2)])
    res = test_biplane(k_complete(ps))
    assert isinstance(res, BiplaneDecomposition)
    in1 = (0, 2) in res.layer1
    assert ((0, 2) in res.layer1) != ((0, 2) in res.layer2)
    assert ((1, 3) in res.layer1) != ((1, 3) in res.layer2)
    assert in1 != ((1, 3) in res.layer1)


def test_k5_pentagon_witness_is_the_five_diagonals():
    g = k_complete(convex_polygon(5))
    res = test_biplane(g)
    assert isinstance(res, OddCycleWitness)
    assert len(res.cycle) == 5
    assert witness_cycle_is_valid(g, res.cycle)


def test_fast_reject_guard_arithmetic():
    # A 9-vertex graph can never reach 37 edges, so the guard is exercised
    # at the arithmetic level: 37 > 6*9 - 18 = 36.
    assert exceeds_edge_cap(9, 37)
    assert not exceeds_edge_cap(9, 36)
    assert not exceeds_edge_cap(7, 100)  # no rejection below n = 8


def test_too_many_edges_returned_without_crossing_graph():
    ps = random_strict_points(random.Random(1), 10)
    g = k_complete(ps)  # 45 > 6*10 - 18 = 42
    res = test_biplane(g)
    assert isinstance(res, TooManyEdges)
    assert (res.n, res.m, res.cap) == (10, 45, 42)


def test_decomposition_deterministic_and_canonical():
    rng = random.Random(7)
    ps = random_strict_points(rng, 9)
    g = random_edge_subset_graph(rng, ps, density=0.5)
    r1 = test_biplane(g)
    r2 = test_biplane(g)
    assert r1 == r2
    if isinstance(r1, BiplaneDecomposition):
        # the lowest-index edge of each crossing component sits in layer1
        assert g.edges[0] in r1.layer1


def test_random_graphs_match_brute_force_bipartiteness():
    rng = random.Random(11)
    for _ in range(80):
        n = rng.randint(3, 11)
        ps = random_strict_points(rng, n)
        g = random_edge_subset_graph(rng, ps)
        res = test_biplane(g)
        expected = crossing_adjacency_is_bipartite(brute_crossing_adjacency(g))
        if isinstance(res, BiplaneDecomposition):
            assert expected
            assert set(res.layer1) | set(res.layer2) == set(g.edges)
            assert not (set(res.layer1) & set(res.layer2))
            assert layer_is_plane(g, res.layer1)
            assert layer_is_plane(g, res.layer2)
        elif isinstance(res, OddCycleWitness):
            assert not expected
            assert witness_cycle_is_valid(g, res.cycle)
        else:
            assert isinstance(res, TooManyEdges)
            assert not expected  # cap exceeded implies non-bipartite


def test_component_color_swap_is_also_valid():
    # Each crossing component admits exactly two colorings; swapping the
    # component holding the K4 diagonals keeps both layers plane.
    ps = PointSet.from_coords([(0, 0), (2, 0), (2, 2), (0, 2)])
    g = k_complete(ps)
    res = test_biplane(g)
    assert isinstance(res, BiplaneDecomposition)
    component = {(0, 2), (1, 3)}
    swapped1 = tuple(
        e for e in g.edges if (e in set(res.layer1)) != (e in component)
    )
    swapped2 = tuple(e for e in g.edges if e not in swapped1)
    assert layer_is_plane(g, swapped1)
    assert layer_is_plane(g, swapped2)
