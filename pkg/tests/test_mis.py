import itertools
import random

import pytest

from wskit.errors import NotMonotoneVig, TooLarge
from wskit.generate import random_monotone_polygon, random_point_in
from wskit.mis import longest_chain, mis_chain, mis_exact
from wskit.oracle import exhaustive_mis
from wskit.region_graph import Vig, build_vig


def graph(n, edges, monotone=False, xs=None):
    adj = [[i == j for j in range(n)] for i in range(n)]
    for i, j in edges:
        adj[i][j] = adj[j][i] = True
    from wskit.geometry import pt
    pts = [pt(x, 0) for x in (xs or range(n))]
    return Vig(pts, adj, monotone)


def test_small_graphs():
    k5 = graph(5, itertools.combinations(range(5), 2))
    assert mis_exact(k5).size == 1 and exhaustive_mis(k5) == 1
    empty = graph(7, [])
    assert mis_exact(empty).size == 7 and exhaustive_mis(empty) == 7
    tri = graph(3, [(0, 1), (1, 2), (0, 2)])
    assert mis_exact(tri).size == 1
    c5 = graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert mis_exact(c5).size == 2 and exhaustive_mis(c5) == 2


def test_chain_on_simple_graphs():
    assert mis_chain(graph(5, itertools.combinations(range(5), 2), True)).size == 1
    assert mis_chain(graph(6, [], True)).size == 6
    with pytest.raises(NotMonotoneVig):
        mis_chain(graph(3, []))


def test_p2_mis(p2, p2_points):
    vig = build_vig(p2, list(p2_points))
    sol = mis_chain(vig)
    assert sol.indices == [0, 1] and sol.size == 2
    assert sol.certificate == [(0, 1)]
    assert mis_exact(vig).indices == [0, 1]


def test_exhaustive_cap():
    with pytest.raises(TooLarge):
        exhaustive_mis(graph(23, []))


def test_exact_is_lexicographically_smallest():
    # 0-1 adjacent, everything else free: {0,2,3} beats {1,2,3}
    g = graph(4, [(0, 1)])
    assert mis_exact(g).indices == [0, 2, 3]


def test_longest_chain_tie_break():
    xs = [0, 1, 2, 3]
    # only pairs (0,2), (1,2), (0,3), (1,3) are disjoint
    ok = {(0, 2), (1, 2), (0, 3), (1, 3)}
    chain = longest_chain(xs, lambda i, j: (min(i, j), max(i, j)) in ok)
    assert chain == [0, 2]


def test_chain_equals_exact_on_monotone(rng):
    for _ in range(30):
        poly = random_monotone_polygon(rng.randint(5, 12), rng, grid=24, height=rng.choice([3, 8]))
        pts = [random_point_in(poly, rng, boundary_chance=0.3) for _ in range(rng.randint(1, 16))]
        vig = build_vig(poly, pts)
        assert mis_chain(vig).size == mis_exact(vig).size == exhaustive_mis(vig)


def test_adding_points_never_shrinks(rng):
    poly = random_monotone_polygon(10, rng, grid=20, height=4)
    pts = []
    last = 0
    for _ in range(15):
        pts.append(random_point_in(poly, rng, boundary_chance=0.5))
        size = mis_chain(build_vig(poly, pts)).size
        assert size >= last
        last = size
