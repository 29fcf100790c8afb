import pytest
from gmpy2 import mpq

from conftest import C_SHAPE, P
from wskit.errors import NotMonotone
from wskit.generate import random_monotone_polygon, random_point_in
from wskit.geometry import (Segment, area, in_closed_polygon, lerp, orient, reflex_vertices,
                            validate_polygon, visible, x_extremes)
from wskit.monotone import compute_profile, shortest_path, triangulate_monotone, vertical_chord
from wskit.oracle import geodesic_oracle
from wskit.visibility import PRIMARY, visibility_region


def _tri_area(poly, t):
    a, b, c = (poly.vertices[i] for i in t)
    return abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) / 2


def test_triangulate_small(square, lshape):
    tri = validate_polygon([(0, 0), (1, 0), (0, 1)])
    assert len(triangulate_monotone(tri)) == 1
    assert len(triangulate_monotone(square)) == 2
    ts = triangulate_monotone(lshape)
    assert len(ts) == 4
    assert sum(_tri_area(lshape, t) for t in ts) == area(lshape)


def test_triangulate_rejects_non_monotone():
    with pytest.raises(NotMonotone):
        triangulate_monotone(validate_polygon(C_SHAPE))


def test_triangulation_tiles(rng):
    for _ in range(150):
        poly = random_monotone_polygon(rng.randint(3, 20), rng, grid=30, height=rng.choice([3, 10]),
                                       distinct_x=rng.random() < 0.5)
        ts = triangulate_monotone(poly)
        assert len(ts) == poly.n - 2
        assert sum(_tri_area(poly, t) for t in ts) == area(poly)
        for t in ts:
            a, b, c = (poly.vertices[i] for i in t)
            for u, v in ((a, b), (b, c), (c, a)):
                assert visible(poly, u, v)


def test_shortest_path_examples(pentagon, lshape):
    assert shortest_path(pentagon, P(0, 0), P(2, 5)) == [P(0, 0), P(2, 5)]
    assert shortest_path(lshape, P(mpq(1, 2), mpq(7, 2)), P(4, 2)) == [P(mpq(1, 2), mpq(7, 2)), P(2, 2), P(4, 2)]
    assert shortest_path(lshape, P(1, 1), P(1, 1)) == [P(1, 1)]


def test_shortest_path_matches_dijkstra(rng):
    for _ in range(120):
        poly = random_monotone_polygon(rng.randint(4, 12), rng, grid=20, height=rng.choice([3, 8]))
        a = random_point_in(poly, rng, boundary_chance=0.2)
        b = random_point_in(poly, rng, boundary_chance=0.2)
        path = shortest_path(poly, a, b)
        assert path == geodesic_oracle(poly, a, b)
        refl = {poly.vertices[i] for i in reflex_vertices(poly)}
        assert all(v in refl for v in path[1:-1])


def test_p2_profiles(p2, p2_points):
    a, b, c = p2_points
    pa = compute_profile(p2, a)
    assert p2.vertices[pa.r_anchor] == P(4, mpq(1, 2))
    assert pa.r_image.coords == P(mpq(19, 4), 0)
    assert pa.r_bdry == Segment(P(4, mpq(1, 2)), P(mpq(19, 4), 0))
    assert pa.x_max_vis == mpq(19, 4)
    pb = compute_profile(p2, b)
    assert p2.vertices[pb.l_anchor] == P(8, mpq(1, 2))
    assert pb.l_image.coords == P(mpq(29, 4), 0)
    assert set(pb.l_bdry) == {P(8, mpq(1, 2)), P(mpq(29, 4), 0)}
    assert pb.x_min_vis == mpq(29, 4)


def test_convex_profile(pentagon):
    pr = compute_profile(pentagon, P(2, 2))
    assert pr.r_anchor is None and pr.l_anchor is None
    assert pr.x_max_vis == 5 and pr.x_min_vis == -1


def test_vertical_chord_examples(square, p2):
    assert set(vertical_chord(square, P(1, 1))) == {P(1, 0), P(1, 2)}
    assert set(vertical_chord(square, P(0, 0))) == {P(0, 0), P(0, 2)}
    assert set(vertical_chord(p2, P(4, mpq(1, 2)))) == {P(4, 0), P(4, mpq(1, 2))}


def test_x_max_vis_matches_region_extent(rng):
    for _ in range(150):
        poly = random_monotone_polygon(rng.randint(4, 14), rng, grid=24, height=rng.choice([3, 8]))
        p = random_point_in(poly, rng, boundary_chance=0.3)
        pr = compute_profile(poly, p)
        lo, hi = visibility_region(poly, p).x_range()
        assert (pr.x_min_vis, pr.x_max_vis) == (lo, hi)
        if pr.r_anchor is None:
            assert pr.x_max_vis == poly.vertices[x_extremes(poly)[1]][0]


def test_anchor_is_visible_reflex_and_window(rng):
    for _ in range(150):
        poly = random_monotone_polygon(rng.randint(4, 14), rng, grid=24, height=8)
        p = random_point_in(poly, rng)
        pr = compute_profile(poly, p)
        vr = visibility_region(poly, p)
        windows = [e for e, lab in zip(vr.region.edges, vr.edge_labels) if lab != PRIMARY]
        for anchor, bdry in ((pr.r_anchor, pr.r_bdry), (pr.l_anchor, pr.l_bdry)):
            if anchor is None:
                continue
            assert anchor in poly.reflex
            assert visible(poly, p, poly.vertices[anchor])
            a, b = bdry
            # the bdry chord lies along a window of Vis(p) or is a degenerate arm
            assert any(orient(u, v, a) == 0 and orient(u, v, b) == 0 for u, v in windows) or \
                any(orient(u, v, a) == 0 and orient(u, v, b) == 0 for u, v in vr.arms)


def _split(poly, anchor, image):
    """The two closed sub-polygons of poly cut along the chord anchor-image."""
    n = poly.n
    e = image.edge_index
    one = [poly.vertices[i % n] for i in range(anchor, anchor + ((e - anchor) % n) + 1)]
    if image.coords != one[-1]:
        one.append(image.coords)
    two = [image.coords] + [poly.vertices[i % n] for i in range(e + 1, e + 1 + ((anchor - e - 1) % n) + 1)]
    two = [q for k, q in enumerate(two) if k == 0 or q != two[k - 1]]
    return [validate_polygon(one, allow_collinear=True), validate_polygon(two, allow_collinear=True)]


def test_bdry_partitions_region(rng):
    checked = 0
    for _ in range(120):
        poly = random_monotone_polygon(rng.randint(5, 12), rng, grid=20, height=8)
        p = random_point_in(poly, rng)
        pr = compute_profile(poly, p)
        if pr.r_bdry is None:
            continue
        sides = [s for s in _split(poly, pr.r_anchor, pr.r_image) if in_closed_polygon(s, p)]
        assert len(sides) == 1
        vr = visibility_region(poly, p)
        for q in vr.all_points():
            assert in_closed_polygon(sides[0], q)
        checked += 1
    assert checked > 10


def test_inner_anchors_are_distinct(rng):
    seen = 0
    for _ in range(400):
        poly = random_monotone_polygon(rng.randint(4, 14), rng, grid=16, height=rng.choice([3, 6]))
        p = random_point_in(poly, rng, denominator=5, boundary_chance=0.5)
        pr = compute_profile(poly, p)
        if pr.l_anchor is not None and pr.r_anchor is not None:
            seen += 1
            assert pr.l_anchor != pr.r_anchor
    assert seen > 20
