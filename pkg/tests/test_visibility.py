import random

import pytest
from gmpy2 import mpq

from conftest import P
from wskit.errors import PointOutside
from wskit.generate import random_monotone_polygon, random_point_in, random_simple_polygon
from wskit.geometry import Segment, in_closed_polygon, lerp, visible
from wskit.monotone import vertical_chord
from wskit.oracle import naive_visibility, same_cycle, same_region
from wskit.visibility import PRIMARY, classify_edges, visibility_region


def test_convex_sees_everything(pentagon):
    vr = visibility_region(pentagon, P(2, 2))
    assert same_cycle(vr.region.vertices, pentagon.vertices)
    assert vr.arms == ()
    labels, min_pr = classify_edges(vr, pentagon)
    assert all(lab == PRIMARY for lab in labels)
    assert min_pr == min((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 for a, b in pentagon.edges)


def test_lshape_region(lshape):
    vr = visibility_region(lshape, P(3, 1))
    assert same_cycle(vr.region.vertices, [P(0, 0), P(4, 0), P(4, 2), P(2, 2), P(0, 4)])
    assert vr.arms == ()
    windows = [(e, lab) for e, lab in zip(vr.region.edges, vr.edge_labels) if lab != PRIMARY]
    assert len(windows) == 1
    (a, b), lab = windows[0]
    assert {a, b} == {P(2, 2), P(0, 4)}
    assert lab.base == P(2, 2) and lab.end == P(0, 4)


def test_kernel_point_sees_whole_lshape(lshape):
    vr = visibility_region(lshape, P(0, 0))
    assert same_cycle(vr.region.vertices, lshape.vertices)


def test_convex_vertex_source(pentagon):
    vr = visibility_region(pentagon, P(0, 0))
    assert same_cycle(vr.region.vertices, pentagon.vertices)
    assert all(lab == PRIMARY for lab in vr.edge_labels)


def test_outside_rejected(square):
    with pytest.raises(PointOutside):
        visibility_region(square, P(3, 3))


def test_arm_reported():
    # the horizontal ray from p grazes (5,4) and (6,4) and runs on as a 1-d arm
    from wskit.geometry import validate_polygon

    poly = validate_polygon([(6, 5), (5, 4), (1, 7), (2, 3), (0, 3), (5, 1), (6, 4), (7, 2)])
    p = P(mpq(343, 128), 4)
    vr = visibility_region(poly, p)
    assert vr.arms == (Segment(P(6, 4), P(mpq(19, 3), 4)),)
    assert same_region(vr, naive_visibility(poly, p))


def test_symmetry_of_visibility(rng):
    for _ in range(1000):
        poly = random_simple_polygon(rng.randint(3, 10), rng, grid=16)
        p = random_point_in(poly, rng, boundary_chance=0.2)
        q = random_point_in(poly, rng, boundary_chance=0.2)
        assert visible(poly, p, q) == visible(poly, q, p)


def test_vertical_chord_inside_region(rng):
    for _ in range(60):
        poly = random_monotone_polygon(rng.randint(4, 12), rng, grid=24, height=8)
        p = random_point_in(poly, rng, boundary_chance=0.2)
        a, b = vertical_chord(poly, p)
        for k in range(0, 11):
            assert visible(poly, p, lerp(a, b, mpq(k, 10)))


def test_region_is_star_shaped(rng):
    for _ in range(20):
        poly = random_simple_polygon(rng.randint(5, 12), rng)
        p = random_point_in(poly, rng)
        vr = visibility_region(poly, p)
        for _ in range(100):
            z = random_point_in(vr.region, rng)
            assert visible(vr.region, p, z)
            assert visible(poly, p, z)


def test_every_region_has_a_primary_edge(rng):
    for _ in range(100):
        poly = random_simple_polygon(rng.randint(3, 12), rng)
        vr = visibility_region(poly, random_point_in(poly, rng, boundary_chance=0.3))
        assert PRIMARY in vr.edge_labels
        for (a, b), lab in zip(vr.region.edges, vr.edge_labels):
            if lab != PRIMARY:
                # windows point away from the source
                from wskit.geometry import orient
                assert orient(vr.source, lab.base, lab.end) == 0


def test_agrees_with_naive_oracle_small(rng):
    for _ in range(150):
        poly = random_simple_polygon(rng.randint(3, 14), rng)
        p = random_point_in(poly, rng, boundary_chance=0.25)
        assert same_region(visibility_region(poly, p), naive_visibility(poly, p))
