import pytest
from gmpy2 import mpq

from conftest import C_SHAPE, P
from wskit.discretize import (
    exact_candidates,
    maximal_chord,
    q_approx,
    r_mid,
    vertical_decomposition,
    witgen,
    witgen_rounds,
)
from wskit.errors import KOutOfRange, NotMonotone, NotVisible
from wskit.generate import random_monotone_polygon
from wskit.geometry import Location, point_in_polygon, reflex_vertices, validate_polygon, visible


def test_r_mid(square, lshape, p2):
    assert r_mid(square) == []
    assert r_mid(lshape) == []
    assert r_mid(p2) == [P(6, mpq(1, 2))]


def test_maximal_chord(square, p2):
    assert set(maximal_chord(square, P(0, 0), P(2, 2))) == {P(0, 0), P(2, 2)}
    assert set(maximal_chord(p2, P(0, 3), P(4, mpq(1, 2)))) == {P(0, 3), P(mpq(24, 5), 0)}
    # along an edge the chord is the whole edge
    assert set(maximal_chord(square, P(mpq(1, 2), 0), P(1, 0))) == {P(0, 0), P(2, 0)}
    with pytest.raises(NotVisible):
        maximal_chord(p2, P(1, mpq(5, 2)), P(11, mpq(5, 2)))


def test_witgen_square(square):
    cs = witgen(square, 1)
    assert len(cs) == 16 and cs.sizes == [4, 8, 16]
    provs = cs.provenance
    assert sum(1 for t in provs.values() if t == "vertex") == 4
    assert sum(1 for t in provs.values() if t == "midpoint:1") == 4
    assert sum(1 for t in provs.values() if t == "midpoint:2") == 8


def test_witgen_errors(square):
    with pytest.raises(KOutOfRange):
        witgen(square, 0)
    with pytest.raises(NotMonotone):
        witgen(validate_polygon(C_SHAPE), 1)


def test_witgen_lshape_has_images(lshape):
    pts = set(witgen(lshape, 1).points())
    # chords from each vertex through the reflex corner (2,2)
    for v in lshape.vertices:
        if v != P(2, 2) and visible(lshape, v, P(2, 2)):
            for q in maximal_chord(lshape, v, P(2, 2)):
                assert q in pts


def test_p2_sizes(p2):
    assert witgen_rounds(p2, 6).sizes == [10, 34, 76, 178, 426, 1040, 2586]


def test_vertical_decomposition(square, p2):
    assert set(vertical_decomposition(square)) <= set(square.vertices)
    H = set(vertical_decomposition(p2))
    assert P(4, 0) in H and P(5, 0) in H


def test_q_approx(pentagon, p2):
    q1 = q_approx(pentagon, 1)
    assert set(q1.points()) == set(pentagon.vertices) | set(vertical_decomposition(pentagon))
    assert P(mpq(24, 5), 0) in set(q_approx(p2, 1).points())
    with pytest.raises(KOutOfRange):
        q_approx(p2, 0)


def test_candidate_invariants(rng):
    for _ in range(25):
        poly = random_monotone_polygon(rng.randint(4, 10), rng, grid=20, height=rng.choice([3, 8]))
        r = len(reflex_vertices(poly))
        cs = witgen_rounds(poly, 3)
        assert all(cs.sizes[i] <= cs.sizes[i + 1] for i in range(3))
        assert all(cs.sizes[i] <= poly.n * (2 + r) ** i for i in range(4))
        for p in cs.points():
            assert point_in_polygon(poly, p) is Location.BOUNDARY
        keys = sorted(cs.boundary)
        assert all(0 <= t < 1 for _, t in keys)
        again = witgen_rounds(poly, 3)
        assert again.points() == cs.points()
        ex = exact_candidates(poly, 1)
        mids = r_mid(poly)
        assert len(mids) <= r * r
        for m in ex.interior_points:
            assert m in mids
        q1 = q_approx(poly, 1)
        assert len(q1) <= (poly.n + len(vertical_decomposition(poly))) * (1 + r)
