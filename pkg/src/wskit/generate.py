"""Random instance generators for fuzzing and demos.

All generators take a ``random.Random`` so runs are reproducible from a seed.
"""
from __future__ import annotations

import random

from gmpy2 import mpq

from .errors import GeometryError
from .geometry import (
    Location,
    Point,
    Polygon,
    Segment,
    is_x_monotone,
    lerp,
    orient,
    orient,
    point_in_polygon,
    pt,
    segments_intersect,
    segments_touch,
    validate_polygon,
)


def _untangle(pts: list[Point], rng: random.Random, max_rounds: int = 2000) -> list[Point] | None:
    """2-opt: reverse runs between crossing edges until the cycle is simple."""
    n = len(pts)
    for _ in range(max_rounds):
        crossing = None
        order = list(range(n))
        rng.shuffle(order)
        for i in order:
            a, b = pts[i], pts[(i + 1) % n]
            for j in range(n):
                if abs(i - j) <= 1 or {i, j} == {0, n - 1}:
                    continue
                c, d = pts[j], pts[(j + 1) % n]
                if segments_touch(a, b, c, d):
                    crossing = (min(i, j), max(i, j))
                    break
            if crossing:
                break
        if crossing is None:
            return pts
        i, j = crossing
        pts[i + 1:j + 1] = reversed(pts[i + 1:j + 1])
    return None


def random_simple_polygon(n: int, rng: random.Random, grid: int = 40) -> Polygon:
    """A random simple polygon with ``n`` integer vertices in ``[0, grid]^2``."""
    while True:
        pts = set()
        while len(pts) < n:
            pts.add(pt(rng.randint(0, grid), rng.randint(0, grid)))
        cyc = _untangle(list(pts), rng)
        if cyc is None:
            continue
        try:
            return validate_polygon(cyc)
        except GeometryError:
            continue


def _edges_ok(pts: list[Point], i: int) -> bool:
    """The two edges at vertex ``i`` meet the rest of the cycle only where they should."""
    n = len(pts)
    for e in ((i - 1) % n, i):
        a, b = pts[e], pts[(e + 1) % n]
        for j in range(n):
            if j == e:
                continue
            c, d = pts[j], pts[(j + 1) % n]
            hit = segments_intersect(Segment(a, b), Segment(c, d))
            if hit is None:
                continue
            if j == (e + 1) % n and hit == b:
                continue
            if j == (e - 1) % n and hit == a:
                continue
            return False
    return True


def random_monotone_polygon(n: int, rng: random.Random, grid: int = 40,
                            height: int | None = None, distinct_x: bool = True,
                            moves: int | None = None) -> Polygon:
    """A random x-monotone polygon with ``n`` integer vertices.

    Interior x-coordinates are split at random between the upper and lower
    chain. Starting from a flat box-like shape, random single-vertex height
    changes are applied, each kept only if the cycle stays simple and no new
    straight vertex appears.
    """
    height = grid if height is None else height
    if height < 2:
        raise ValueError("height must be at least 2")
    if distinct_x and n > grid + 1:
        raise ValueError("grid too small for distinct x-coordinates")
    moves = 8 * n if moves is None else moves
    while True:
        if distinct_x:
            xs = sorted(rng.sample(range(grid + 1), n))
        else:
            xs = sorted(rng.randint(0, grid) for _ in range(n))
            if xs[0] == xs[1] or xs[-1] == xs[-2]:
                continue
        upper, lower = [], []
        for x in xs[1:-1]:
            (upper if rng.random() < 0.5 else lower).append(x)
        mid = height // 2
        low = []
        for x in lower:
            low.append(pt(x, 1 if low and low[-1][0] == x and low[-1][1] == 0 else 0))
        up = []
        for x in reversed(upper):
            up.append(pt(x, height - 1 if up and up[-1][0] == x and up[-1][1] == height else height))
        cyc = [pt(xs[0], mid)] + low + [pt(xs[-1], mid)] + up
        if len(set(cyc)) < n or not all(_edges_ok(cyc, i) for i in range(n)):
            continue

        def flat(i):
            return orient(cyc[i - 1], cyc[i], cyc[(i + 1) % n]) == 0

        def flats(i):
            return sum(flat(j % n) for j in (i - 1, i, i + 1))

        step = 0
        while step < moves or any(flat(i) for i in range(n)):
            step += 1
            if step > 50 * moves:
                break
            i = rng.randrange(n)
            old = cyc[i]
            before = flats(i)
            cyc[i] = pt(old[0], rng.randint(0, height))
            if cyc[i] in cyc[:i] + cyc[i + 1:] or flats(i) > before or not _edges_ok(cyc, i):
                cyc[i] = old
        try:
            poly = validate_polygon(cyc)
        except GeometryError:
            continue
        if is_x_monotone(poly):
            return poly


def random_point_in(poly: Polygon, rng: random.Random, denominator: int = 7,
                    boundary_chance: float = 0.0) -> Point:
    """A random rational point of the closed polygon.

    With probability ``boundary_chance`` the point is placed on an edge
    (half of those at a vertex).
    """
    if boundary_chance and rng.random() < boundary_chance:
        i = rng.randrange(poly.n)
        a, b = poly.edges[i]
        if denominator < 2 or rng.random() < 0.5:
            return a
        return lerp(a, b, mpq(rng.randint(1, denominator - 1), denominator))
    xmin, ymin, xmax, ymax = poly.bbox
    while True:
        x = xmin + (xmax - xmin) * mpq(rng.randint(0, denominator * 64), denominator * 64)
        y = ymin + (ymax - ymin) * mpq(rng.randint(0, denominator * 64), denominator * 64)
        q = Point(x, y)
        if point_in_polygon(poly, q) is not Location.EXTERIOR:
            return q
