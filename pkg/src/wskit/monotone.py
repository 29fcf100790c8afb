"""Structure of x-monotone polygons: triangulation, geodesics, anchors, images.

Geodesics in a monotone polygon are x-monotone, so the first turn of the
shortest path from ``p`` toward a target to its right can be found with a
funnel swept over the chain vertices in x order: the funnel is the cone of
directions from ``p`` that pass below every upper-chain vertex and above
every lower-chain vertex seen so far. When a new vertex falls strictly
outside the cone, the geodesic bends around the vertex that defined the
violated side. Only orientation signs are used.
"""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import NotMonotone, PointOutside
from .geometry import (
    BoundaryPoint,
    Location,
    Point,
    Polygon,
    Segment,
    is_x_monotone,
    maximal_chord,
    orient,
    point_in_polygon,
    ray_exit,
    ray_shoot,
    x_extremes,
)


def _require_monotone(poly: Polygon):
    if not is_x_monotone(poly):
        raise NotMonotone("polygon is not x-monotone")


def _require_inside(poly: Polygon, p: Point):
    loc = point_in_polygon(poly, p)
    if loc is Location.EXTERIOR:
        raise PointOutside(f"{p} is outside the polygon")
    return loc


def chain_labels(poly: Polygon) -> list[int]:
    """Per vertex: -1 lower chain, +1 upper chain, 0 for xMin and xMax."""
    imin, imax = x_extremes(poly)
    n = poly.n
    lab = [0] * n
    i = (imin + 1) % n
    while i != imax:
        lab[i] = -1
        i = (i + 1) % n
    i = (imax + 1) % n
    while i != imin:
        lab[i] = 1
        i = (i + 1) % n
    return lab


# -- triangulation ---------------------------------------------------------

def triangulate_monotone(poly: Polygon) -> list[tuple[int, int, int]]:
    """Triangulate a monotone polygon; returns CCW index triples.

    The classic stack sweep needs both chains strictly monotone in the sweep
    order. Sweeping by (x, y) or (x, -y) achieves that unless one chain has
    vertical edges pointing both ways; that rare case is ear-clipped.
    """
    _require_monotone(poly)
    v = poly.vertices
    for sy in (1, -1):
        tris = _sweep(poly, lambda i: (v[i][0], sy * v[i][1]))
        if tris is not None:
            return tris
    return _ear_clip(poly)


def _sweep(poly: Polygon, key):
    v = poly.vertices
    n = poly.n
    order = sorted(range(n), key=key)
    lo, hi = order[0], order[-1]
    side = [0] * n
    i = lo
    while i != hi:
        j = (i + 1) % n
        if key(j) < key(i):
            return None
        if j != hi:
            side[j] = -1
        i = j
    i = lo
    while i != hi:
        j = (i - 1) % n
        if key(j) < key(i):
            return None
        if j != hi:
            side[j] = 1
        i = j

    tris = []

    def emit(a, b, c):
        if orient(v[a], v[b], v[c]) < 0:
            b, c = c, b
        tris.append((a, b, c))

    stack = [order[0], order[1]]
    for j in range(2, n - 1):
        u = order[j]
        if side[u] != side[stack[-1]]:
            while len(stack) > 1:
                top = stack.pop()
                emit(u, top, stack[-1])
            stack = [order[j - 1], u]
        else:
            last = stack.pop()
            while stack:
                o = orient(v[stack[-1]], v[last], v[u])
                if (side[u] < 0 and o > 0) or (side[u] > 0 and o < 0):
                    emit(u, last, stack[-1])
                    last = stack.pop()
                else:
                    break
            stack.append(last)
            stack.append(u)
    u = order[-1]
    while len(stack) > 1:
        top = stack.pop()
        emit(u, top, stack[-1])
    return tris


def _ear_clip(poly: Polygon):
    v = poly.vertices
    idx = list(range(poly.n))
    tris = []
    while len(idx) > 3:
        m = len(idx)
        for k in range(m):
            a, b, c = idx[k - 1], idx[k], idx[(k + 1) % m]
            if orient(v[a], v[b], v[c]) <= 0:
                continue
            blocked = False
            for o in idx:
                if o in (a, b, c):
                    continue
                q = v[o]
                if (orient(v[a], v[b], q) >= 0 and orient(v[b], v[c], q) >= 0
                        and orient(v[c], v[a], q) >= 0):
                    blocked = True
                    break
            if not blocked:
                tris.append((a, b, c))
                del idx[k]
                break
        else:
            raise AssertionError("no ear found")
    tris.append(tuple(idx))
    return tris


# -- geodesics --------------------------------------------------------------

def _first_turn(poly: Polygon, labels, p: Point, target: Point) -> int | None:
    """Index of the first vertex where the geodesic from p to target bends.

    Requires x(target) != x(p). Works in mirrored coordinates when the
    target lies to the left, so the cone logic is written once.
    """
    sgn = 1 if target[0] > p[0] else -1
    verts = poly.vertices

    def loc(q):
        return (sgn * (q[0] - p[0]), q[1] - p[1])

    tx, ty = loc(target)
    n = poly.n
    cand = []
    for i, q in enumerate(verts):
        if q == p or q == target:
            continue
        qx, qy = loc(q)
        if qx < 0 or qx > tx:
            continue
        if qx == 0 or qx == tx:
            # on the start or target vertical line a vertex only matters if
            # its chain continues into the open slab between the two
            nx = (loc(verts[i - 1])[0], loc(verts[(i + 1) % n])[0])
            if not any(0 < x < tx or (qx == 0 < x) or (qx == tx > x) for x in nx):
                continue
        cand.append((qx, i, qy))
    cand.sort(key=lambda c: c[0])

    def cross(d, qx, qy):
        # sign of the angle from d to (qx, qy); both lie in the closed right
        # half-plane, so only the two vertical directions need care
        if d[0] == 0 and qx == 0:
            return (qy > 0) - (qy < 0) - ((d[1] > 0) - (d[1] < 0))
        return d[0] * qy - d[1] * qx

    up, up_v = (0, 1), None
    dn, dn_v = (0, -1), None
    for qx, i, qy in cand:
        lab = labels[i]
        if lab == 0:
            # an extreme vertex strictly inside the sweep range only happens
            # on vertical end edges; it bounds both sides
            lab = 1 if qy > 0 else -1
        # a collinear vertex further out replaces the recorded one, so the
        # reported vertex is where the path really bends
        if lab > 0:
            if cross(dn, qx, qy) < 0:
                return dn_v
            c = cross(up, qx, qy)
            if c < 0 or (c == 0 and up_v is not None):
                up, up_v = (qx, qy), i
        else:
            if cross(up, qx, qy) > 0:
                return up_v
            c = cross(dn, qx, qy)
            if c > 0 or (c == 0 and dn_v is not None):
                dn, dn_v = (qx, qy), i
    if cross(up, tx, ty) > 0:
        return up_v
    if cross(dn, tx, ty) < 0:
        return dn_v
    return None


def shortest_path(poly: Polygon, a: Point, b: Point) -> list[Point]:
    """Euclidean geodesic from ``a`` to ``b`` as a list of points.

    Interior points of the result are exactly the turning (reflex) vertices.
    """
    _require_monotone(poly)
    _require_inside(poly, a)
    _require_inside(poly, b)
    labels = chain_labels(poly)
    path = [a]
    cur = a
    while cur != b:
        if cur[0] == b[0]:
            break
        k = _first_turn(poly, labels, cur, b)
        if k is None:
            break
        cur = poly.vertices[k]
        path.append(cur)
    if path[-1] != b:
        path.append(b)
    return path


# -- profiles ---------------------------------------------------------------

@dataclass(frozen=True)
class MonotoneProfile:
    point: Point
    l_anchor: int | None
    r_anchor: int | None
    l_image: BoundaryPoint | None
    r_image: BoundaryPoint | None
    l_bdry: Segment | None
    r_bdry: Segment | None
    l_chord: Segment | None
    r_chord: Segment | None
    vchord: Segment
    x_max_vis: mpq
    x_min_vis: mpq


def vertical_chord(poly: Polygon, p: Point) -> Segment:
    """Maximal vertical segment of the polygon through ``p``, bottom first."""
    _require_monotone(poly)
    loc = _require_inside(poly, p)
    top = ray_exit(poly, p, 0, 1, loc)
    bot = ray_exit(poly, p, 0, -1, loc)
    return Segment(bot[1].coords if bot else p, top[1].coords if top else p)


def _side(poly, labels, p, target_index):
    target = poly.vertices[target_index]
    if target[0] == p[0]:
        return None, None, None, None
    k = _first_turn(poly, labels, p, target)
    if k is None:
        return None, None, None, None
    anchor = poly.vertices[k]
    image = ray_shoot(poly, p, (anchor[0] - p[0], anchor[1] - p[1]))
    return k, image, Segment(anchor, image.coords), maximal_chord(poly, p, anchor)


def compute_profile(poly: Polygon, p: Point, labels=None) -> MonotoneProfile:
    """Anchors, images, bdry chords and x-extent of Vis(p).

    The x-extent of Vis(p) to the right is ``x(xMax)`` when there is no
    right anchor; otherwise Vis(p) lies on p's side of rBdry and touches
    both its endpoints, so the extent is the larger x of the two.
    """
    _require_monotone(poly)
    _require_inside(poly, p)
    if labels is None:
        labels = chain_labels(poly)
    imin, imax = x_extremes(poly)
    v = poly.vertices
    ra, ri, rb, rc = _side(poly, labels, p, imax)
    la, li, lb, lc = _side(poly, labels, p, imin)
    xmax = v[imax][0] if ra is None else max(v[ra][0], ri.coords[0])
    xmin = v[imin][0] if la is None else min(v[la][0], li.coords[0])
    return MonotoneProfile(p, la, ra, li, ri, lb, rb, lc, rc,
                           vertical_chord(poly, p), xmax, xmin)
