"""Exact planar primitives: points, segments, simple polygons and predicates.

Every coordinate is a ``gmpy2.mpq`` rational. No predicate in this module
uses floating point, so repeated evaluation is bit-identical.
"""
from __future__ import annotations

from enum import Enum, IntEnum
from typing import Iterable, NamedTuple, Sequence

from gmpy2 import mpq

from .errors import (
    CollinearVertices,
    DuplicateVertex,
    NoHit,
    SelfIntersecting,
    TooFewVertices,
)

Rational = mpq
ZERO = mpq(0)
ONE = mpq(1)
HALF = mpq(1, 2)


def to_rational(value) -> mpq:
    """Coerce an int, str ("p/q"), Fraction or mpq to an exact rational.

    Floats are rejected: a float would smuggle rounding into exact predicates.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact coordinates")
    if isinstance(value, str):
        return mpq(value.strip())
    return mpq(value)


class Point(NamedTuple):
    x: mpq
    y: mpq

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


class Segment(NamedTuple):
    a: Point
    b: Point


class BoundaryPoint(NamedTuple):
    """A point on the polygon boundary located by edge index and parameter."""

    edge_index: int
    t: mpq
    coords: Point


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def pt(x, y) -> Point:
    return Point(to_rational(x), to_rational(y))


def cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p) as -1, 0 or 1."""
    c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (c > 0) - (c < 0)


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient(p, q, r))


def sq_dist(p: Point, q: Point) -> mpq:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def midpoint(p: Point, q: Point) -> Point:
    return Point((p[0] + q[0]) * HALF, (p[1] + q[1]) * HALF)


def lerp(p: Point, q: Point, t) -> Point:
    return Point(p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff ``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_param(p: Point, a: Point, b: Point) -> mpq:
    """Parameter of ``p`` along ``ab`` (p assumed on the supporting line)."""
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if dx != 0:
        return (p[0] - a[0]) / dx
    return (p[1] - a[1]) / dy


def segments_intersect(s1: Segment, s2: Segment):
    """Closed-set intersection of two segments.

    Returns ``None`` when disjoint, a :class:`Point` for a single shared point,
    or a :class:`Segment` for a collinear overlap of positive length.
    """
    a, b = s1
    c, d = s2
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return None
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 == 0 and o2 == 0:
        if a == b:
            return Point(*a) if on_segment(a, c, d) else None
        ts = sorted(((segment_param(c, a, b), c), (segment_param(d, a, b), d)))
        lo = max(ZERO, ts[0][0])
        hi = min(ONE, ts[1][0])
        if lo > hi:
            return None
        p = lerp(a, b, lo)
        if lo == hi:
            return p
        return Segment(p, lerp(a, b, hi))
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    if o1 == 0:
        return Point(*c)
    if o2 == 0:
        return Point(*d)
    if o3 == 0:
        return Point(*a)
    if o4 == 0:
        return Point(*b)
    return line_intersection(a, b, c, d)


def segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Boolean form of :func:`segments_intersect` for closed segments."""
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return False
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    if o1 * o2 > 0:
        return False
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    # collinear pieces reach here only when their bounding boxes overlap
    return o3 * o4 <= 0


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Point:
    """Intersection of the supporting lines of ``ab`` and ``cd`` (not parallel)."""
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    t = ((c[0] - a[0]) * sy - (c[1] - a[1]) * sx) / den
    return Point(a[0] + t * rx, a[1] + t * ry)


class Polygon:
    """A simple polygon stored as a counter-clockwise vertex cycle.

    Build instances through :func:`validate_polygon`; the constructor trusts
    its input.
    """

    __slots__ = ("vertices", "n", "_reflex", "_bbox", "_edges")

    def __init__(self, vertices: Sequence[Point]):
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.n = len(self.vertices)
        self._reflex = None
        self._bbox = None
        self._edges = None

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon({list(self.vertices)!r})"

    @property
    def edges(self) -> list[tuple[Point, Point]]:
        if self._edges is None:
            v = self.vertices
            self._edges = [(v[i], v[(i + 1) % self.n]) for i in range(self.n)]
        return self._edges

    def edge(self, i: int) -> Segment:
        return Segment(self.vertices[i % self.n], self.vertices[(i + 1) % self.n])

    @property
    def bbox(self) -> tuple[mpq, mpq, mpq, mpq]:
        if self._bbox is None:
            xs = [p[0] for p in self.vertices]
            ys = [p[1] for p in self.vertices]
            self._bbox = (min(xs), min(ys), max(xs), max(ys))
        return self._bbox

    @property
    def reflex(self) -> frozenset[int]:
        if self._reflex is None:
            self._reflex = frozenset(reflex_vertices(self))
        return self._reflex

    def index_of(self, p: Point) -> int | None:
        try:
            return self.vertices.index(p)
        except ValueError:
            return None

    def boundary_point(self, p: Point) -> BoundaryPoint | None:
        """Locate ``p`` on the boundary, canonicalising vertices to ``t = 0``."""
        for i, (a, b) in enumerate(self.edges):
            if p == a:
                return BoundaryPoint(i, ZERO, a)
        for i, (a, b) in enumerate(self.edges):
            if on_segment(p, a, b):
                return BoundaryPoint(i, segment_param(p, a, b), Point(*p))
        return None


def signed_area2(vertices: Sequence[Point]) -> mpq:
    n = len(vertices)
    s = ZERO
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        s += a[0] * b[1] - a[1] * b[0]
    return s


def area(poly: Polygon) -> mpq:
    return signed_area2(poly.vertices) * HALF


def validate_polygon(raw: Iterable, allow_collinear: bool = False) -> Polygon:
    """Check simplicity and return the polygon with counter-clockwise orientation.

    ``raw`` is a sequence of points or coordinate pairs. Raises
    ``TooFewVertices``, ``DuplicateVertex``, ``CollinearVertices`` (unless
    ``allow_collinear``) or ``SelfIntersecting``.
    """
    pts = [p if isinstance(p, Point) and isinstance(p.x, mpq) else pt(p[0], p[1]) for p in raw]
    n = len(pts)
    if n < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {n}")
    if len(set(pts)) != n:
        raise DuplicateVertex("polygon repeats a vertex")
    for i in range(n):
        if orient(pts[i - 1], pts[i], pts[(i + 1) % n]) == 0:
            a, v, b = pts[i - 1], pts[i], pts[(i + 1) % n]
            # a fold-back spike is never simple, collinear pass-through is a flag
            if (b[0] - v[0]) * (v[0] - a[0]) + (b[1] - v[1]) * (v[1] - a[1]) <= 0:
                raise SelfIntersecting(f"edges fold back at vertex {i}")
            if not allow_collinear:
                raise CollinearVertices(f"vertex {i} is collinear with its neighbours")
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        for j in range(i + 1, n):
            c, d = pts[j], pts[(j + 1) % n]
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_touch(a, b, c, d):
                raise SelfIntersecting(f"edges {i} and {j} intersect")
    s = signed_area2(pts)
    if s == 0:
        raise SelfIntersecting("polygon has zero area")
    if s < 0:
        pts.reverse()
    return Polygon(pts)


def is_x_monotone(poly: Polygon) -> bool:
    """True iff every vertical line meets the boundary in a connected set per chain."""
    v = poly.vertices
    n = poly.n
    imin = min(range(n), key=lambda i: (v[i][0], i))
    imax = max(range(n), key=lambda i: (v[i][0], -i))
    # walking CCW from the leftmost vertex, x must not decrease until the
    # rightmost vertex and must not increase afterwards
    i = imin
    while i != imax:
        j = (i + 1) % n
        if v[j][0] < v[i][0]:
            return False
        i = j
    while i != imin:
        j = (i + 1) % n
        if v[j][0] > v[i][0]:
            return False
        i = j
    return True


def reflex_vertices(poly: Polygon) -> list[int]:
    v = poly.vertices
    n = poly.n
    return [i for i in range(n) if orient(v[i - 1], v[i], v[(i + 1) % n]) < 0]


def point_in_polygon(poly: Polygon, p: Point) -> Location:
    """Exact crossing-number classification of ``p`` against the closed polygon."""
    x, y = p[0], p[1]
    xmin, ymin, xmax, ymax = poly.bbox
    if x < xmin or x > xmax or y < ymin or y > ymax:
        return Location.EXTERIOR
    inside = False
    for a, b in poly.edges:
        ay, by = a[1], b[1]
        if (ay > y) != (by > y):
            c = (b[0] - a[0]) * (y - ay) - (x - a[0]) * (by - ay)
            if c == 0:
                return Location.BOUNDARY
            if (c > 0) == (by > ay):
                inside = not inside
        elif ay == y == by or (ay == y and a[0] == x) or (by == y and b[0] == x):
            if on_segment(p, a, b):
                return Location.BOUNDARY
    return Location.INTERIOR if inside else Location.EXTERIOR


def in_closed_polygon(poly: Polygon, p: Point) -> bool:
    return point_in_polygon(poly, p) is not Location.EXTERIOR


def in_vertex_cone(poly: Polygon, i: int, dx, dy) -> bool:
    """True iff direction ``(dx, dy)`` leaves vertex ``i`` into the closed polygon."""
    v = poly.vertices
    n = poly.n
    p = v[i]
    u = v[i - 1]
    w = v[(i + 1) % n]
    e1x, e1y = w[0] - p[0], w[1] - p[1]
    e0x, e0y = u[0] - p[0], u[1] - p[1]
    left_of_out = e1x * dy - e1y * dx >= 0
    left_of_in = dx * e0y - dy * e0x >= 0
    turn = (p[0] - u[0]) * e1y - (p[1] - u[1]) * e1x
    if turn > 0:
        return left_of_out and left_of_in
    return left_of_out or left_of_in


def _start_inside(poly: Polygon, origin: Point, dx, dy, loc=None) -> bool:
    """Whether the ray from ``origin`` along ``(dx, dy)`` starts inside the closed polygon."""
    if loc is None:
        loc = point_in_polygon(poly, origin)
    if loc is Location.INTERIOR:
        return True
    if loc is Location.EXTERIOR:
        return False
    i = poly.index_of(origin)
    if i is not None:
        return in_vertex_cone(poly, i, dx, dy)
    for a, b in poly.edges:
        if on_segment(origin, a, b):
            return (b[0] - a[0]) * dy - (b[1] - a[1]) * dx >= 0
    return False


def ray_contacts(poly: Polygon, origin: Point, dx, dy):
    """Boundary contacts of the ray strictly after ``origin``, sorted by parameter.

    Yields tuples ``(t, kind, index, u)``: ``kind`` is ``"v"`` for a vertex
    (``index`` = vertex) or ``"x"`` for a transversal crossing of the interior
    of edge ``index`` at edge parameter ``u``.
    """
    ox, oy = origin[0], origin[1]
    out = []
    dd = dx * dx + dy * dy
    for i, (a, b) in enumerate(poly.edges):
        ax, ay = a[0] - ox, a[1] - oy
        if ax * dy - ay * dx == 0:
            t = (ax * dx + ay * dy) / dd
            if t > 0:
                out.append((t, "v", i, ZERO))
        ex, ey = b[0] - a[0], b[1] - a[1]
        den = dx * ey - dy * ex
        if den == 0:
            continue
        t = (ax * ey - ay * ex) / den
        if t <= 0:
            continue
        u = (ax * dy - ay * dx) / den
        if 0 < u < 1:
            out.append((t, "x", i, u))
    out.sort(key=lambda c: c[0])
    return out


def ray_exit(poly: Polygon, origin: Point, dx, dy, loc=None):
    """First contact after which the ray leaves the closed polygon.

    Returns ``(t, BoundaryPoint)``, or ``None`` when the ray leaves
    immediately (``origin`` on the boundary, direction pointing out).
    """
    if not _start_inside(poly, origin, dx, dy, loc):
        return None
    for t, kind, idx, u in ray_contacts(poly, origin, dx, dy):
        if kind == "x":
            a, b = poly.edges[idx]
            return t, BoundaryPoint(idx, u, Point(origin[0] + t * dx, origin[1] + t * dy))
        if not in_vertex_cone(poly, idx, dx, dy):
            return t, BoundaryPoint(idx, ZERO, poly.vertices[idx])
    raise NoHit("ray never leaves the polygon; origin is not inside")


def ray_shoot(poly: Polygon, origin: Point, direction) -> BoundaryPoint:
    """Boundary point where the ray from ``origin`` closes its visible stretch."""
    dx, dy = to_rational(direction[0]), to_rational(direction[1])
    if dx == 0 and dy == 0:
        raise ValueError("direction must be non-zero")
    hit = ray_exit(poly, origin, dx, dy)
    if hit is None:
        raise NoHit("ray leaves the polygon at its origin")
    return hit[1]


def segment_inside(poly: Polygon, s: Segment) -> bool:
    """True iff the closed segment lies in the closed polygon.

    Proper crossings with an edge are rejected outright; otherwise the segment
    is cut at every boundary touch and the midpoint of each piece is probed.
    """
    p, q = s
    if p == q:
        return in_closed_polygon(poly, p)
    xmin, ymin, xmax, ymax = poly.bbox
    if (min(p[0], q[0]) < xmin or max(p[0], q[0]) > xmax
            or min(p[1], q[1]) < ymin or max(p[1], q[1]) > ymax):
        return False
    ts = {ZERO, ONE}
    for a, b in poly.edges:
        o1 = orient(p, q, a)
        o2 = orient(p, q, b)
        if o1 * o2 > 0:
            continue
        o3 = orient(a, b, p)
        o4 = orient(a, b, q)
        if o3 * o4 > 0:
            continue
        if o1 * o2 < 0 and o3 * o4 < 0:
            return False
        if o1 == 0 and o2 == 0:
            for c in (a, b):
                t = segment_param(c, p, q)
                if 0 < t < 1:
                    ts.add(t)
            continue
        if o1 == 0:
            ts.add(segment_param(a, p, q))
        if o2 == 0:
            ts.add(segment_param(b, p, q))
        # a touch at p or q itself contributes nothing new
    if not in_closed_polygon(poly, p) or not in_closed_polygon(poly, q):
        return False
    ts = sorted(t for t in ts if 0 <= t <= 1)
    for t0, t1 in zip(ts, ts[1:]):
        if not in_closed_polygon(poly, lerp(p, q, (t0 + t1) * HALF)):
            return False
    return True


def visible(poly: Polygon, a: Point, b: Point) -> bool:
    return segment_inside(poly, Segment(a, b))


def x_extremes(poly: Polygon) -> tuple[int, int]:
    """Indices of xMin and xMax, ties broken by smallest vertex index."""
    v = poly.vertices
    n = poly.n
    imin = min(range(n), key=lambda i: (v[i][0], i))
    imax = min(range(n), key=lambda i: (-v[i][0], i))
    return imin, imax


def rational_sqrt_floor(q: mpq, bits: int = 32) -> mpq:
    """A rational lower bound on sqrt(q) accurate to about 2**-bits relative."""
    from gmpy2 import isqrt, mpz

    if q <= 0:
        return ZERO
    num = mpz(q.numerator)
    den = mpz(q.denominator)
    scale = mpz(1) << bits
    return mpq(isqrt(num * den * scale * scale), den * scale)


def maximal_chord(poly: Polygon, v: Point, beta: Point) -> Segment:
    """The segment ``v beta`` extended both ways to its first boundary exits."""
    from .errors import NotVisible

    if v == beta or not visible(poly, v, beta):
        raise NotVisible(f"{v} and {beta} do not see each other")
    dx, dy = beta[0] - v[0], beta[1] - v[1]
    fwd = ray_exit(poly, v, dx, dy)
    back = ray_exit(poly, v, -dx, -dy)
    far = fwd[1].coords if fwd else v
    near = back[1].coords if back else v
    return Segment(near, far)
