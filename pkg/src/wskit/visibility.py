"""Visibility regions of points in a simple polygon.

The region is computed by a rotational sweep around the source. Vertex
directions split the plane into open wedges; inside a wedge the nearest
boundary edge does not change, so the region boundary there is a piece of
one edge. Along each vertex direction the ray is walked exactly to find how
far the source really sees, which is where windows and polygonal arms come
from.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import NamedTuple

from gmpy2 import mpq

from .errors import PointOutside
from .geometry import (
    ONE,
    ZERO,
    Location,
    Point,
    Polygon,
    Segment,
    _start_inside,
    in_vertex_cone,
    orient,
    point_in_polygon,
    segment_param,
    sq_dist,
)


class EdgeLabel(NamedTuple):
    kind: str  # "primary" or "window"
    base: Point | None = None
    end: Point | None = None


PRIMARY = EdgeLabel("primary")


@dataclass(frozen=True)
class VisibilityRegion:
    """Vis(source): a star-shaped polygon plus degenerate arms.

    ``min_pr`` is the squared length of the shortest primary edge.
    """

    source: Point
    region: Polygon
    arms: tuple[Segment, ...]
    edge_labels: tuple[EdgeLabel, ...] = field(default=())
    min_pr: mpq | None = None

    def region_edges(self):
        return self.region.edges

    def all_points(self):
        """Region vertices followed by arm endpoints."""
        out = list(self.region.vertices)
        for a, b in self.arms:
            out.extend((a, b))
        return out

    def x_range(self) -> tuple[mpq, mpq]:
        xs = [p[0] for p in self.all_points()]
        return min(xs), max(xs)


def _half(dx, dy) -> int:
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _cmp_dir(d1, d2) -> int:
    h1, h2 = _half(*d1), _half(*d2)
    if h1 != h2:
        return h1 - h2
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def angular_directions(origin: Point, points):
    """Distinct directions from ``origin`` to ``points`` in CCW order from +x."""
    dirs = [(q[0] - origin[0], q[1] - origin[1]) for q in points if q != origin]
    dirs.sort(key=cmp_to_key(_cmp_dir))
    out = []
    for d in dirs:
        if not out or _cmp_dir(out[-1], d) != 0:
            out.append(d)
    return out


def wedge_probe(d1, d2):
    """A direction strictly inside the CCW wedge from ``d1`` to ``d2``."""
    if d1[0] * d2[1] - d1[1] * d2[0] > 0:
        return (d1[0] + d2[0], d1[1] + d2[1])
    return (-d1[1], d1[0])


def _ray_line_param(p: Point, dx, dy, a: Point, b: Point):
    """Parameter t with p + t*d on the line ab, or None if parallel."""
    ex, ey = b[0] - a[0], b[1] - a[1]
    den = dx * ey - dy * ex
    if den == 0:
        return None
    return ((a[0] - p[0]) * ey - (a[1] - p[1]) * ex) / den


def canonical_cycle(points) -> list[Point]:
    """Drop repeated and straight-through vertices from a closed polyline."""
    pts = []
    for q in points:
        if not pts or pts[-1] != q:
            pts.append(q)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) > 2:
        changed = False
        i = 0
        while i < len(pts) and len(pts) > 2:
            a, v, b = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if a == v or (orient(a, v, b) == 0
                          and (b[0] - v[0]) * (v[0] - a[0]) + (b[1] - v[1]) * (v[1] - a[1]) > 0):
                del pts[i]
                changed = True
            else:
                i += 1
    return pts


def _edge_span(p: Point, a: Point, b: Point, index_of_dir):
    """Wedge index range (start, end) an edge covers as seen from ``p``."""
    c = (a[0] - p[0]) * (b[1] - p[1]) - (a[1] - p[1]) * (b[0] - p[0])
    if c == 0:
        return None
    ka = index_of_dir(a)
    kb = index_of_dir(b)
    return (ka, kb) if c > 0 else (kb, ka)


def visibility_region(poly: Polygon, p: Point) -> VisibilityRegion:
    """Exact visibility region of ``p`` (interior or boundary point)."""
    loc = point_in_polygon(poly, p)
    if loc is Location.EXTERIOR:
        raise PointOutside(f"{p} is outside the polygon")
    verts = poly.vertices
    dirs = angular_directions(p, verts)
    m = len(dirs)
    key = cmp_to_key(_cmp_dir)
    dir_keys = [key(d) for d in dirs]

    def index_of_dir(q):
        d = key((q[0] - p[0], q[1] - p[1]))
        lo, hi = 0, m
        while lo < hi:
            mid = (lo + hi) // 2
            if dir_keys[mid] < d:
                lo = mid + 1
            else:
                hi = mid
        return lo

    # vertices on each direction, nearest first
    on_ray: list[list[tuple[mpq, int]]] = [[] for _ in range(m)]
    for i, q in enumerate(verts):
        if q == p:
            continue
        k = index_of_dir(q)
        dx, dy = dirs[k]
        on_ray[k].append(((q[0] - p[0]) * dx + (q[1] - p[1]) * dy, i))
    for lst in on_ray:
        lst.sort()

    # sweep: edges enter the active set at their start direction and leave at their end
    starts: list[list[int]] = [[] for _ in range(m)]
    ends: list[list[int]] = [[] for _ in range(m)]
    active: set[int] = set()
    edges = poly.edges
    for ei, (a, b) in enumerate(edges):
        if a == p or b == p:
            continue
        span = _edge_span(p, a, b, index_of_dir)
        if span is None:
            continue
        ks, ke = span
        starts[ks].append(ei)
        ends[ke].append(ei)
        if ks > ke:
            active.add(ei)
    # wedge k lies between directions k and k+1; wrapping edges start active
    wedge_edges: list[list[int]] = []
    cur = set(active)
    for k in range(m):
        for ei in ends[k]:
            cur.discard(ei)
        for ei in starts[k]:
            cur.add(ei)
        wedge_edges.append(list(cur))

    lim_plus: list[Point] = []
    lim_minus: list[Point] = [p] * m
    for k in range(m):
        d1 = dirs[k]
        d2 = dirs[(k + 1) % m]
        rx, ry = wedge_probe(d1, d2)
        if loc is Location.BOUNDARY and not _start_inside(poly, p, rx, ry, loc):
            lim_plus.append(p)
            lim_minus[(k + 1) % m] = p
            continue
        best = None
        best_t = None
        for ei in wedge_edges[k]:
            a, b = edges[ei]
            t = _ray_line_param(p, rx, ry, a, b)
            if t is not None and t > 0 and (best_t is None or t < best_t):
                best_t, best = t, ei
        a, b = edges[best]
        t1 = _ray_line_param(p, d1[0], d1[1], a, b)
        t2 = _ray_line_param(p, d2[0], d2[1], a, b)
        lim_plus.append(Point(p[0] + t1 * d1[0], p[1] + t1 * d1[1]))
        lim_minus[(k + 1) % m] = Point(p[0] + t2 * d2[0], p[1] + t2 * d2[1])

    boundary: list[Point] = []
    arms: list[Segment] = []
    for k in range(m):
        dx, dy = dirs[k]
        lm, lp = lim_minus[k], lim_plus[k]
        boundary.append(lm)
        boundary.append(lp)
        crossing = set(wedge_edges[k - 1]).intersection(wedge_edges[k])
        far = _ray_extent(poly, p, loc, dx, dy, on_ray[k], crossing)
        tm = (lm[0] - p[0]) * dx + (lm[1] - p[1]) * dy
        tp = (lp[0] - p[0]) * dx + (lp[1] - p[1]) * dy
        base = lm if tm >= tp else lp
        if far is not None:
            tf = (far[0] - p[0]) * dx + (far[1] - p[1]) * dy
            if tf > max(tm, tp):
                arms.append(Segment(base, far))

    region = Polygon(canonical_cycle(boundary))
    labels, min_pr = classify_edges_raw(poly, p, region)
    return VisibilityRegion(p, region, tuple(arms), tuple(labels), min_pr)


def _ray_extent(poly: Polygon, p: Point, loc, dx, dy, vertices_on_ray, crossing_edges):
    """Farthest point visible from ``p`` along an event direction."""
    if not _start_inside(poly, p, dx, dy, loc):
        return None
    contacts = [(t, "v", i) for t, i in vertices_on_ray]
    edges = poly.edges
    dd = dx * dx + dy * dy
    for ei in crossing_edges:
        a, b = edges[ei]
        t = _ray_line_param(p, dx, dy, a, b)
        if t is not None and t > 0:
            contacts.append((t * dd, "x", ei))
    contacts.sort(key=lambda c: c[0])
    for t, kind, idx in contacts:
        if kind == "x":
            s = t / dd
            return Point(p[0] + s * dx, p[1] + s * dy)
        if not in_vertex_cone(poly, idx, dx, dy):
            return poly.vertices[idx]
    return None


def on_boundary_segment(poly: Polygon, a: Point, b: Point) -> bool:
    """True iff the segment ``ab`` is covered by polygon edges."""
    if a == b:
        return False
    pieces = []
    for c, d in poly.edges:
        if orient(a, b, c) != 0 or orient(a, b, d) != 0:
            continue
        tc = segment_param(c, a, b)
        td = segment_param(d, a, b)
        lo, hi = (tc, td) if tc <= td else (td, tc)
        lo = max(lo, ZERO)
        hi = min(hi, ONE)
        if lo < hi:
            pieces.append((lo, hi))
    pieces.sort()
    reach = ZERO
    for lo, hi in pieces:
        if lo > reach:
            return False
        reach = max(reach, hi)
    return reach >= ONE


def classify_edges_raw(poly: Polygon, source: Point, region: Polygon):
    labels = []
    min_pr = None
    for a, b in region.edges:
        if on_boundary_segment(poly, a, b):
            labels.append(PRIMARY)
            L = sq_dist(a, b)
            if min_pr is None or L < min_pr:
                min_pr = L
        elif sq_dist(source, a) <= sq_dist(source, b):
            labels.append(EdgeLabel("window", a, b))
        else:
            labels.append(EdgeLabel("window", b, a))
    return labels, min_pr


def classify_edges(v: VisibilityRegion, poly: Polygon):
    """Label each region edge primary or window; return ``(labels, min_pr)``.

    ``min_pr`` is a squared length.
    """
    labels, min_pr = classify_edges_raw(poly, v.source, v.region)
    return tuple(labels), min_pr
