"""Outerstring model of a visibility intersection graph.

Each point w gets a string: the boundary of Vis(w) with a short gap cut
into one primary edge, tethered from one gap end to the boundary of a
slightly inflated polygon, with every arm folded into the curve near its
root. Two strings meet exactly when the two visibility regions meet. The
model is a check on the VIG, not part of any solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import CloneCollision, DegenerateRegion, GeometryError, PointOutside
from .geometry import (
    HALF,
    Location,
    Point,
    Polygon,
    line_intersection,
    on_segment,
    orient,
    point_in_polygon,
    rational_sqrt_floor,
    segments_touch,
    sq_dist,
    validate_polygon,
)
from .visibility import PRIMARY, VisibilityRegion, visibility_region

MAX_HALVINGS = 60


@dataclass(frozen=True)
class GapRecord:
    """The cut made in Vis(w): region edge ``edge`` loses the open segment start-end."""

    edge: int
    start: Point  # t_i, the end that gets tethered
    end: Point


@dataclass
class StringModel:
    polygon: Polygon
    inflated: Polygon
    strings: list  # one polyline (list of points) per input point, origin first
    epsilon: mpq
    delta: mpq
    gap_records: list
    regions: list = field(default_factory=list, repr=False)

    @property
    def origins(self) -> list[Point]:
        return [s[0] for s in self.strings]

    def __len__(self):
        return len(self.strings)


# exact squared distances

def _pt_seg_sq(p, a, b):
    dx, dy = b[0] - a[0], b[1] - a[1]
    L = dx * dx + dy * dy
    if L == 0:
        return sq_dist(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / L
    if t <= 0:
        return sq_dist(p, a)
    if t >= 1:
        return sq_dist(p, b)
    return sq_dist(p, Point(a[0] + t * dx, a[1] + t * dy))


def _seg_seg_sq(a, b, c, d):
    if segments_touch(a, b, c, d):
        return mpq(0)
    return min(_pt_seg_sq(a, c, d), _pt_seg_sq(b, c, d), _pt_seg_sq(c, a, b), _pt_seg_sq(d, a, b))


def _segs(line):
    return list(zip(line, line[1:]))


def _pieces_sq(s1, s2):
    return min(_seg_seg_sq(a, b, c, d) for a, b in s1 for c, d in s2)


def _pt_pieces_sq(p, segs):
    return min(_pt_seg_sq(p, a, b) for a, b in segs)


def _touch(s1, s2) -> bool:
    return any(segments_touch(a, b, c, d) for a, b in s1 for c, d in s2)


def _length_lower(a, b):
    return rational_sqrt_floor(sq_dist(a, b))


# step 1: gaps

def _primary_edge(vr: VisibilityRegion) -> int:
    if vr.min_pr is None or vr.min_pr == 0:
        raise DegenerateRegion(f"Vis({vr.source}) has no primary edge of positive length")
    for k, lab in enumerate(vr.edge_labels):
        if lab == PRIMARY:
            return k
    raise DegenerateRegion(f"Vis({vr.source}) has no primary edge")


def _place_gaps(regions, eps) -> list[GapRecord]:
    """Gap i starts (i + 1)·eps after its edge start and is eps/2 long.

    Lengths use a rational lower bound on the edge length, so every offset
    is at least the nominal one.
    """
    out = []
    for i, vr in enumerate(regions):
        k = _primary_edge(vr)
        u, v = vr.region.edges[k]
        L = _length_lower(u, v)
        t0 = (i + 1) * eps / L
        t1 = ((i + 1) * eps + eps * HALF) / L
        if t1 >= 1:
            raise CloneCollision(f"gap {i} does not fit on its primary edge")
        out.append(GapRecord(k, Point(u[0] + (v[0] - u[0]) * t0, u[1] + (v[1] - u[1]) * t0),
                             Point(u[0] + (v[0] - u[0]) * t1, u[1] + (v[1] - u[1]) * t1)))
    return out


def _gaps_clean(regions, gaps) -> bool:
    """No foreign region vertex inside an open gap, and closed gaps pairwise disjoint."""
    for i, g in enumerate(gaps):
        for j, vr in enumerate(regions):
            if j == i:
                continue
            for q in vr.all_points():
                if q != g.start and q != g.end and on_segment(q, g.start, g.end):
                    return False
            if j > i and segments_touch(g.start, g.end, gaps[j].start, gaps[j].end):
                return False
    return True


def choose_epsilon(poly: Polygon, regions) -> mpq:
    """Gap scale: half of (1/m)·min_pr, halved until the gaps are clean.

    Clean means no vertex of another region lies strictly inside a gap and
    no two gaps touch, which is what keeping eps below the origin-to-vertex
    distance buys.
    """
    m = len(regions)
    if m < 1:
        raise ValueError("need at least one region")
    for vr in regions:
        _primary_edge(vr)
    min_pr = min(rational_sqrt_floor(vr.min_pr) for vr in regions)
    if min_pr == 0:
        raise DegenerateRegion("a primary edge is too short to bound")
    eps = min_pr / m * HALF
    for _ in range(MAX_HALVINGS):
        try:
            if _gaps_clean(regions, _place_gaps(regions, eps)):
                return eps
        except CloneCollision:
            pass
        eps *= HALF
    raise CloneCollision("could not separate the gaps")


# step 2: inflation and tethers

def _inflate(poly: Polygon, delta):
    """Offset every edge line outward by about ``delta``; returns (polygon, shifts).

    The shift of an edge is its outward normal over a rational lower bound
    of its length, so the offset distance is at least ``delta``.
    """
    shifts = []
    lines = []
    for a, b in poly.edges:
        dx, dy = b[0] - a[0], b[1] - a[1]
        L = _length_lower(a, b)
        sx, sy = dy * delta / L, -dx * delta / L  # outward for a ccw polygon
        shifts.append((sx, sy))
        lines.append((Point(a[0] + sx, a[1] + sy), Point(b[0] + sx, b[1] + sy)))
    n = poly.n
    verts = [line_intersection(*lines[k - 1], *lines[k]) for k in range(n)]
    return validate_polygon(verts), shifts


def _edge_of(poly: Polygon, p: Point) -> int:
    for k, (a, b) in enumerate(poly.edges):
        if on_segment(p, a, b):
            if p == a or p == b:
                raise CloneCollision(f"origin {p} is a polygon vertex")
            return k
    raise GeometryError(f"origin {p} is not on the polygon boundary")


def _tethers_ok(poly: Polygon, inf: Polygon, tethers) -> bool:
    for k, (t, s, e) in enumerate(tethers):
        for i, (a, b) in enumerate(poly.edges):
            if i != e and segments_touch(t, s, a, b):
                return False
        d = sq_dist(t, s)
        for i, (a, b) in enumerate(inf.edges):
            if i == e:
                if not on_segment(s, a, b):
                    return False
            elif segments_touch(t, s, a, b) or _pt_seg_sq(t, a, b) <= d:
                return False
        for t2, s2, _ in tethers[k + 1:]:
            if segments_touch(t, s, t2, s2):
                return False
    return True


def _inflation(poly: Polygon, origins, delta):
    for _ in range(MAX_HALVINGS):
        try:
            inf, shifts = _inflate(poly, delta)
        except GeometryError:
            inf = None
        if inf is not None and point_in_polygon(inf, poly.vertices[0]) is Location.INTERIOR \
                and not _touch(poly.edges, inf.edges):
            tethers = []
            for t in origins:
                e = _edge_of(poly, t)
                sx, sy = shifts[e]
                tethers.append((t, Point(t[0] + sx, t[1] + sy), e))
            if _tethers_ok(poly, inf, tethers):
                return inf, delta, [s for _, s, _ in tethers]
        delta *= HALF
    raise GeometryError("inflation did not converge")


# step 3: strings

def _gamma(vr: VisibilityRegion, gap: GapRecord) -> list[Point]:
    """Region boundary from the tethered gap end around to the other gap end."""
    ring = list(vr.region.vertices)
    n = len(ring)
    k = gap.edge
    # walk backwards from the edge start so the gap is crossed last
    walk = [ring[(k - j) % n] for j in range(n)]
    return [gap.start] + walk + [gap.end]


def _fold_side(gamma, idx, b):
    """Which neighbour of gamma[idx] the folded arm returns to (-1 or +1)."""
    a = gamma[idx]
    ok = []
    for side in (-1, 1):
        g = gamma[idx + side]
        if orient(a, b, g) != 0:
            ok.append(side)
    if len(ok) == 1:
        return ok[0]
    # both neighbours off the arm line: avoid the one whose wedge with the
    # arm holds the other edge
    p, q = gamma[idx - 1], gamma[idx + 1]
    if _in_wedge(a, b, q, p):
        return -1
    return 1


def _in_wedge(a, b, c, x) -> bool:
    """x strictly inside the convex wedge at a spanned by rays ab and ac."""
    o = orient(a, b, c)
    return o != 0 and orient(a, b, x) == o and orient(a, x, c) == o


def _fold_arms(likes, arms_per, outer):
    """Replace each arm branch by an out-and-back detour; returns polylines.

    ``outer`` is the inflated boundary; detours stay closer to their arm
    than half of every clearance, the boundary included.
    """
    roots = [(i, a) for i, arms in enumerate(arms_per) for a, _ in arms]
    segs = [_segs(s) + list(arms_per[i]) for i, s in enumerate(likes)]
    m = len(likes)
    disjoint = {}
    for i in range(m):
        for j in range(i + 1, m):
            if not _touch(segs[i], segs[j]):
                disjoint[i, j] = disjoint[j, i] = _pieces_sq(segs[i], segs[j])
    out = []
    for i, line in enumerate(likes):
        line = list(line)
        for a, b in arms_per[i]:
            idx = line.index(a)
            assert 0 < idx < len(line) - 1, "arm root must be inside the curve"
            # clearance: other strings, other roots, and own far pieces
            cl = [d for (x, y), d in disjoint.items() if x == i]
            cl.append(_pieces_sq([(a, b)], outer))
            for j in range(m):
                if j != i and not any(on_segment(a, p, q) for p, q in segs[j]):
                    cl.append(_pt_pieces_sq(a, segs[j]))
            cl.extend(sq_dist(a, r) for _, r in roots if r != a)
            own = [(p, q) for p, q in _segs(line) if a not in (p, q)]
            own.extend((p, q) for p, q in arms_per[i] if p != a)
            if own:
                cl.append(_pieces_sq([(a, b)], own))
            cl = [c for c in cl if c > 0]
            side = _fold_side(line, idx, b)
            g = line[idx + side]
            glen = sq_dist(a, g)
            lam = HALF
            if cl:
                lim = min(cl) / 4
                while lam * lam * glen >= lim:
                    lam *= HALF
            c = Point(a[0] + (g[0] - a[0]) * lam, a[1] + (g[1] - a[1]) * lam)
            if side == 1:
                line[idx:idx + 1] = [a, b, c]
            else:
                line[idx:idx + 1] = [c, b, a]
        out.append(line)
    return out


def build_string_model(poly: Polygon, points) -> StringModel:
    """Strings for ``points`` whose intersection graph equals the VIG."""
    pts = [Point(*p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    for p in pts:
        if point_in_polygon(poly, p) is Location.EXTERIOR:
            raise PointOutside(f"{p} is outside the polygon")
    regions = [visibility_region(poly, p) for p in pts]
    eps = choose_epsilon(poly, regions)
    gaps = _place_gaps(regions, eps)
    for g in gaps:
        if g.start in poly.vertices:
            raise CloneCollision(f"origin {g.start} is a polygon vertex")
    inf, delta, feet = _inflation(poly, [g.start for g in gaps], eps)
    likes = [[s] + _gamma(vr, g) for s, vr, g in zip(feet, regions, gaps)]
    for vr, line in zip(regions, likes):
        for a, _ in vr.arms:
            if a not in line:
                raise DegenerateRegion(f"arm root {a} is not a region vertex")
    strings = _fold_arms(likes, [vr.arms for vr in regions], inf.edges)
    return StringModel(poly, inf, strings, eps, delta, gaps, regions)


def strings_intersect(model: StringModel, i: int, j: int) -> bool:
    """Exact test whether strings i and j share a point."""
    n = len(model.strings)
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"need two distinct string indices below {n}, got {i}, {j}")
    return _touch(_segs(model.strings[i]), _segs(model.strings[j]))


def boundary_contacts(model: StringModel, i: int) -> int:
    """How many string segments of string i touch the inflated boundary.

    An outerstring touches only at its origin, which sits on the first
    segment, so the answer should be 1 with the contact at the origin.
    """
    s = model.strings[i]
    hits = 0
    for k, (a, b) in enumerate(_segs(s)):
        for p, q in model.inflated.edges:
            if segments_touch(a, b, p, q):
                if k == 0 and on_segment(s[0], p, q) and not segments_touch(_mid(a, b), b, p, q):
                    hits += 1
                    break
                return -1
    return hits


def _mid(a, b):
    return Point((a[0] + b[0]) * HALF, (a[1] + b[1]) * HALF)


def self_crossing(line) -> bool:
    """Whether a polyline meets itself away from shared joints."""
    segs = _segs(line)
    for x in range(len(segs)):
        for y in range(x + 1, len(segs)):
            a, b = segs[x]
            c, d = segs[y]
            if y == x + 1:
                # consecutive pieces may only share the joint
                if orient(a, b, d) == 0 and (d == a or on_segment(d, a, b) or on_segment(a, c, d)):
                    return True
                continue
            if segments_touch(a, b, c, d):
                return True
    return False
