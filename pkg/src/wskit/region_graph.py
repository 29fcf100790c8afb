"""Disjointness of visibility regions and the visibility intersection graph."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import PointOutside
from .geometry import (
    Location,
    Point,
    Polygon,
    is_x_monotone,
    point_in_polygon,
    segments_touch,
)
from .monotone import MonotoneProfile, chain_labels, compute_profile
from .visibility import VisibilityRegion, visibility_region


def _pieces(v: VisibilityRegion):
    segs = list(v.region.edges)
    segs.extend(v.arms)
    return segs


def _bbox(segs):
    xs = [c[0] for s in segs for c in s]
    ys = [c[1] for s in segs for c in s]
    return min(xs), min(ys), max(xs), max(ys)


def regions_intersect_general(va: VisibilityRegion, vb: VisibilityRegion) -> bool:
    """Whether the closed sets region ∪ arms of ``va`` and ``vb`` meet."""
    sa, sb = _pieces(va), _pieces(vb)
    ax0, ay0, ax1, ay1 = _bbox(sa)
    bx0, by0, bx1, by1 = _bbox(sb)
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return False
    for a, b in sa:
        if max(a[0], b[0]) < bx0 or min(a[0], b[0]) > bx1:
            continue
        for c, d in sb:
            if segments_touch(a, b, c, d):
                return True
    # no boundary contact: each piece is wholly inside or outside the other
    for probe in [vb.region.vertices[0]] + [s[0] for s in vb.arms]:
        if point_in_polygon(va.region, probe) is not Location.EXTERIOR:
            return True
    for probe in [va.region.vertices[0]] + [s[0] for s in va.arms]:
        if point_in_polygon(vb.region, probe) is not Location.EXTERIOR:
            return True
    return False


def regions_intersect_monotone(pa: MonotoneProfile, pb: MonotoneProfile) -> bool:
    """O(1) disjointness test for two points of the same monotone polygon."""
    if pa.point[0] > pb.point[0]:
        pa, pb = pb, pa
    if pa.point[0] == pb.point[0]:
        return True
    if pb.point[0] <= pa.x_max_vis or pa.point[0] >= pb.x_min_vis:
        # one region reaches the other's vertical chord
        return True
    if pa.r_bdry is None or pb.l_bdry is None:
        # b sees xMin (or a sees xMax), so its region crosses the other's
        # vertical chord
        return True
    (a, b), (c, d) = pa.r_bdry, pb.l_bdry
    return segments_touch(a, b, c, d)


@dataclass
class Vig:
    points: list
    adjacency: list
    monotone_mode: bool

    def __len__(self):
        return len(self.points)

    def edges(self):
        n = len(self.points)
        return [(i, j) for i in range(n) for j in range(i + 1, n) if self.adjacency[i][j]]


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("WSKIT_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_map(fn, items):
    workers = thread_count()
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


class _ProfileTask:
    def __init__(self, poly, labels):
        self.poly, self.labels = poly, labels

    def __call__(self, p):
        return compute_profile(self.poly, p, self.labels)


class _RegionTask:
    def __init__(self, poly):
        self.poly = poly

    def __call__(self, p):
        return visibility_region(self.poly, p)


def build_vig(poly: Polygon, points, monotone: bool | None = None) -> Vig:
    """VIG of ``points``; uses the profile fast path on monotone polygons.

    ``monotone`` forces a mode; by default it follows ``is_x_monotone``.
    """
    pts = [Point(*q) for q in points]
    for q in pts:
        if point_in_polygon(poly, q) is Location.EXTERIOR:
            raise PointOutside(f"{q} is outside the polygon")
    if monotone is None:
        monotone = is_x_monotone(poly)
    m = len(pts)
    adj = [[i == j for j in range(m)] for i in range(m)]
    if monotone:
        profs = _parallel_map(_ProfileTask(poly, chain_labels(poly)), pts)
        test = regions_intersect_monotone
        objs = profs
    else:
        objs = _parallel_map(_RegionTask(poly), pts)
        test = regions_intersect_general
    for i in range(m):
        row = adj[i]
        oi = objs[i]
        for j in range(i + 1, m):
            if test(oi, objs[j]):
                row[j] = adj[j][i] = True
    return Vig(pts, adj, monotone)
