"""Brute-force references used by the tests and to mint golden values.

These deliberately avoid the production algorithms: they only lean on the
basic predicates of ``geometry`` (orientation, point location,
``segment_inside``) and are quadratic or worse.
"""
from __future__ import annotations

from functools import cmp_to_key

from gmpy2 import mpq

from .errors import PointOutside, TooLarge
from .geometry import (
    Location,
    Point,
    Polygon,
    Segment,
    lerp,
    orient,
    point_in_polygon,
    segment_inside,
    sq_dist,
)


def _dir_cmp(a, b):
    ha = 0 if a[1] > 0 or (a[1] == 0 and a[0] > 0) else 1
    hb = 0 if b[1] > 0 or (b[1] == 0 and b[0] > 0) else 1
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return (c < 0) - (c > 0)


def _ray_hits(poly: Polygon, p: Point, d):
    """All boundary points on the open ray from p along d, as (t, point)."""
    out = []
    for a, b in poly.edges:
        ex, ey = b[0] - a[0], b[1] - a[1]
        ax, ay = a[0] - p[0], a[1] - p[1]
        den = d[0] * ey - d[1] * ex
        if den == 0:
            if ax * d[1] - ay * d[0] == 0:
                for c in (a, b):
                    t = ((c[0] - p[0]) * d[0] + (c[1] - p[1]) * d[1])
                    if t > 0:
                        out.append((t / (d[0] ** 2 + d[1] ** 2), c))
            continue
        t = (ax * ey - ay * ex) / den
        u = (ax * d[1] - ay * d[0]) / den
        if t > 0 and 0 <= u <= 1:
            out.append((t, Point(p[0] + t * d[0], p[1] + t * d[1])))
    return out


def _line_hit(p: Point, d, a: Point, b: Point) -> Point:
    ex, ey = b[0] - a[0], b[1] - a[1]
    t = ((a[0] - p[0]) * ey - (a[1] - p[1]) * ex) / (d[0] * ey - d[1] * ex)
    return Point(p[0] + t * d[0], p[1] + t * d[1])


def _clean_cycle(pts):
    out = []
    for q in pts:
        if not out or out[-1] != q:
            out.append(q)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    again = True
    while again and len(out) > 2:
        again = False
        for i in range(len(out)):
            a, v, b = out[i - 1], out[i], out[(i + 1) % len(out)]
            if orient(a, v, b) == 0 and (v[0] - a[0]) * (b[0] - v[0]) + (v[1] - a[1]) * (b[1] - v[1]) > 0:
                del out[i]
                again = True
                break
    return out


def naive_visibility(poly: Polygon, p: Point):
    """Vis(p) by brute force; returns a ``VisibilityRegion``.

    Each vertex direction is resolved by testing every boundary contact on
    the ray with ``segment_inside``; each wedge between directions is closed
    by the nearest edge hit along a probe ray.
    """
    from .visibility import VisibilityRegion, classify_edges_raw

    if point_in_polygon(poly, p) is Location.EXTERIOR:
        raise PointOutside(f"{p} is outside the polygon")
    dirs = sorted({(v[0] - p[0], v[1] - p[1]) for v in poly.vertices if v != p},
                  key=cmp_to_key(_dir_cmp))
    uniq = []
    for d in dirs:
        if not uniq or _dir_cmp(uniq[-1], d) != 0:
            uniq.append(d)
    dirs = uniq
    m = len(dirs)

    reach = []
    for d in dirs:
        best = None
        for t, c in _ray_hits(poly, p, d):
            if (best is None or t > best[0]) and segment_inside(poly, Segment(p, c)):
                best = (t, c)
        reach.append(best)

    lplus = [p] * m
    lminus = [p] * m
    for k in range(m):
        d1, d2 = dirs[k], dirs[(k + 1) % m]
        if d1[0] * d2[1] - d1[1] * d2[0] > 0:
            probe = (d1[0] + d2[0], d1[1] + d2[1])
        else:
            probe = (-d1[1], d1[0])
        hits = []
        for a, b in poly.edges:
            ex, ey = b[0] - a[0], b[1] - a[1]
            den = probe[0] * ey - probe[1] * ex
            if den == 0:
                continue
            ax, ay = a[0] - p[0], a[1] - p[1]
            t = (ax * ey - ay * ex) / den
            u = (ax * probe[1] - ay * probe[0]) / den
            if t > 0 and 0 <= u <= 1:
                hits.append((t, a, b))
        if not hits:
            continue
        t, a, b = min(hits, key=lambda h: h[0])
        hit = Point(p[0] + t * probe[0], p[1] + t * probe[1])
        if not segment_inside(poly, Segment(p, lerp(p, hit, mpq(1, 2)))):
            continue  # the wedge points out of the polygon
        lplus[k] = _line_hit(p, d1, a, b)
        lminus[(k + 1) % m] = _line_hit(p, d2, a, b)

    ring = []
    arms = []
    for k in range(m):
        ring.extend((lminus[k], lplus[k]))
        if reach[k] is None:
            continue
        far = reach[k][1]
        base = max((lminus[k], lplus[k]), key=lambda q: sq_dist(p, q))
        if sq_dist(p, far) > sq_dist(p, base):
            arms.append(Segment(base, far))
    region = Polygon(_clean_cycle(ring))
    labels, min_pr = classify_edges_raw(poly, p, region)
    return VisibilityRegion(p, region, tuple(arms), tuple(labels), min_pr)


def same_cycle(a, b) -> bool:
    """Vertex lists equal up to rotation."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return b[i:] + b[:i] == a


def same_region(v1, v2) -> bool:
    return (v1.source == v2.source and same_cycle(v1.region.vertices, v2.region.vertices)
            and set(v1.arms) == set(v2.arms))


def exhaustive_mis(vig) -> int:
    """Maximum independent set size by scanning all subsets (|F| <= 22)."""
    n = len(vig.points)
    if n > 22:
        raise TooLarge(f"exhaustive MIS is capped at 22 points, got {n}")
    adj = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and vig.adjacency[i][j]:
                adj[i] |= 1 << j
    best = 0

    def grow(cand: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand &= ~low
            grow(cand & ~adj[i], size + 1)
            if size + bin(cand).count("1") <= best:
                return

    grow((1 << n) - 1, 0)
    return best


def geodesic_oracle(poly: Polygon, a: Point, b: Point) -> list[Point]:
    """Shortest path by Dijkstra over the visibility graph of a, b and vertices.

    Lengths use high-precision floats; only the vertex sequence is returned.
    """
    import heapq

    from gmpy2 import context, get_context, sqrt

    nodes = [a] + [v for v in poly.vertices if v != a and v != b] + [b]
    if a == b:
        return [a]
    dist = {0: 0}
    prev = {}
    heap = [(0, 0)]
    done = set()
    last = len(nodes) - 1
    while heap:
        d, i = heapq.heappop(heap)
        if i in done:
            continue
        done.add(i)
        if i == last:
            break
        for j in range(len(nodes)):
            if j in done or not segment_inside(poly, Segment(nodes[i], nodes[j])):
                continue
            with context(get_context(), precision=200):
                nd = d + sqrt(sq_dist(nodes[i], nodes[j]))
            if j not in dist or nd < dist[j]:
                dist[j] = nd
                prev[j] = i
                heapq.heappush(heap, (nd, j))
    out = [nodes[last]]
    i = last
    while i != 0:
        i = prev[i]
        out.append(nodes[i])
    out.reverse()
    # drop pass-through vertices where the path does not actually bend
    clean = [out[0]]
    for k in range(1, len(out) - 1):
        if orient(clean[-1], out[k], out[k + 1]) != 0:
            clean.append(out[k])
    clean.append(out[-1])
    return clean


def _scan_intervals(region: Polygon, y):
    """Closed x-intervals of the horizontal line at ``y`` inside ``region``."""
    xs = []
    out = []
    for a, b in region.edges:
        if a[1] == b[1]:
            if a[1] == y:
                out.append((min(a[0], b[0]), max(a[0], b[0])))
            continue
        lo, hi = (a, b) if a[1] < b[1] else (b, a)
        if lo[1] <= y < hi[1]:
            xs.append(lo[0] + (hi[0] - lo[0]) * (y - lo[1]) / (hi[1] - lo[1]))
    xs.sort()
    out.extend(zip(xs[0::2], xs[1::2]))
    return out


def _seen_on_row(vr, y):
    ivs = _scan_intervals(vr.region, y)
    for a, b in vr.arms:
        if a[1] == b[1] == y:
            ivs.append((min(a[0], b[0]), max(a[0], b[0])))
        elif min(a[1], b[1]) <= y <= max(a[1], b[1]) and a[1] != b[1]:
            x = a[0] + (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1])
            ivs.append((x, x))
    return ivs


def sample_intersection(poly: Polygon, a: Point, b: Point, density: int = 100) -> bool:
    """Whether some grid sample of the polygon is seen by both a and b.

    The grid has ``density`` rows and columns at cell centres of the
    bounding box. Rows are resolved exactly by scanline intervals of the
    two brute-force regions. A True answer is a certificate; False says
    nothing.
    """
    if density < 100:
        raise ValueError(f"density must be >= 100, got {density}")
    va, vb = naive_visibility(poly, Point(*a)), naive_visibility(poly, Point(*b))
    x0, y0, x1, y1 = poly.bbox
    w, h = x1 - x0, y1 - y0
    for row in range(density):
        y = y0 + h * mpq(2 * row + 1, 2 * density)
        ia, ib = _seen_on_row(va, y), _seen_on_row(vb, y)
        for lo1, hi1 in ia:
            for lo2, hi2 in ib:
                lo, hi = max(lo1, lo2), min(hi1, hi2)
                if lo > hi:
                    continue
                # smallest column centre >= lo
                c = (2 * density * (lo - x0) / w - 1) / 2
                col = max(0, -((-c.numerator) // c.denominator))
                if col < density and x0 + w * mpq(2 * col + 1, 2 * density) <= hi:
                    return True
    return False


def dense_ws_lower_bound(poly: Polygon, density: int, solution: bool = False):
    """A certified lower bound on ws(P) for a monotone polygon.

    Candidates are ``density`` evenly spaced points per edge (vertices
    included) plus R_mid. The chosen set is re-checked pairwise with the
    general region test, so the bound holds regardless of the DisWS path.
    """
    from .discretize import r_mid
    from .errors import NotMonotone
    from .geometry import is_x_monotone
    from .witness import disws_monotone

    if not is_x_monotone(poly):
        raise NotMonotone("polygon is not x-monotone")
    pts = []
    for a, b in poly.edges:
        pts.extend(lerp(a, b, mpq(k, density)) for k in range(density))
    pts.extend(r_mid(poly))
    sol = disws_monotone(poly, pts)
    return sol if solution else sol.size


def comb_generator(g: int, seed: int = 0) -> Polygon:
    """Monotone comb with 2g downward notches and witness number g + 1.

    The notch tips hang from the top edge at x = 4, 8, ..., 8g and leave a
    corridor along the bottom. The witnesses of ``comb_witnesses`` sit in
    every other pocket; their regions only reach past the neighbouring
    tips, so they are pairwise disjoint. With r = 2g reflex tips no
    witness set is larger than 1 + r/2, so the certificate is optimal.
    ``seed`` jitters tip heights and notch widths; a jitter that breaks the
    certificate is discarded.
    """
    import random

    from .geometry import validate_polygon

    if g < 1:
        raise ValueError(f"g must be >= 1, got {g}")
    rng = random.Random(seed)
    for attempt in range(20):
        jitter = seed != 0 and attempt < 19
        top = []
        for j in range(2 * g):
            x = 4 + 4 * j
            h = rng.choice([mpq(1, 2), mpq(2, 5), mpq(1, 3)]) if jitter else mpq(1, 2)
            lw = rng.choice([mpq(3, 4), mpq(1), mpq(5, 4)]) if jitter else mpq(1)
            rw = rng.choice([mpq(3, 4), mpq(1), mpq(5, 4)]) if jitter else mpq(1)
            top.append([(x - lw, 3), (x, h), (x + rw, 3)])
        w = 8 * g + 4
        cyc = [(0, 0), (w, 0), (w, 3)]
        for trio in reversed(top):
            cyc.extend(reversed(trio))
        cyc.append((0, 3))
        poly = validate_polygon(cyc)
        if not jitter or _certified(poly, comb_witnesses(g)):
            return poly
    raise AssertionError("unreachable")


def comb_witnesses(g: int) -> list[Point]:
    """The g + 1 pocket witnesses of ``comb_generator(g, seed)``."""
    out = [Point(mpq(1), mpq(5, 2))]
    out.extend(Point(mpq(8 * i + 2), mpq(5, 2)) for i in range(1, g))
    out.append(Point(mpq(8 * g + 3), mpq(5, 2)))
    return out


def _certified(poly: Polygon, pts) -> bool:
    from .region_graph import regions_intersect_general
    from .visibility import visibility_region

    regs = [visibility_region(poly, p) for p in pts]
    return not any(regions_intersect_general(regs[i], regs[j])
                   for i in range(len(regs)) for j in range(i + 1, len(regs)))
