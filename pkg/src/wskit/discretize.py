"""Candidate point sets for the witness set solvers.

Boundary candidates are keyed canonically by ``(edge_index, t)`` with
``0 <= t < 1``, so a vertex is always ``(i, 0)``. Exact rationals make
deduplication by equality sound.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import KOutOfRange, NotMonotone
from .geometry import (
    HALF,
    ZERO,
    BoundaryPoint,
    Point,
    Polygon,
    is_x_monotone,
    lerp,
    maximal_chord,  # noqa: F401  re-exported
    midpoint,
    ray_exit,
    reflex_vertices,
    visible,
)

VERTEX = "vertex"
RMID = "rmid"
HPOINT = "h"


def chord_tag(i: int) -> str:
    return f"chord:{i}"


def midpoint_tag(i: int) -> str:
    return f"midpoint:{i}"


@dataclass
class CandidateSet:
    """Boundary candidates per edge plus interior R_mid points.

    ``sizes`` holds |Q_0|, |Q_1|, ... for the iterations that built the set.
    """

    polygon: Polygon
    boundary: dict = field(default_factory=dict)  # (edge, t) -> (Point, provenance)
    interior_points: list = field(default_factory=list)
    interior_provenance: dict = field(default_factory=dict)
    sizes: list = field(default_factory=list)
    frontier: list | None = field(default=None, repr=False)

    def add_boundary(self, bp: BoundaryPoint, tag: str) -> bool:
        key = (bp.edge_index, bp.t)
        if key in self.boundary:
            return False
        self.boundary[key] = (bp.coords, tag)
        return True

    def add_interior(self, p: Point, tag: str = RMID) -> bool:
        if p in self.interior_provenance:
            return False
        self.interior_points.append(p)
        self.interior_provenance[p] = tag
        return True

    @property
    def boundary_points(self) -> dict[int, list[BoundaryPoint]]:
        out: dict[int, list[BoundaryPoint]] = {}
        for (e, t) in sorted(self.boundary):
            out.setdefault(e, []).append(BoundaryPoint(e, t, self.boundary[(e, t)][0]))
        return out

    @property
    def provenance(self) -> dict:
        prov = {pt: tag for pt, tag in self.boundary.values()}
        prov.update(self.interior_provenance)
        return prov

    def points(self) -> list[Point]:
        """Boundary points in (edge, t) order, then interior points."""
        out = [self.boundary[k][0] for k in sorted(self.boundary)]
        out.extend(self.interior_points)
        return out

    def __len__(self) -> int:
        return len(self.boundary) + len(self.interior_points)

    def union(self, other: "CandidateSet") -> "CandidateSet":
        out = CandidateSet(self.polygon, dict(self.boundary), list(self.interior_points),
                           dict(self.interior_provenance), list(self.sizes), None)
        for k, v in other.boundary.items():
            out.boundary.setdefault(k, v)
        for p in other.interior_points:
            out.add_interior(p, other.interior_provenance[p])
        return out


def _require_monotone(poly: Polygon):
    if not is_x_monotone(poly):
        raise NotMonotone("polygon is not x-monotone")


def r_mid(poly: Polygon) -> list[Point]:
    """Midpoints of all pairs of mutually visible reflex vertices."""
    refl = reflex_vertices(poly)
    v = poly.vertices
    out = []
    seen = set()
    for a in range(len(refl)):
        for b in range(a + 1, len(refl)):
            p, q = v[refl[a]], v[refl[b]]
            if visible(poly, p, q):
                m = midpoint(p, q)
                if m not in seen:
                    seen.add(m)
                    out.append(m)
    r = len(refl)
    if len(out) > r * r:
        raise AssertionError(f"|R_mid| = {len(out)} exceeds r^2 = {r * r}")
    return out


def _vertex_set(poly: Polygon) -> CandidateSet:
    cs = CandidateSet(poly)
    for i, p in enumerate(poly.vertices):
        cs.add_boundary(BoundaryPoint(i, ZERO, p), VERTEX)
    return cs


def _chord_ends(poly: Polygon, v: Point, beta: Point):
    """Boundary points where the maximal chord through v and beta ends."""
    dx, dy = beta[0] - v[0], beta[1] - v[1]
    out = []
    for sx, sy in ((dx, dy), (-dx, -dy)):
        hit = ray_exit(poly, v, sx, sy)
        if hit is not None:
            out.append(hit[1])
    return out


def _midpoints(poly: Polygon, cs: CandidateSet) -> list[BoundaryPoint]:
    per_edge: dict[int, list] = {}
    for (e, t) in cs.boundary:
        per_edge.setdefault(e, []).append(t)
    out = []
    for e, ts in per_edge.items():
        ts.sort()
        ts.append(None)  # the next vertex closes the edge at t = 1
        a, b = poly.edges[e]
        for t0, t1 in zip(ts, ts[1:]):
            tm = (t0 + 1) * HALF if t1 is None else (t0 + t1) * HALF
            out.append(BoundaryPoint(e, tm, lerp(a, b, tm)))
    return out


def _grow(poly: Polygon, cs: CandidateSet, rounds: int, midpoints_from: int = 1) -> CandidateSet:
    """Run ``rounds`` more arrangement rounds on ``cs`` in place.

    Each round adds the chord ends through every reflex vertex, and from
    round ``midpoints_from`` on the midpoints of neighbouring points on each
    edge. Chords only need to be shot from points added in the previous
    round; older points already contributed theirs. The per-round growth
    bound |Q_i| <= (2 + r)|Q_{i-1}| is checked.
    """
    refl = [poly.vertices[i] for i in reflex_vertices(poly)]
    r = len(refl)
    if not cs.sizes:
        cs.sizes.append(len(cs.boundary))
    if cs.frontier is None:
        cs.frontier = [cs.boundary[k][0] for k in sorted(cs.boundary)]
    done = len(cs.sizes) - 1
    for rnd in range(done + 1, done + rounds + 1):
        before = len(cs.boundary)
        new = []
        mids = _midpoints(poly, cs) if rnd >= midpoints_from else []
        for v in cs.frontier:
            for beta in refl:
                if beta == v or not visible(poly, v, beta):
                    continue
                for bp in _chord_ends(poly, v, beta):
                    if cs.add_boundary(bp, chord_tag(rnd)):
                        new.append(bp.coords)
        for bp in mids:
            if cs.add_boundary(bp, midpoint_tag(rnd)):
                new.append(bp.coords)
        after = len(cs.boundary)
        if after > before * (2 + r):
            raise AssertionError(f"|Q_{rnd}| = {after} exceeds (2+r)|Q_{rnd - 1}| = {before * (2 + r)}")
        cs.sizes.append(after)
        cs.frontier = new
    return cs


def extend_witgen(poly: Polygon, cs: CandidateSet, k: int) -> CandidateSet:
    """Grow a WitGen set in place until it is Q_{2k}."""
    need = 2 * k - (len(cs.sizes) - 1)
    if need > 0:
        _grow(poly, cs, need)
    return cs


def witgen(poly: Polygon, k: int) -> CandidateSet:
    """Q_{2k}: vertices grown by 2k rounds of chord hits and edge midpoints."""
    _require_monotone(poly)
    if k < 1:
        raise KOutOfRange(f"k must be >= 1, got {k}")
    return _grow(poly, _vertex_set(poly), 2 * k)


def witgen_rounds(poly: Polygon, rounds: int) -> CandidateSet:
    """Q_rounds of the WitGen arrangement (``witgen(P, k)`` is ``rounds = 2k``)."""
    _require_monotone(poly)
    return _grow(poly, _vertex_set(poly), rounds)


def vertical_decomposition(poly: Polygon) -> list[Point]:
    """H: the far ends of the vertical chords through every vertex."""
    _require_monotone(poly)
    return [bp.coords for bp in _h_points(poly)]


def _h_points(poly: Polygon) -> list[BoundaryPoint]:
    out = []
    seen = set()
    for v in poly.vertices:
        for dy in (1, -1):
            hit = ray_exit(poly, v, 0, dy)
            if hit is None:
                continue
            bp = hit[1]
            if bp.coords != v and bp.coords not in seen:
                seen.add(bp.coords)
                out.append(bp)
    return out


def q_approx(poly: Polygon, iterations: int) -> CandidateSet:
    """Q_i of the approximation arrangement seeded with V ∪ H.

    Round 1 adds chord hits only; later rounds also add edge midpoints.
    """
    _require_monotone(poly)
    if iterations < 1:
        raise KOutOfRange(f"iterations must be >= 1, got {iterations}")
    cs = _vertex_set(poly)
    for bp in _h_points(poly):
        cs.add_boundary(bp, HPOINT)
    return _grow(poly, cs, iterations, midpoints_from=2)


def exact_candidates(poly: Polygon, k: int) -> CandidateSet:
    """C_k = V ∪ R_mid ∪ WitGen(P, k)."""
    cs = witgen(poly, k)
    for p in r_mid(poly):
        cs.add_interior(p, RMID)
    return cs
