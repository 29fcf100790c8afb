"""Witness set solvers: discrete (DisWS), exact and approximate (monotone)."""
from __future__ import annotations

import math

from gmpy2 import mpq

from .discretize import exact_candidates, extend_witgen, q_approx
from .errors import BudgetExceeded, NonPositiveEps, NotMonotone, PointOutside, WskitError
from .geometry import Location, Point, Polygon, is_x_monotone, point_in_polygon, reflex_vertices, to_rational
from .mis import WitnessSolution, longest_chain, mis_chain, mis_exact
from .monotone import chain_labels, compute_profile
from .region_graph import build_vig, regions_intersect_general, regions_intersect_monotone
from .visibility import visibility_region


def verify_witnesses(poly: Polygon, points) -> list[tuple[int, int]]:
    """Check pairwise disjointness with the general region test; returns the pairs."""
    regs = [visibility_region(poly, p) for p in points]
    cert = []
    for i in range(len(regs)):
        for j in range(i + 1, len(regs)):
            if regions_intersect_general(regs[i], regs[j]):
                raise WskitError(f"witnesses {points[i]} and {points[j]} see a common point")
            cert.append((i, j))
    return cert


def solve_disws(poly: Polygon, points) -> WitnessSolution:
    """Largest subset of ``points`` with pairwise-disjoint visibility regions."""
    pts = [Point(*p) for p in points]
    if not pts:
        return WitnessSolution([], 0, [], [])
    vig = build_vig(poly, pts)
    sol = mis_chain(vig) if vig.monotone_mode else mis_exact(vig)
    sol.certificate = verify_witnesses(poly, sol.chosen)
    return sol


class ProfileCache:
    """Monotone profiles of candidate points, shared across solver rounds."""

    def __init__(self, poly: Polygon):
        self.poly = poly
        self.labels = chain_labels(poly)
        self.cache: dict = {}

    def get(self, p: Point):
        pr = self.cache.get(p)
        if pr is None:
            pr = self.cache[p] = compute_profile(self.poly, p, self.labels)
        return pr


def disws_monotone(poly: Polygon, points, cache: ProfileCache | None = None) -> WitnessSolution:
    """DisWS on a monotone polygon without materialising the whole VIG.

    Same predicate and tie-breaking as ``build_vig`` + ``mis_chain``; the
    chain scan is pruned by each point's visible x-extent.
    """
    cache = cache or ProfileCache(poly)
    pts = [Point(*p) for p in points]
    for p in pts:
        if point_in_polygon(poly, p) is Location.EXTERIOR:
            raise PointOutside(f"{p} is outside the polygon")
    profs = [cache.get(p) for p in pts]
    xs = [p[0] for p in pts]
    chain = longest_chain(xs, lambda i, j: not regions_intersect_monotone(profs[i], profs[j]),
                          reach=lambda i: max(profs[i].x_max_vis, xs[i]))
    idx = sorted(chain)
    chosen = [pts[i] for i in idx]
    cert = verify_witnesses(poly, chosen)
    return WitnessSolution(chosen, len(chosen), cert, idx)


def solve_ws_exact(poly: Polygon, k_max: int | None = None, log=None) -> WitnessSolution:
    """Maximum witness set of a monotone polygon.

    For growing k the candidate set C_k = V ∪ R_mid ∪ WitGen(P, k) is solved
    as a discrete problem. A size s_k > k promotes k to s_k. Otherwise k is
    final once C_{k+1} gives nothing larger. A set of 1 + r // 2 witnesses
    is optimal outright: distinct witnesses have distinct anchors, inner
    witnesses need two each and the outer ones at least one. ``k_max``
    (default max(1, r)) caps k; running into it raises ``BudgetExceeded``
    carrying the best set found.
    """
    if not is_x_monotone(poly):
        raise NotMonotone("polygon is not x-monotone")
    r = len(reflex_vertices(poly))
    if k_max is None:
        k_max = max(1, r)
    upper = 1 + r // 2
    cache = ProfileCache(poly)
    wg = exact_candidates(poly, 1)

    def solve(k):
        extend_witgen(poly, wg, k)
        sol = disws_monotone(poly, wg.points(), cache)
        if log:
            log(f"k={k} |C_k|={len(wg)} s_k={sol.size}")
        return sol

    k = 1
    sol = solve(k)
    while True:
        if sol.size >= upper:
            return sol
        if sol.size > k:
            k = sol.size
            if k > k_max:
                sol.optimal = False
                raise BudgetExceeded(f"k reached {k} > k_max = {k_max}", best=sol)
            sol = solve(k)
            continue
        if k + 1 > k_max:
            sol.optimal = False
            raise BudgetExceeded(f"stopping test needs k = {k + 1} > k_max = {k_max}", best=sol)
        nxt = solve(k + 1)
        if nxt.size <= k:
            return sol
        k, sol = k + 1, nxt


def approx_rounds(eps) -> tuple[int, mpq]:
    """Rounds of the approximation arrangement and the guaranteed fraction."""
    eps = to_rational(eps)
    if eps <= 0:
        raise NonPositiveEps(f"eps must be positive, got {eps}")
    if eps >= 1:
        return 1, mpq(1, 2)
    i = math.ceil(1 / eps)
    return 2 * i, mpq(i, i + 1)


def solve_ws_approx(poly: Polygon, eps) -> tuple[WitnessSolution, mpq]:
    """Witness set within a guaranteed fraction of optimal.

    eps >= 1 solves over Q_1 (fraction 1/2); otherwise with i = ceil(1/eps)
    over Q_{2i}, guaranteeing i/(i+1) of the optimum.
    """
    if not is_x_monotone(poly):
        raise NotMonotone("polygon is not x-monotone")
    rounds, frac = approx_rounds(eps)
    cands = q_approx(poly, rounds)
    sol = disws_monotone(poly, cands.points())
    return sol, frac
