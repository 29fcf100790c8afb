"""Maximum independent sets of visibility intersection graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotMonotoneVig, WskitError


@dataclass
class WitnessSolution:
    chosen: list
    size: int
    certificate: list = field(default_factory=list)
    indices: list = field(default_factory=list)
    optimal: bool = True

    def __post_init__(self):
        assert self.size == len(self.chosen)


def _certify(vig, idx):
    cert = []
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            if vig.adjacency[i][j]:
                raise WskitError(f"chosen points {i} and {j} see a common point")
            cert.append((i, j))
    return cert


def _solution(vig, idx):
    idx = list(idx)
    return WitnessSolution([vig.points[i] for i in idx], len(idx), _certify(vig, idx), idx)


def longest_chain(xs, disjoint, reach=None) -> list[int]:
    """Indices of a longest chain ``i1, i2, ...`` with strictly increasing x
    and ``disjoint(i_a, i_b)`` for consecutive members.

    ``reach(i)``, if given, is an x-value such that ``disjoint(i, j)`` can
    only hold when ``xs[j] > reach(i)``; it prunes the scan. Among longest
    chains the one whose index sequence (in x order) is lexicographically
    smallest is returned.
    """
    n = len(xs)
    if n == 0:
        return []
    if reach is None:
        reach = xs.__getitem__
    order = sorted(range(n), key=lambda i: (xs[i], i))
    g = [1] * n
    # levels[L] lists processed points with g == L + 1, in decreasing x
    levels: list[list[int]] = []
    for i in reversed(order):
        lim = reach(i)
        found = 0
        for L in range(len(levels) - 1, -1, -1):
            for j in levels[L]:
                if xs[j] <= lim:
                    break
                if disjoint(i, j):
                    found = L + 1
                    break
            if found:
                break
        g[i] = found + 1
        if len(levels) < g[i]:
            levels.append([])
        levels[g[i] - 1].append(i)
    opt = len(levels)
    chain = []
    cur = None
    for need in range(opt, 0, -1):
        for j in range(n):
            if g[j] != need:
                continue
            if cur is not None and not (xs[j] > reach(cur) and disjoint(cur, j)):
                continue
            chain.append(j)
            cur = j
            break
    return chain


def mis_chain(vig) -> WitnessSolution:
    """Longest chain of pairwise-disjoint points in x order.

    Disjointness is transitive along x in a monotone polygon, so a chain
    whose consecutive members are disjoint is independent; the result is
    still checked pairwise against the graph.
    """
    if not vig.monotone_mode:
        raise NotMonotoneVig("chain DP needs a VIG built in monotone mode")
    xs = [p[0] for p in vig.points]
    adj = vig.adjacency
    chain = longest_chain(xs, lambda i, j: not adj[i][j])
    return _solution(vig, sorted(chain))


def mis_exact(vig) -> WitnessSolution:
    """Exact MIS by branch and bound with a greedy clique-cover bound.

    Vertices are branched in index order, include before exclude, so the
    first maximum set found is the lexicographically smallest one.
    """
    n = len(vig.points)
    nbr = [0] * n
    for i in range(n):
        m = 0
        for j in range(n):
            if i != j and vig.adjacency[i][j]:
                m |= 1 << j
        nbr[i] = m
    best = []

    def bound(cand: int) -> int:
        # greedy cover by cliques: each clique holds at most one chosen vertex
        k = 0
        while cand:
            k += 1
            low = cand & -cand
            clique = low
            rest = cand & ~low & nbr[low.bit_length() - 1]
            while rest:
                b = rest & -rest
                clique |= b
                rest &= nbr[b.bit_length() - 1] & ~b
            cand &= ~clique
        return k

    def search(cand: int, chosen: list):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cand or len(chosen) + bound(cand) <= len(best):
            return
        low = cand & -cand
        i = low.bit_length() - 1
        chosen.append(i)
        search(cand & ~low & ~nbr[i], chosen)
        chosen.pop()
        search(cand & ~low, chosen)

    search((1 << n) - 1, [])
    return _solution(vig, best)
