"""Interval representations and the sweep structure used by the interval DP.

Intervals are closed and given as ``{vertex: (left, right)}`` with
:class:`fractions.Fraction` (or int) endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .errors import RepresentationMismatch
from .graph import Graph

Interval = tuple[Fraction, Fraction]


def intersect(a: Interval, b: Interval) -> bool:
    return max(a[0], b[0]) <= min(a[1], b[1])


def intersection_graph(intervals: Mapping[int, Interval]) -> Graph:
    n = len(intervals)
    if sorted(intervals) != list(range(1, n + 1)):
        raise ValueError("interval keys must be the vertices 1..n")
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if intersect(intervals[u], intervals[v])]
    return Graph.from_edges(n, edges)


def check_realizes(g: Graph, intervals: Mapping[int, Interval]) -> None:
    if sorted(intervals) != list(g.vertices):
        raise RepresentationMismatch("intervals must be given for exactly the vertices 1..n")
    for u, v in combinations(g.vertices, 2):
        if intersect(intervals[u], intervals[v]) != g.has_edge(u, v):
            what = "are adjacent but disjoint" if g.has_edge(u, v) else "intersect but are not adjacent"
            raise RepresentationMismatch(f"intervals of {u} and {v} {what}")


def perturb_intervals(intervals: Mapping[int, Interval]) -> dict[int, Interval]:
    """Make all ``2n`` endpoints distinct without changing the intersection graph.

    Each interval of vertex ``v`` is widened by ``delta * v / (2n + 2)`` on
    both sides, where ``delta`` is the smallest gap between distinct
    endpoint values.  Widening keeps every intersection, and the total
    widening of any two intervals stays below ``delta``, so no disjoint pair
    starts to intersect.
    """
    n = len(intervals)
    values = sorted({Fraction(x) for iv in intervals.values() for x in iv})
    gaps = [b - a for a, b in zip(values, values[1:])]
    delta = min(gaps) if gaps else Fraction(1)
    out = {}
    for v, (lo, hi) in intervals.items():
        if Fraction(lo) > Fraction(hi):
            raise ValueError(f"interval of {v} has left > right")
        eps = delta * v / (2 * n + 2)
        out[v] = (Fraction(lo) - eps, Fraction(hi) + eps)
    return out


def endpoints_distinct(intervals: Mapping[int, Interval]) -> bool:
    pts = [x for iv in intervals.values() for x in iv]
    return len(set(pts)) == len(pts)


@dataclass(frozen=True)
class IntervalStructure:
    """Sweep data for a connected interval graph.

    Lists indexed by zone or block are 0-based in Python while the names
    follow the 1-based convention: ``cuts[i - 1]`` is the cut of zone ``i``
    and ``breakpoints`` holds the 1-based zone indices ``j_1 < ... < j_k``.
    """

    intervals: dict[int, Interval]
    endpoints: tuple[Fraction, ...]
    cuts: tuple[frozenset[int], ...]
    breakpoints: tuple[int, ...]
    t: int
    blocks: tuple[frozenset[int], ...]        # V_i
    boundaries: tuple[frozenset[int], ...]    # B_i
    regions: tuple[frozenset[int], ...]       # dV_i

    @property
    def k(self) -> int:
        return len(self.breakpoints)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cuts)

    def dips(self) -> list[int]:
        """1-based zones ``i`` in ``2..2n-2`` with a strict local minimum of the cut size."""
        c = self.sizes
        return [i for i in range(2, len(c)) if c[i - 1] < min(c[i - 2], c[i])]


def interval_scan(g: Graph, intervals: Mapping[int, Interval], t: int) -> IntervalStructure:
    """Sweep the endpoints and cut the graph at small dips of the cut size."""
    check_realizes(g, intervals)
    if not g.is_connected():
        raise ValueError("interval_scan needs a connected graph; split into components first")
    if g.n == 0:
        raise ValueError("empty graph")
    iv = {v: (Fraction(a), Fraction(b)) for v, (a, b) in intervals.items()}
    if not endpoints_distinct(iv):
        iv = perturb_intervals(iv)
    xs = tuple(sorted(x for pair in iv.values() for x in pair))
    cuts = tuple(
        frozenset(v for v in g.vertices if iv[v][0] <= xs[i] and xs[i + 1] <= iv[v][1])
        for i in range(len(xs) - 1)
    )
    c = [len(x) for x in cuts]
    last = len(cuts)  # 2n - 1
    breaks = [i for i in range(2, last) if c[i - 1] < min(c[i - 2], c[i], t)]
    breaks.append(last)
    blocks, bounds, regions = [], [], []
    acc: set[int] = set()
    start = 1
    for j in breaks:
        prev = frozenset(acc)
        for i in range(start, j + 1):
            acc |= cuts[i - 1]
        start = j + 1
        blocks.append(frozenset(acc))
        bounds.append(cuts[j - 1])
        regions.append(frozenset(acc) if not regions else (frozenset(acc) - prev) | bounds[-2])
    return IntervalStructure(
        intervals=iv,
        endpoints=xs,
        cuts=cuts,
        breakpoints=tuple(breaks),
        t=t,
        blocks=tuple(blocks),
        boundaries=tuple(bounds),
        regions=tuple(regions),
    )


def has_small_cut(g: Graph, size: int) -> bool:
    """True if removing some set of fewer than ``size`` vertices disconnects ``g``."""
    for s in range(min(size, g.n)):
        for cut in combinations(g.vertices, s):
            rest = [v for v in g.vertices if v not in cut]
            if len(rest) >= 2:
                sub, _ = g.induced(rest)
                if not sub.is_connected():
                    return True
    return False


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def minimal_vertex_cuts(g: Graph) -> list[frozenset[int]]:
    """All inclusion-minimal vertex sets whose removal disconnects ``g`` (brute force)."""
    cuts = []
    for s in range(g.n - 1):
        for cut in combinations(g.vertices, s):
            cs = frozenset(cut)
            if any(c <= cs for c in cuts):
                continue
            sub, _ = g.induced(v for v in g.vertices if v not in cs)
            if not sub.is_connected():
                cuts.append(cs)
    return cuts
