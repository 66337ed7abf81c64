"""Seeded instance generators.

All randomness comes from ``random.Random(seed).random()``, i.e. the
Mersenne Twister (MT19937) stream that CPython guarantees to reproduce for
a given integer seed across versions and platforms.  Integers are derived
from that stream here rather than through ``randrange``/``shuffle``, whose
algorithms are not covered by the guarantee.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import NamedTuple, Optional

from .graph import Graph
from .intervals import Interval, intersection_graph


class _Stream:
    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def below(self, n: int) -> int:
        return min(int(self._rng.random() * n), n - 1)

    def chance(self, p: float) -> bool:
        return self._rng.random() < p


class GridInstance(NamedTuple):
    graph: Graph
    outer: tuple[int, ...]


class IntervalInstance(NamedTuple):
    graph: Graph
    intervals: dict[int, Interval]


def gen_tree(n: int, seed: int = 0) -> Graph:
    """Random labelled tree: vertex ``v > 1`` attaches to a uniform earlier vertex."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    rng = _Stream(seed)
    return Graph.from_edges(n, [(1 + rng.below(v - 1), v) for v in range(2, n + 1)])


def gen_grid(rows: int, cols: int, seed: int = 0) -> GridInstance:
    """``rows x cols`` grid, row-major ids; ``outer`` lists the border vertices."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")

    def vid(r, c):
        return r * cols + c + 1

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    outer = sorted(vid(r, c) for r in range(rows) for c in range(cols)
                   if r in (0, rows - 1) or c in (0, cols - 1))
    return GridInstance(Graph.from_edges(rows * cols, edges), tuple(outer))


def gen_random(n: int, p: float, seed: int = 0, connected: bool = False) -> Graph:
    """G(n, p); with ``connected`` a random spanning tree is laid down first."""
    if n < 1 or not 0 <= p <= 1:
        raise ValueError("need n >= 1 and 0 <= p <= 1")
    rng = _Stream(seed)
    edges = set()
    if connected:
        edges = {(1 + rng.below(v - 1), v) for v in range(2, n + 1)}
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if (u, v) not in edges and rng.chance(p):
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def gen_interval(n: int, seed: int = 0, span: int = 20, max_len: int = 6,
                 connected: bool = True, attempts: int = 1000) -> IntervalInstance:
    """Random integer intervals in ``[0, span]``, resampled until connected if asked."""
    if n < 1 or span < 1 or max_len < 0:
        raise ValueError("need n >= 1, span >= 1, max_len >= 0")
    rng = _Stream(seed)
    for _ in range(attempts):
        ivs = {}
        for v in range(1, n + 1):
            left = rng.below(span + 1)
            ivs[v] = (Fraction(left), Fraction(left + rng.below(max_len + 1)))
        g = intersection_graph(ivs)
        if not connected or g.is_connected():
            return IntervalInstance(g, ivs)
    raise ValueError("no connected instance found; widen max_len or shrink span")


def random_thresholds(g: Graph, seed: int, low: int = 0, high: Optional[int] = None,
                      relative: bool = False) -> dict[int, int]:
    """Uniform thresholds in ``[low, high]``, or ``[low, degree + high]`` when ``relative``."""
    rng = _Stream(seed)
    out = {}
    for v in g.vertices:
        top = (g.degree(v) + (high or 0)) if relative else high
        out[v] = low + rng.below(top - low + 1)
    return out
