"""Approximation algorithms.

``approx_dyn_td``
    Scans a tree-decomposition bottom-up and adds a whole bag to the seed
    set whenever the subgraph below it cannot be finished from the current
    seeds plus its outside neighbors.  At most ``w + 1`` vertices are paid
    for each region that every monopoly must hit.

``baker_ptas_degenerate``
    Layer shifting for maximum degenerate sets on planar graphs.  Pieces
    are solved exactly through the threshold dual and the treewidth DP.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Optional

from .decomposition import TreeDecomposition, heuristic_td, validate_td
from .errors import InvalidDecomposition, LimitExceeded, PieceTooLarge, StateLimitExceeded
from .graph import Graph, dual_threshold, hull_set, is_degenerate, is_dynamic_monopoly
from .oracle import brute_alpha, oracle_limit
from .twdp import solve_dyn_treewidth


def is_strong_region(g: Graph, tau: Mapping[int, int], a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff ``b`` is not inside the hull of ``a`` together with the outside neighbors of ``b``."""
    b = frozenset(b)
    if not b:
        return False
    seed = frozenset(a) | g.outside_neighbors(b)
    return not b <= hull_set(g, tau, seed)


@dataclass(frozen=True)
class RegionState:
    """Outcome of the bottom-up region scan."""

    d: tuple[int, ...]
    width: int
    order: tuple[int, ...]          # decomposition nodes in processing order
    strong: tuple[int, ...]         # nodes whose region was strong when visited
    grown: tuple[tuple[int, ...], ...]  # seed set after each visited node

    @property
    def b(self) -> int:
        return len(self.strong)

    @property
    def bound(self) -> int:
        """``(w + 1) * b``; the seed set never exceeds it."""
        return (self.width + 1) * self.b


def approx_dyn_td(g: Graph, tau: Mapping[int, int], td: TreeDecomposition,
                  root: Optional[int] = None, check: bool = False) -> RegionState:
    """Dynamic monopoly within factor ``w + 1`` of optimal.

    Nodes are visited in reversed BFS order from ``root``.  With ``check``
    the scan also asserts that every weak region whose inner boundary is
    already seeded lies in the hull of the seeds.
    """
    ok, problems = validate_td(g, td)
    if not ok:
        raise InvalidDecomposition("; ".join(problems))
    if g.n == 0:
        return RegionState((), td.width, (), (), ())
    root, parent, bfs = td.rooted(root)
    below = td.subtree_vertices(root)
    order = tuple(reversed(bfs))
    a: set[int] = set()
    strong, grown = [], []
    for t in order:
        region = below[t]
        if is_strong_region(g, tau, a, region):
            strong.append(t)
            a |= td.bags[t]
        elif check and g.boundary(region) <= a:
            assert region <= hull_set(g, tau, a), f"weak region at node {t} escapes the hull"
        grown.append(tuple(sorted(a)))
    d = tuple(sorted(a))
    if not is_dynamic_monopoly(g, tau, d):
        raise RuntimeError("region scan produced a set that is not a dynamic monopoly")
    return RegionState(d, td.width, order, tuple(strong), tuple(grown))


@dataclass(frozen=True)
class LayerStructure:
    """BFS layering and the shifted deletions.

    ``deleted[i]`` is the union of layers ``i, i + k, i + 2k, ...`` and
    ``pieces[i]`` lists the components left after deleting it.
    """

    layers: tuple[tuple[int, ...], ...]
    k: int
    deleted: tuple[frozenset[int], ...]
    pieces: tuple[tuple[tuple[int, ...], ...], ...]

    def level(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


def bfs_layers(g: Graph, outer: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """BFS levels from ``outer``; components it misses restart at level 0 from their lowest vertex."""
    level: dict[int, int] = {}
    starts = sorted(set(outer))
    for v in starts:
        if v not in g.vertices:
            raise ValueError(f"outer vertex {v} is not in the graph")
    pending = deque()
    for v in starts:
        level[v] = 0
        pending.append(v)
    for extra in [None] + list(g.vertices):
        if extra is not None:
            if extra in level:
                continue
            level[extra] = 0
            pending.append(extra)
        while pending:
            u = pending.popleft()
            for w in g.adj[u]:
                if w not in level:
                    level[w] = level[u] + 1
                    pending.append(w)
    depth = max(level.values(), default=-1) + 1
    return tuple(tuple(sorted(v for v in g.vertices if level[v] == i)) for i in range(depth))


def layer_structure(g: Graph, outer: Iterable[int], k: int) -> LayerStructure:
    layers = bfs_layers(g, outer)
    deleted, pieces = [], []
    for i in range(k):
        x = frozenset(v for j in range(i, len(layers), k) for v in layers[j])
        sub, orig = g.induced(v for v in g.vertices if v not in x)
        deleted.append(x)
        pieces.append(tuple(tuple(orig[u] for u in comp) for comp in sub.components()))
    return LayerStructure(layers, k, tuple(deleted), tuple(pieces))


def shift_count(epsilon: float) -> int:
    """``ceil(1 / epsilon)``, but at least 2 so some layers always survive."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    return max(math.ceil(1 / epsilon), 2)


def max_degenerate_piece(g: Graph, kappa: Mapping[int, int], piece, max_states: Optional[int] = None) -> tuple[int, ...]:
    """Exact maximum degenerate subset of ``g[piece]`` (original ids)."""
    sub, orig = g.induced(piece)
    sub_kappa = {i: kappa[orig[i]] for i in sub.vertices}
    tau = dual_threshold(sub, sub_kappa)
    try:
        sol = solve_dyn_treewidth(sub, tau, heuristic_td(sub), max_states=max_states)
        keep = [i for i in sub.vertices if i not in set(sol.d)]
    except StateLimitExceeded:
        if sub.n > oracle_limit():
            raise PieceTooLarge(f"piece {sorted(piece)} is beyond both the DP cap and the oracle limit")
        try:
            keep = sorted(brute_alpha(sub, sub_kappa).witness)
        except LimitExceeded as exc:
            raise PieceTooLarge(str(exc)) from exc
    return tuple(sorted(orig[i] for i in keep))


class BakerResult(NamedTuple):
    members: tuple[int, ...]
    shift: int
    layers: LayerStructure


def baker_ptas_degenerate(g: Graph, kappa: Mapping[int, int], epsilon: float, outer: Iterable[int],
                          *, max_states: Optional[int] = None, threads: int = 1) -> BakerResult:
    """Degenerate set of size at least ``(1 - epsilon)`` times the maximum on planar ``g``.

    ``outer`` seeds the layering (the outer-face vertices of a plane
    embedding).  Planarity is not checked.  Ties between shifts go to the
    smallest shift, so ``threads`` does not change the answer.
    """
    k = shift_count(epsilon)
    ls = layer_structure(g, outer, k)

    def solve_shift(i):
        out: list[int] = []
        for piece in ls.pieces[i]:
            out.extend(max_degenerate_piece(g, kappa, piece, max_states))
        return tuple(sorted(out))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sets = list(pool.map(solve_shift, range(k)))
    else:
        sets = [solve_shift(i) for i in range(k)]
    best = max(range(k), key=lambda i: (len(sets[i]), -i))
    members = sets[best]
    ok, _ = is_degenerate(g, kappa, members)
    if not ok:
        raise RuntimeError("union of piece solutions is not degenerate")
    return BakerResult(members, best, ls)
