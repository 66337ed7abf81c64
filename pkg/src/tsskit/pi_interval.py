"""Optimal partial incentives on interval graphs with bounded thresholds.

The endpoint sweep splits a connected interval graph into blocks
``dV_1, ..., dV_k`` glued along boundaries ``B_i`` of fewer than ``t``
vertices, so the blocks form a path decomposition with small adhesions.
Only a bounded amount of incentive is ever needed inside one block, at most
``(t + 1) choose 2``, which keeps the per-block enumeration polynomial.

Tables are indexed by ``(incentive on B_i, entry order of B_i)`` and hold
Pareto fronts of ``(support, cost)``, where support counts neighbors in
``V_i \\ B_i`` entering before each boundary vertex.  The empty state before
the first block makes the base case an ordinary transition.
"""

from __future__ import annotations

import math
from itertools import combinations, permutations
from typing import Iterator, Mapping, Optional

from .errors import NotAClique, StateLimitExceeded, ThresholdExceedsBound
from .graph import Graph, IncentiveFn, is_partial_incentive, weight
from .intervals import Interval, IntervalStructure, check_realizes, interval_scan, is_clique
from .twdp import IncentiveSolution, _insert, _unwind, greedy_incentive


def block_budget(t: int) -> int:
    """Most incentive an optimal solution needs inside one block."""
    return (t + 1) * t // 2


def clique_incentive(g: Graph, tau: Mapping[int, int], clique) -> IncentiveFn:
    """``sigma(v_i) = max(tau(v_i) - i, 0)`` along the given clique order, 0 elsewhere.

    In a ``t``-connected chordal graph with thresholds at most ``t`` and a
    clique of order ``t`` this is a partial incentive; the caller is
    responsible for those preconditions.
    """
    clique = list(clique)
    if len(set(clique)) != len(clique) or any(v not in g.vertices for v in clique):
        raise NotAClique("clique must list distinct vertices of the graph")
    if not is_clique(g, clique):
        raise NotAClique(f"vertices {clique} are not pairwise adjacent")
    sigma = {}
    for i, v in enumerate(clique):
        s = max(tau[v] - i, 0)
        if s:
            sigma[v] = s
    return sigma


def _bounded(values: list[range], total: int) -> Iterator[tuple[int, ...]]:
    """Vectors with ``x[j]`` in ``values[j]`` and sum at most ``total``, by nondecreasing sum."""
    floor = sum(r.start for r in values)
    for s in range(floor, total + 1):
        yield from _exact(values, 0, s)


def _exact(values, j, s):
    if j == len(values):
        if s == 0:
            yield ()
        return
    r = values[j]
    rest_max = sum(x.stop - 1 for x in values[j + 1:])
    rest_min = sum(x.start for x in values[j + 1:])
    for x in r:
        if rest_min <= s - x <= rest_max:
            for tail in _exact(values, j + 1, s - x):
                yield (x,) + tail


def _interleavings(fixed: tuple, extra) -> Iterator[tuple]:
    """All orders of ``fixed + extra`` keeping ``fixed`` in its given order."""
    size = len(fixed) + len(extra)
    for perm in permutations(extra):
        for slots in combinations(range(size), len(extra)):
            out, fi, pi = [], 0, 0
            for pos in range(size):
                if pi < len(slots) and slots[pi] == pos:
                    out.append(perm[pi])
                    pi += 1
                else:
                    out.append(fixed[fi])
                    fi += 1
            yield tuple(out)


class IntervalDP:
    """Block-by-block table construction over an :class:`IntervalStructure`.

    ``keep_tables`` retains every block table so :meth:`query` can answer
    local-cascade lookups.
    """

    def __init__(self, g: Graph, tau: Mapping[int, int], structure: IntervalStructure,
                 upper: Optional[int] = None, keep_tables: bool = False, max_states: Optional[int] = None):
        self.g = g
        self.tau = tau
        self.s = structure
        self.budget = block_budget(structure.t)
        self.upper = math.inf if upper is None else upper
        self.keep_tables = keep_tables
        self.max_states = max_states
        self.tables: list[dict] = []
        self.lo = {v: max(0, tau[v] - g.degree(v)) for v in g.vertices}
        self.hi = {v: max(tau[v], 0) for v in g.vertices}

    def _cap(self, v, sv):
        return max(self.tau[v] - sv, 0)

    def cascade(self, region, prev_bound, bound, sigma, order, support):
        """Greedy entry of one block for a fixed boundary order.

        Free vertices of the block enter as soon as they can; boundary
        vertices enter in ``order`` right after everything that can precede
        them.  Returns the support vector for ``bound`` (in the restricted
        order) or None when a vertex leaving the boundary, or a free vertex,
        cannot enter.
        """
        masks, tau = self.g.masks, self.tau
        free = [v for v in region if v not in prev_bound and v not in bound]
        active = 0
        gained = {}
        pending = list(free)
        for b in order + (None,):
            grew = True
            while grew and pending:
                grew = False
                for f in list(pending):
                    if (masks[f] & active).bit_count() >= tau[f] - sigma[f]:
                        active |= 1 << f
                        pending.remove(f)
                        grew = True
            if b is None:
                break
            if b not in bound:
                if support.get(b, 0) + (masks[b] & active).bit_count() < tau[b] - sigma[b]:
                    return None
            else:
                inner = active & ~self._bound_mask(bound)
                gained[b] = support.get(b, 0) + (masks[b] & inner).bit_count()
            active |= 1 << b
        if pending:
            return None
        return tuple(min(gained[b], self._cap(b, sigma[b])) for b in order if b in bound)

    def _bound_mask(self, bound):
        m = 0
        for v in bound:
            m |= 1 << v
        return m

    def run(self) -> Optional[tuple[int, dict[int, int]]]:
        s = self.s
        table: dict = {((), ()): [((), 0, None)]}
        prev_bound: frozenset = frozenset()
        states = 0
        for i in range(s.k):
            region, bound = s.regions[i], s.boundaries[i]
            table = self._step(table, region, prev_bound, bound)
            states += len(table)
            if self.max_states is not None and states > self.max_states:
                raise StateLimitExceeded(f"interval DP exceeded {self.max_states} states")
            if self.keep_tables:
                self.tables.append(table)
            prev_bound = bound
        best = None
        masks = self.g.masks
        for (sig, order), front in table.items():
            sigma = dict(zip(order, sig))
            for ext, cost, trail in front:
                ok = all(
                    ext[j] + sum(1 for u in order[:j] if (masks[v] >> u) & 1) >= self.tau[v] - sigma[v]
                    for j, v in enumerate(order)
                )
                if ok and (best is None or cost < best[0]):
                    best = (cost, trail)
        if best is None:
            return None
        return best[0], _unwind(best[1])

    def _step(self, table, region, prev_bound, bound):
        new_vs = sorted(region - prev_bound)
        ranges = [range(self.lo[v], self.hi[v] + 1) for v in new_vs]
        if any(r.start >= r.stop for r in ranges):
            return {}
        fresh = tuple(v for v in sorted(bound) if v not in prev_bound)
        out: dict = {}
        for (psig, porder), front in table.items():
            sigma = dict(zip(porder, psig))
            room = self.budget - sum(psig)
            best_prev = min(c for _, c, _ in front)
            for vec in _bounded(ranges, room):
                add = sum(vec)
                if best_prev + add > self.upper:
                    break
                sigma.update(zip(new_vs, vec))
                new_trail = tuple(zip(new_vs, vec))
                for order in _interleavings(porder, fresh):
                    key_order = tuple(v for v in order if v in bound)
                    key = (tuple(sigma[v] for v in key_order), key_order)
                    for ext, cost, trail in front:
                        if cost + add > self.upper:
                            continue
                        support = dict(zip(porder, ext))
                        got = self.cascade(region, prev_bound, bound, sigma, order, support)
                        if got is None:
                            continue
                        node = trail
                        for v, x in new_trail:
                            node = (v, x, node)
                        _insert(out.setdefault(key, []), got, cost + add, node)
        return out

    def query(self, i: int, sigma: Mapping[int, int], order, rho: Mapping[int, int]) -> float:
        """Least cost on ``V_i`` of the local cascade ``(sigma, order, rho)`` on ``B_i`` (1-based ``i``)."""
        order = tuple(order)
        key = (tuple(sigma[v] for v in order), order)
        masks = self.g.masks
        want = [max(self.tau[v] - sigma[v] - rho.get(v, 0) - sum(1 for u in order[:j] if (masks[v] >> u) & 1), 0)
                for j, v in enumerate(order)]
        front = self.tables[i - 1].get(key, [])
        return min((c for ext, c, _ in front if all(a >= b for a, b in zip(ext, want))), default=math.inf)


def _solve_connected(g: Graph, tau, intervals, t, max_states):
    if g.n == 1:
        s = max(tau[1], 0)
        return {1: s} if s else {}
    structure = interval_scan(g, intervals, t)
    upper = weight(greedy_incentive(g, tau))
    res = IntervalDP(g, tau, structure, upper=upper, max_states=max_states).run()
    if res is None:
        raise RuntimeError("interval DP found no partial incentive; the upper bound guarantees one exists")
    return {v: x for v, x in res[1].items() if x}


def solve_pi_interval(g: Graph, intervals: Mapping[int, Interval], tau: Mapping[int, int], t: int,
                      *, max_states: Optional[int] = None) -> IncentiveSolution:
    """Minimum-weight partial incentive of an interval graph with ``tau <= t``.

    Disconnected graphs are solved one component at a time.
    """
    check_realizes(g, intervals)
    over = [v for v in g.vertices if tau[v] > t]
    if over:
        raise ThresholdExceedsBound(f"thresholds above t={t} at vertices {over}")
    sigma: dict[int, int] = {}
    for comp in g.components():
        sub, orig = g.induced(comp)
        sub_tau = {i: tau[orig[i]] for i in sub.vertices}
        sub_iv = {i: intervals[orig[i]] for i in sub.vertices}
        part = _solve_connected(sub, sub_tau, sub_iv, t, max_states)
        sigma.update({orig[i]: x for i, x in part.items()})
    sigma = dict(sorted(sigma.items()))
    if not is_partial_incentive(g, tau, sigma):
        raise RuntimeError("interval DP reconstruction is not a partial incentive")
    return IncentiveSolution(weight(sigma), sigma)
