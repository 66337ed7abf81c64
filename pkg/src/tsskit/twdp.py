"""Optimal partial incentives by dynamic programming over a nice tree-decomposition.

Two table layouts are provided.  Both walk the nice decomposition bottom-up
with leaf, introduce, forget and join steps and keep, per key, a Pareto
front of ``(support, cost)`` pairs, where ``support[v]`` counts the
neighbors of bag vertex ``v`` in ``V(G_t) \\ X_t`` that enter the hull
before it.  A local cascade asking for outside help ``rho`` is served by any
entry whose support covers ``tau - sigma - rho - (earlier bag neighbors)``.
More support never costs more, so dominated pairs are dropped, and support
is capped at the most that could ever be asked of it.

``explicit``
    Keys are local cascades restricted to the bag: the incentive of each
    bag vertex plus the entry order, with self-activating vertices first
    (in vertex order).  Incentives are chosen on introduce and charged
    immediately; joins subtract the doubly counted bag incentive.

``deferred``
    Keys are entry orders only.  When a vertex is forgotten all of its
    neighbors are known, so its incentive is set to the least value that
    lets it enter at its position.  This is the forget-node minimum over
    incentive values taken eagerly, and it removes the incentive factor
    from the table size.
"""

from __future__ import annotations

import math
from typing import Mapping, NamedTuple, Optional

from .decomposition import (
    FORGET,
    INTRODUCE,
    LEAF,
    NiceTreeDecomposition,
    TreeDecomposition,
    heuristic_td,
    make_nice,
    validate_td,
)
from .errors import InvalidDecomposition, StateLimitExceeded
from .graph import Graph, IncentiveFn, hull_set, is_partial_incentive, normalize_thresholds, weight
from .reductions import dyn_to_pi

METHODS = ("deferred", "explicit")


class IncentiveSolution(NamedTuple):
    weight: int
    sigma: IncentiveFn


class MonopolySolution(NamedTuple):
    size: int
    d: tuple[int, ...]
    # Optimal incentive of the path-extended instance; vertices past ``n`` are path vertices.
    path_sigma: IncentiveFn


def greedy_incentive(g: Graph, tau: Mapping[int, int]) -> IncentiveFn:
    """Feasible (not optimal) incentive: repeatedly pay off the cheapest stuck vertex."""
    sigma = {v: 0 for v in g.vertices}
    while True:
        h = hull_set(g, {v: tau[v] - sigma[v] for v in g.vertices})
        if len(h) == g.n:
            return {v: s for v, s in sigma.items() if s}
        deficit, v = min(
            (tau[v] - sigma[v] - sum(1 for u in g.adj[v] if u in h), v) for v in g.vertices if v not in h
        )
        sigma[v] += deficit


def search_bounds(g: Graph, tau: Mapping[int, int], caps: Optional[Mapping[int, int]] = None):
    """Per-vertex incentive range worth searching.

    Above ``max(tau, 0)`` nothing changes; below ``tau - degree`` the vertex
    can never enter the hull.
    """
    lo = {v: max(0, tau[v] - g.degree(v)) for v in g.vertices}
    hi = {v: max(tau[v], 0) for v in g.vertices}
    if caps:
        for v, c in caps.items():
            hi[v] = min(hi[v], c)
    return lo, hi


def estimate_states(nice: NiceTreeDecomposition, lo: Mapping[int, int], hi: Mapping[int, int],
                    method: str = "deferred") -> int:
    """Upper bound on the number of table keys summed over all nodes."""
    total = 0
    for bag in nice.bag:
        size = math.factorial(len(bag))
        if method == "explicit":
            for v in bag:
                size *= hi[v] - lo[v] + 1
        total += size
    return total


def _insert(front, ext, cost, trail):
    for e_ext, e_cost, _ in front:
        if e_cost <= cost and all(a >= b for a, b in zip(e_ext, ext)):
            return
    front[:] = [e for e in front if not (cost <= e[1] and all(a >= b for a, b in zip(ext, e[0])))]
    front.append((ext, cost, trail))


def _unwind(trail) -> dict[int, int]:
    sigma = {}
    stack = [trail]
    while stack:
        tr = stack.pop()
        if tr is None:
            continue
        if len(tr) == 3:
            u, su, rest = tr
            sigma[u] = su
            stack.append(rest)
        else:
            stack.extend(tr)
    return sigma


class _DP:
    """Shared driver.  Subclasses define the four node steps and ``query``.

    ``lo``/``hi`` bound the incentive allowed at each vertex.  With
    ``cap_support=False`` supports are kept exact, which only enlarges the
    fronts; tests use it to confirm the cap changes nothing.
    """

    def __init__(self, g: Graph, tau: Mapping[int, int], nice: NiceTreeDecomposition,
                 lo: Mapping[int, int], hi: Mapping[int, int], upper: Optional[int] = None,
                 cap_support: bool = True, keep_tables: bool = False):
        self.g = g
        self.tau = tau
        self.nice = nice
        self.lo = lo
        self.hi = hi
        self.upper = math.inf if upper is None else upper
        self.cap_support = cap_support
        self.keep_tables = keep_tables
        self.tables: dict[int, dict] = {}

    def _before(self, order):
        masks = self.g.masks
        out, seen = [], 0
        for v in order:
            out.append((masks[v] & seen).bit_count())
            seen |= 1 << v
        return out

    def run(self) -> Optional[tuple[int, dict[int, int]]]:
        """Return ``(cost, sigma)`` at the root, or None if no entry survives."""
        nice = self.nice
        live: dict[int, dict] = {}
        for t in range(len(nice)):
            kind, cs = nice.kind[t], nice.children[t]
            if kind == LEAF:
                table = {(): [((), 0, None)]}
            elif kind == INTRODUCE:
                table = self._introduce(live[cs[0]], nice.vertex[t])
            elif kind == FORGET:
                table = self._forget(live[cs[0]], nice.vertex[t])
            else:
                table = self._join(live[cs[0]], live[cs[1]])
            if not self.keep_tables:
                for c in cs:
                    del live[c]
            live[t] = table
        self.tables = live if self.keep_tables else {}
        root = live[nice.root].get(())
        if not root:
            return None
        _, cost, trail = min(root, key=lambda e: e[1])
        return cost, _unwind(trail)

    def _join(self, left, right):
        table: dict = {}
        for key, lfront in left.items():
            rfront = right.get(key)
            if not rfront:
                continue
            cap = self._caps(key)
            paid = self._bag_paid(key)
            for lext, lcost, ltrail in lfront:
                for rext, rcost, rtrail in rfront:
                    c = lcost + rcost - paid
                    if c > self.upper:
                        continue
                    ext = tuple(min(a + b, n) for a, b, n in zip(lext, rext, cap))
                    _insert(table.setdefault(key, []), ext, c, (ltrail, rtrail))
        return table


class ExplicitDP(_DP):
    """Keys are ``((v, sigma_v), ...)`` in entry order."""

    def _caps(self, key):
        if not self.cap_support:
            return [math.inf] * len(key)
        tau = self.tau
        return [max(tau[v] - s - b, 0) for (v, s), b in zip(key, self._before([v for v, _ in key]))]

    def _bag_paid(self, key):
        return sum(s for _, s in key)

    def _introduce(self, child, u):
        tau = self.tau
        table: dict = {}
        for key, front in child.items():
            nfront = sum(1 for v, s in key if tau[v] - s <= 0)
            for su in range(self.lo[u], self.hi[u] + 1):
                if tau[u] - su <= 0:
                    positions = [sum(1 for v, _ in key[:nfront] if v < u)]
                else:
                    positions = range(nfront, len(key) + 1)
                for p in positions:
                    nkey = key[:p] + ((u, su),) + key[p:]
                    cap = self._caps(nkey)
                    for ext, cost, trail in front:
                        c = cost + su
                        if c > self.upper:
                            continue
                        nxt = ext[:p] + (0,) + ext[p:]
                        nxt = tuple(min(a, b) for a, b in zip(nxt, cap))
                        _insert(table.setdefault(nkey, []), nxt, c, trail)
        return table

    def _forget(self, child, u):
        masks = self.g.masks
        table: dict = {}
        for key, front in child.items():
            idx = next(i for i, (v, _) in enumerate(key) if v == u)
            su = key[idx][1]
            need_u = self._caps(key)[idx] if self.cap_support else \
                max(self.tau[u] - su - self._before([v for v, _ in key])[idx], 0)
            nkey = key[:idx] + key[idx + 1:]
            cap = self._caps(nkey)
            bump = tuple(1 if i >= idx and (masks[u] >> v) & 1 else 0 for i, (v, _) in enumerate(nkey))
            for ext, cost, trail in front:
                if ext[idx] < need_u:
                    continue
                rest = ext[:idx] + ext[idx + 1:]
                nxt = tuple(min(a + b, c) for a, b, c in zip(rest, bump, cap))
                _insert(table.setdefault(nkey, []), nxt, cost, (u, su, trail))
        return table

    def query(self, t: int, sigma: Mapping[int, int], order, rho: Mapping[int, int]) -> float:
        """Minimum cost of the local cascade ``(sigma, order, rho)`` at node ``t``."""
        key = tuple((v, sigma[v]) for v in order)
        front = self.tables[t].get(key, [])
        want = [max(self.tau[v] - sigma[v] - rho.get(v, 0) - b, 0)
                for v, b in zip(order, self._before(order))]
        return min((c for ext, c, _ in front if all(a >= b for a, b in zip(ext, want))), default=math.inf)


class DeferredDP(_DP):
    """Keys are entry orders; costs cover forgotten vertices only."""

    def _caps(self, key):
        if not self.cap_support:
            return [math.inf] * len(key)
        tau, lo = self.tau, self.lo
        return [max(tau[v] - lo[v] - b, 0) for v, b in zip(key, self._before(key))]

    def _bag_paid(self, key):
        return 0

    def _introduce(self, child, u):
        table: dict = {}
        for key, front in child.items():
            for p in range(len(key) + 1):
                nkey = key[:p] + (u,) + key[p:]
                cap = self._caps(nkey)
                for ext, cost, trail in front:
                    nxt = ext[:p] + (0,) + ext[p:]
                    nxt = tuple(min(a, b) for a, b in zip(nxt, cap))
                    _insert(table.setdefault(nkey, []), nxt, cost, trail)
        return table

    def _forget(self, child, u):
        masks, tau = self.g.masks, self.tau
        lo, hi = self.lo[u], self.hi[u]
        table: dict = {}
        for key, front in child.items():
            idx = key.index(u)
            inside = self._before(key)[idx]
            nkey = key[:idx] + key[idx + 1:]
            cap = self._caps(nkey)
            bump = tuple(1 if i >= idx and (masks[u] >> v) & 1 else 0 for i, v in enumerate(nkey))
            for ext, cost, trail in front:
                su = max(tau[u] - inside - ext[idx], lo)
                if su > hi or cost + su > self.upper:
                    continue
                rest = ext[:idx] + ext[idx + 1:]
                nxt = tuple(min(a + b, c) for a, b, c in zip(rest, bump, cap))
                _insert(table.setdefault(nkey, []), nxt, cost + su, (u, su, trail))
        return table

    def query(self, t: int, sigma: Mapping[int, int], order, rho: Mapping[int, int]) -> float:
        """Minimum cost of the local cascade ``(sigma, order, rho)`` at node ``t``."""
        if any(not self.lo[v] <= sigma[v] <= self.hi[v] for v in order):
            return math.inf
        front = self.tables[t].get(tuple(order), [])
        want = [max(self.tau[v] - sigma[v] - rho.get(v, 0) - b, 0)
                for v, b in zip(order, self._before(order))]
        best = min((c for ext, c, _ in front if all(a >= b for a, b in zip(ext, want))), default=math.inf)
        return best + sum(sigma[v] for v in order)


_DP_CLASSES = {"deferred": DeferredDP, "explicit": ExplicitDP}


def _feasible_start(g, tau, hi):
    """Greedy incentive if it respects ``hi``, else ``hi`` itself."""
    sigma = greedy_incentive(g, tau)
    if all(s <= hi[v] for v, s in sigma.items()):
        return sigma
    return dict(hi)


def prepare_nice(g: Graph, nice: Optional[NiceTreeDecomposition]) -> NiceTreeDecomposition:
    if nice is None:
        return make_nice(heuristic_td(g))
    nice.check()
    ok, problems = validate_td(g, nice.to_td())
    if not ok:
        raise InvalidDecomposition("; ".join(problems))
    return nice


def solve_pi_treewidth(
    g: Graph,
    tau: Mapping[int, int],
    nice: Optional[NiceTreeDecomposition] = None,
    *,
    method: str = "deferred",
    caps: Optional[Mapping[int, int]] = None,
    max_states: Optional[int] = None,
    canonical: bool = False,
) -> IncentiveSolution:
    """Minimum-weight partial incentive of ``(g, tau)``.

    Thresholds are normalized below ``n`` first and the forced excess is
    added back.  Without ``nice`` a min-fill decomposition is used.
    ``caps`` restricts the incentive at chosen vertices (callers must know
    an optimum survives the restriction).  ``canonical`` re-solves with
    prefixes fixed so the returned optimum is lexicographically smallest;
    otherwise ties go to whichever optimum the table order meets first.
    """
    if method not in _DP_CLASSES:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    tau_n, base = normalize_thresholds(g, tau)
    nice = prepare_nice(g, nice)
    lo, hi = search_bounds(g, tau_n, caps)
    if any(lo[v] > hi[v] for v in g.vertices):
        raise ValueError("caps exclude every feasible incentive")
    if max_states is not None:
        est = estimate_states(nice, lo, hi, method)
        if est > max_states:
            raise StateLimitExceeded(f"estimated {est} states exceeds cap {max_states}")
    upper = weight(_feasible_start(g, tau_n, hi))
    dp = _DP_CLASSES[method]

    res = dp(g, tau_n, nice, lo, hi, upper=upper).run()
    if res is None:
        raise RuntimeError("DP found no partial incentive; the upper bound guarantees one exists")
    best, sigma = res
    if canonical:
        lo, hi = dict(lo), dict(hi)
        for v in g.vertices:
            for s in range(lo[v], hi[v] + 1):
                lo[v] = hi[v] = s
                r = dp(g, tau_n, nice, lo, hi, upper=best).run()
                if r is not None and r[0] == best:
                    sigma = r[1]
                    break
    total = {v: sigma.get(v, 0) + base[v] for v in g.vertices}
    total = {v: s for v, s in total.items() if s}
    if not is_partial_incentive(g, tau, total):
        raise RuntimeError("DP reconstruction is not a partial incentive")
    return IncentiveSolution(weight(total), total)


def solve_dyn_treewidth(
    g: Graph,
    tau: Mapping[int, int],
    td: Optional[TreeDecomposition] = None,
    *,
    method: str = "deferred",
    max_states: Optional[int] = None,
) -> MonopolySolution:
    """Minimum dynamic monopoly through the path-attachment reduction.

    Each vertex with positive threshold gets a path of that many
    threshold-1 vertices; an optimal incentive of the extended instance
    maps back to a minimum monopoly.  Only path vertices are allowed an
    incentive, and at most 1 each: any optimum can be moved there without
    raising its weight.
    """
    if td is None:
        td = heuristic_td(g)
    ok, problems = validate_td(g, td)
    if not ok:
        raise InvalidDecomposition("; ".join(problems))
    ext = dyn_to_pi(g, tau, td)
    caps = {v: 0 for v in g.vertices}
    caps.update({p: 1 for path in ext.paths.values() for p in path})
    sol = solve_pi_treewidth(ext.graph, ext.tau, make_nice(ext.td), method=method, caps=caps,
                             max_states=max_states)
    d = tuple(u for u in g.vertices
              if sol.sigma.get(u, 0) + sum(sol.sigma.get(p, 0) for p in ext.paths.get(u, ())) >= 1)
    return MonopolySolution(len(d), d, dict(sol.sigma))
