"""Exhaustive solvers used as ground truth.

Everything here works on bitmasks and its own fixed-point loop so that it
shares no code path with the algorithms it is used to check.  Ties are
broken towards the lexicographically smallest witness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Optional, Union

from .errors import LimitExceeded
from .graph import Graph

DEFAULT_LIMIT = 20


def oracle_limit(limit: Optional[int] = None) -> int:
    if limit is not None:
        return limit
    env = os.environ.get("TSSKIT_ORACLE_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: Union[tuple[int, ...], dict[int, int]]


def _check(g: Graph, limit: Optional[int]) -> None:
    cap = oracle_limit(limit)
    if g.n > cap:
        raise LimitExceeded(f"instance has {g.n} vertices, oracle limit is {cap}")


def _closure(masks, thresholds, n, start):
    h = start
    changed = True
    while changed:
        changed = False
        for v in range(1, n + 1):
            if not (h >> v) & 1 and (masks[v] & h).bit_count() >= thresholds[v]:
                h |= 1 << v
                changed = True
    return h


def _full(n):
    return ((1 << (n + 1)) - 1) ^ 1


def _mask(vs):
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def brute_dyn(g: Graph, tau: Mapping[int, int], limit: Optional[int] = None) -> OracleResult:
    """Minimum dynamic monopoly by enumeration in order of cardinality."""
    _check(g, limit)
    th = [0] + [tau[v] for v in g.vertices]
    full = _full(g.n)
    for size in range(g.n + 1):
        for d in combinations(g.vertices, size):
            if _closure(g.masks, th, g.n, _mask(d)) == full:
                return OracleResult(size, d)
    raise AssertionError("V(G) is always a dynamic monopoly")


def _bounded_vectors(caps: list[int], total: int) -> Iterator[list[int]]:
    """Vectors with ``0 <= x[i] <= caps[i]`` summing to ``total``, in lex order."""
    k = len(caps)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    vec = [0] * k

    def rec(i, left):
        if i == k:
            if left == 0:
                yield list(vec)
            return
        lo = max(0, left - suffix[i + 1])
        for x in range(lo, min(caps[i], left) + 1):
            vec[i] = x
            yield from rec(i + 1, left - x)
        vec[i] = 0

    if total <= suffix[0]:
        yield from rec(0, total)


def brute_pi(
    g: Graph,
    tau: Mapping[int, int],
    limit: Optional[int] = None,
    capped: bool = True,
) -> OracleResult:
    """Minimum-weight partial incentive by enumeration in order of weight.

    With ``capped`` each value is searched in ``0..max(tau(u), 0)``;
    otherwise in ``0..max(tau(u), 0) + 1`` so tests can confirm the cap
    loses nothing.
    """
    _check(g, limit)
    caps = [max(tau[v], 0) + (0 if capped else 1) for v in g.vertices]
    full = _full(g.n)
    for w in range(sum(caps) + 1):
        for vec in _bounded_vectors(caps, w):
            th = [0] + [tau[v] - vec[v - 1] for v in g.vertices]
            if _closure(g.masks, th, g.n, 0) == full:
                return OracleResult(w, {v: vec[v - 1] for v in g.vertices if vec[v - 1]})
    raise AssertionError("sigma = tau+ is always a partial incentive")


def _degenerate(masks, kappa, members):
    # Peel any member with at most kappa(u) neighbors left; order-free by monotonicity.
    rest = members
    while rest:
        for v in range(1, len(kappa)):
            if (rest >> v) & 1 and (masks[v] & rest).bit_count() <= kappa[v]:
                rest &= ~(1 << v)
                break
        else:
            return False
    return True


def brute_alpha(g: Graph, kappa: Mapping[int, int], limit: Optional[int] = None) -> OracleResult:
    """Maximum ``kappa``-degenerate set by enumeration in decreasing cardinality."""
    _check(g, limit)
    ka = [0] + [kappa[v] for v in g.vertices]
    for size in range(g.n, -1, -1):
        for s in combinations(g.vertices, size):
            if _degenerate(g.masks, ka, _mask(s)):
                return OracleResult(size, s)
    raise AssertionError("the empty set is always degenerate")


def brute_vertex_cover(g: Graph, limit: Optional[int] = None) -> OracleResult:
    _check(g, limit)
    for size in range(g.n + 1):
        for c in combinations(g.vertices, size):
            cs = set(c)
            if all(u in cs or v in cs for u, v in g.edges):
                return OracleResult(size, c)
    raise AssertionError("V(G) is always a vertex cover")


def is_monopoly_mask(g: Graph, tau: Mapping[int, int], d) -> bool:
    """Bitmask monopoly test, independent of :func:`tsskit.graph.hull`."""
    th = [0] + [tau[v] for v in g.vertices]
    return _closure(g.masks, th, g.n, _mask(d)) == _full(g.n)
