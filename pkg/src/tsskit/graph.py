"""Graphs with vertex thresholds, the activation hull, and solution predicates.

Vertices are the integers ``1..n``.  Threshold, incentive and budget
functions are plain ``dict`` objects keyed by vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Optional

ThresholdFn = dict[int, int]
IncentiveFn = dict[int, int]
BudgetFn = dict[int, int]

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``1..n``.

    ``adj[v]`` is the ascending tuple of neighbors of ``v``; ``adj[0]`` is an
    unused empty placeholder so that vertices index directly.
    """

    n: int
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n + 1:
            raise ValueError("adjacency must have n + 1 entries")
        for v in range(1, self.n + 1):
            nbrs = self.adj[v]
            if any(a >= b for a, b in zip(nbrs, nbrs[1:])):
                raise ValueError(f"neighbors of {v} not strictly ascending")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"loop at {v}")
                if not 1 <= u <= self.n or v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency at {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside 1..{n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in self.vertices for v in self.adj[u] if u < v)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood bitmasks, bit ``v`` set for neighbor ``v``."""
        out = [0] * (self.n + 1)
        for v in self.vertices:
            for u in self.adj[v]:
                out[v] |= 1 << u
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``1..k``.

        Returns the subgraph and ``orig`` with ``orig[i]`` the original id of
        new vertex ``i`` (``orig[0]`` is 0).
        """
        orig = [0] + sorted(set(vertices))
        new = {v: i for i, v in enumerate(orig) if i}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph.from_edges(len(orig) - 1, edges), orig

    def components(self) -> list[list[int]]:
        seen = [False] * (self.n + 1)
        comps = []
        for s in self.vertices:
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def outside_neighbors(self, a: Iterable[int]) -> frozenset[int]:
        """Vertices outside ``a`` adjacent to some vertex of ``a``."""
        a = set(a)
        return frozenset(u for v in a for u in self.adj[v] if u not in a)

    def boundary(self, a: Iterable[int]) -> frozenset[int]:
        """Vertices of ``a`` with a neighbor outside ``a``."""
        a = set(a)
        return frozenset(v for v in a if any(u not in a for u in self.adj[v]))


class Activation(NamedTuple):
    vertex: int
    round: int
    active_neighbors: int


@dataclass(frozen=True)
class CascadeTrace:
    """Activation certificate for a hull.

    Seeds are recorded in round 0 with their active-neighbor count at the
    moment of seeding; every later entry had at least its threshold.
    """

    order: tuple[Activation, ...]

    def vertices(self) -> frozenset[int]:
        return frozenset(a.vertex for a in self.order)

    def replay(self, g: Graph, tau: Mapping[int, int], seed: Iterable[int]) -> frozenset[int]:
        """Re-check the trace step by step and return the activated set.

        Raises ValueError on the first step that does not hold.
        """
        seed = set(seed)
        active: set[int] = set()
        last_round = 0
        for vertex, rnd, count in self.order:
            if vertex in active:
                raise ValueError(f"vertex {vertex} activated twice")
            if rnd < last_round:
                raise ValueError("rounds not monotone")
            last_round = rnd
            actual = sum(1 for u in g.adj[vertex] if u in active)
            if actual != count:
                raise ValueError(f"vertex {vertex}: recorded {count} active neighbors, saw {actual}")
            if rnd == 0:
                if vertex not in seed:
                    raise ValueError(f"round-0 vertex {vertex} is not a seed")
            elif count < tau[vertex]:
                raise ValueError(f"vertex {vertex} activated below threshold")
            active.add(vertex)
        if not seed <= active:
            raise ValueError("trace misses seed vertices")
        return frozenset(active)


def hull(g: Graph, tau: Mapping[int, int], seed: Iterable[int] = ()) -> tuple[frozenset[int], CascadeTrace]:
    """Closure of ``seed`` under "activate once ``tau(u)`` neighbors are active".

    Runs in synchronous rounds with a counter per vertex.  Vertices with a
    non-positive threshold enter in round 1 if not seeded.
    """
    active = bytearray(g.n + 1)
    count = [0] * (g.n + 1)
    order: list[Activation] = []

    def activate(v, rnd):
        order.append(Activation(v, rnd, count[v]))
        active[v] = 1
        for u in g.adj[v]:
            count[u] += 1

    for v in sorted(set(seed)):
        if not 1 <= v <= g.n:
            raise ValueError(f"seed vertex {v} outside 1..{g.n}")
        activate(v, 0)
    frontier = [v for v in g.vertices if not active[v] and count[v] >= tau[v]]
    rnd = 0
    while frontier:
        rnd += 1
        touched = []
        for v in frontier:
            if active[v]:
                continue
            activate(v, rnd)
            touched.extend(g.adj[v])
        frontier = sorted({u for u in touched if not active[u] and count[u] >= tau[u]})
    return frozenset(v for v in g.vertices if active[v]), CascadeTrace(tuple(order))


def hull_set(g: Graph, tau: Mapping[int, int], seed: Iterable[int] = ()) -> frozenset[int]:
    return hull(g, tau, seed)[0]


def weight(f: Mapping[int, int]) -> int:
    """Sum of the values of ``f``; raises OverflowError outside signed 64-bit range."""
    total = 0
    for value in f.values():
        total += value
        if not -INT64_MAX - 1 <= total <= INT64_MAX:
            raise OverflowError("weight exceeds 64-bit range")
    return total


def is_dynamic_monopoly(g: Graph, tau: Mapping[int, int], d: Iterable[int]) -> bool:
    return len(hull_set(g, tau, d)) == g.n


def is_partial_incentive(g: Graph, tau: Mapping[int, int], sigma: Mapping[int, int]) -> bool:
    if any(sigma.get(v, 0) < 0 for v in g.vertices):
        return False
    reduced = {v: tau[v] - sigma.get(v, 0) for v in g.vertices}
    return len(hull_set(g, reduced)) == g.n


def is_degenerate(g: Graph, kappa: Mapping[int, int], i: Iterable[int]) -> tuple[bool, Optional[list[int]]]:
    """Decide whether ``i`` is ``kappa``-degenerate.

    Peels from the back: any member with at most ``kappa(u)`` neighbors left
    in the set can go last.  Returns the witness order (earliest first) when
    one exists.
    """
    remaining = set(i)
    inside = {v: sum(1 for u in g.adj[v] if u in remaining) for v in remaining}
    queue = deque(sorted(v for v in remaining if inside[v] <= kappa[v]))
    queued = set(queue)
    peeled = []
    while queue:
        v = queue.popleft()
        remaining.discard(v)
        peeled.append(v)
        for u in g.adj[v]:
            if u in remaining:
                inside[u] -= 1
                if u not in queued and inside[u] <= kappa[u]:
                    queued.add(u)
                    queue.append(u)
    if remaining:
        return False, None
    peeled.reverse()
    return True, peeled


def dual_threshold(g: Graph, kappa: Mapping[int, int]) -> ThresholdFn:
    return {v: g.degree(v) - kappa[v] for v in g.vertices}


def dual_budget(g: Graph, tau: Mapping[int, int]) -> BudgetFn:
    return {v: g.degree(v) - tau[v] for v in g.vertices}


def normalize_thresholds(g: Graph, tau: Mapping[int, int]) -> tuple[ThresholdFn, IncentiveFn]:
    """Split ``tau`` into thresholds below ``n`` plus a forced incentive.

    A vertex can never have more than ``n - 1`` active neighbors, so the
    excess above ``n - 1`` must be paid by any partial incentive.
    """
    base = {v: max(tau[v] - (g.n - 1), 0) for v in g.vertices}
    return {v: tau[v] - base[v] for v in g.vertices}, base


def constant(g: Graph, value: int) -> dict[int, int]:
    return {v: value for v in g.vertices}
