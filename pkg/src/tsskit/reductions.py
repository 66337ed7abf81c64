"""Instance transformers between vertex cover, dynamic monopolies and partial incentives.

New vertices are appended after ``1..n`` in a fixed order so the output is
reproducible byte for byte.
"""

from __future__ import annotations

from typing import Mapping, NamedTuple, Optional

from .decomposition import TreeDecomposition
from .graph import Graph, ThresholdFn


def vc_to_dyn(g: Graph) -> tuple[Graph, ThresholdFn]:
    """Monopoly instance whose optimum equals the minimum vertex cover of ``g``.

    Every edge ``uv`` (in sorted order) gets ``n`` fresh vertices joined to
    both ends, with threshold 1; an original vertex gets threshold
    ``degree * n``.
    """
    n = g.n
    edges = list(g.edges)
    nxt = n
    for u, v in g.edges:
        for _ in range(n):
            nxt += 1
            edges.extend([(u, nxt), (v, nxt)])
    tau = {v: g.degree(v) * n for v in g.vertices}
    tau.update({w: 1 for w in range(n + 1, nxt + 1)})
    return Graph.from_edges(nxt, edges), tau


class PathAttachment(NamedTuple):
    graph: Graph
    tau: ThresholdFn
    td: Optional[TreeDecomposition]
    paths: dict[int, tuple[int, ...]]


def dyn_to_pi(g: Graph, tau: Mapping[int, int], td: Optional[TreeDecomposition] = None) -> PathAttachment:
    """Partial-incentive instance whose optimum equals ``dyn(g, tau)``.

    Each vertex ``u`` with ``tau(u) > 0`` (in vertex order) gets a fresh path
    ``v_1 ... v_k`` of order ``k = tau(u)``, every path vertex joined to
    ``u`` and given threshold 1.  A decomposition, if supplied, is extended
    by a chain of bags ``{u, v_1}, {u, v_1, v_2}, ..., {u, v_(k-1), v_k}``
    hung off a node containing ``u``.
    """
    edges = list(g.edges)
    new_tau = {v: tau[v] for v in g.vertices}
    paths: dict[int, tuple[int, ...]] = {}
    nxt = g.n
    for u in g.vertices:
        k = tau[u]
        if k <= 0:
            continue
        path = tuple(range(nxt + 1, nxt + k + 1))
        nxt += k
        paths[u] = path
        for i, p in enumerate(path):
            edges.append((u, p))
            if i:
                edges.append((path[i - 1], p))
            new_tau[p] = 1
    g2 = Graph.from_edges(nxt, edges)
    td2 = None
    if td is not None:
        bags = dict(td.bags)
        tree_edges = list(td.edges)
        home = {}
        for t in sorted(bags):
            for v in bags[t]:
                home.setdefault(v, t)
        next_id = max(bags, default=0) + 1
        for u, path in paths.items():
            prev = home[u]
            for i, p in enumerate(path):
                bags[next_id] = frozenset({u, p} | ({path[i - 1]} if i else set()))
                tree_edges.append((prev, next_id))
                prev = next_id
                next_id += 1
        td2 = TreeDecomposition(bags, tuple(tree_edges))
    return PathAttachment(g2, new_tau, td2, paths)
