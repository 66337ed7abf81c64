"""Tree-decompositions: validation, nice form, and a min-fill heuristic."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from .errors import InvalidDecomposition
from .graph import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags on the nodes of a tree.  Node ids are arbitrary hashable ints."""

    bags: dict[int, frozenset[int]]
    edges: tuple[tuple[int, int], ...] = ()

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags.values()), default=0) - 1

    @property
    def nodes(self) -> list[int]:
        return sorted(self.bags)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {t: [] for t in self.bags}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for t in adj:
            adj[t].sort()
        return adj

    def default_root(self) -> int:
        """Node holding the lowest vertex id (lowest node id on ties)."""
        best = None
        for t in self.nodes:
            if self.bags[t]:
                key = (min(self.bags[t]), t)
                if best is None or key < best:
                    best = key
        return best[1] if best else self.nodes[0]

    def rooted(self, root: Optional[int] = None) -> tuple[int, dict[int, Optional[int]], list[int]]:
        """Return ``(root, parent, bfs_order)``."""
        if root is None:
            root = self.default_root()
        adj = self.adjacency()
        parent: dict[int, Optional[int]] = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            t = queue.popleft()
            for s in adj[t]:
                if s not in parent:
                    parent[s] = t
                    order.append(s)
                    queue.append(s)
        return root, parent, order

    def subtree_vertices(self, root: Optional[int] = None) -> dict[int, frozenset[int]]:
        """Vertex set of the subgraph below each node for the given rooting."""
        root, parent, order = self.rooted(root)
        below = {t: set(self.bags[t]) for t in order}
        for t in reversed(order):
            if parent[t] is not None:
                below[parent[t]] |= below[t]
        return {t: frozenset(s) for t, s in below.items()}


def validate_td(g: Graph, td: TreeDecomposition) -> tuple[bool, list[str]]:
    """Check the tree shape and the three decomposition axioms.

    Returns ``(ok, diagnostics)``; diagnostics name every violation found,
    tree shape first, then coverage, edges, and connectivity of occurrences.
    """
    problems = []
    nodes = td.bags.keys()
    if not nodes:
        if g.n:
            problems.append("decomposition has no nodes")
        return not problems, problems
    for a, b in td.edges:
        if a not in nodes or b not in nodes:
            problems.append(f"tree edge {a}-{b} references an unknown node")
    if problems:
        return False, problems
    tree = nx.Graph()
    tree.add_nodes_from(nodes)
    tree.add_edges_from(td.edges)
    if not nx.is_tree(tree):
        problems.append("node graph is not a tree")
        return False, problems
    covered = set().union(*td.bags.values())
    missing = set(g.vertices) - covered
    if missing:
        problems.append(f"vertices not covered by any bag: {sorted(missing)}")
    stray = covered - set(g.vertices)
    if stray:
        problems.append(f"bags mention unknown vertices: {sorted(stray)}")
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags.values()):
            problems.append(f"edge {u}-{v} not inside any bag")
            break
    for v in sorted(covered):
        occ = [t for t in nodes if v in td.bags[t]]
        if not nx.is_connected(tree.subgraph(occ)):
            problems.append(f"nodes containing vertex {v} do not induce a subtree")
            break
    return not problems, problems


def heuristic_td(g: Graph) -> TreeDecomposition:
    """Min-fill elimination decomposition; no optimality promise."""
    if g.n == 0:
        return TreeDecomposition({1: frozenset()})
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    _, tree = treewidth_min_fill_in(h)
    bags = sorted(tree.nodes, key=lambda b: sorted(b))
    ids = {b: i + 1 for i, b in enumerate(bags)}
    edges = tuple(sorted(tuple(sorted((ids[a], ids[b]))) for a, b in tree.edges))
    return TreeDecomposition({ids[b]: frozenset(b) for b in bags}, edges)


LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass
class NiceTreeDecomposition:
    """Rooted binary decomposition with leaf/introduce/forget/join nodes.

    Nodes are numbered so that every child precedes its parent; the root is
    the last node and has an empty bag.
    """

    kind: list[str] = field(default_factory=list)
    vertex: list[Optional[int]] = field(default_factory=list)
    bag: list[frozenset[int]] = field(default_factory=list)
    children: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def root(self) -> int:
        return len(self.kind) - 1

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bag), default=0) - 1

    def __len__(self) -> int:
        return len(self.kind)

    def _add(self, kind, vertex, bag, children):
        self.kind.append(kind)
        self.vertex.append(vertex)
        self.bag.append(frozenset(bag))
        self.children.append(tuple(children))
        return len(self.kind) - 1

    def to_td(self) -> TreeDecomposition:
        edges = tuple((c + 1, t + 1) for t, cs in enumerate(self.children) for c in cs)
        return TreeDecomposition({t + 1: b for t, b in enumerate(self.bag)}, edges)

    def check(self) -> None:
        """Raise InvalidDecomposition if a node breaks the nice-form rules."""
        for t, kind in enumerate(self.kind):
            cs = self.children[t]
            if any(c >= t for c in cs):
                raise InvalidDecomposition(f"node {t} has a child numbered after it")
            x = self.bag[t]
            if kind == LEAF:
                ok = not cs and not x
            elif kind == JOIN:
                ok = len(cs) == 2 and all(self.bag[c] == x for c in cs)
            elif kind == INTRODUCE:
                ok = len(cs) == 1 and x - self.bag[cs[0]] == {self.vertex[t]} and self.bag[cs[0]] <= x
            elif kind == FORGET:
                ok = len(cs) == 1 and self.bag[cs[0]] - x == {self.vertex[t]} and x <= self.bag[cs[0]]
            else:
                ok = False
            if not ok:
                raise InvalidDecomposition(f"node {t} is not a valid {kind} node")
        if self.kind and self.bag[self.root]:
            raise InvalidDecomposition("root bag is not empty")


def make_nice(td: TreeDecomposition, root: Optional[int] = None, g: Optional[Graph] = None) -> NiceTreeDecomposition:
    """Convert ``td`` into nice form rooted at ``root``.

    Every input bag appears at some node, the width is unchanged, and the
    root bag is empty.  The node count is at most ``(3w + 5) * |T| + w + 1``
    for an input with ``|T|`` nodes and width ``w``.  When ``g`` is given
    the input is validated against it first.
    """
    if g is not None:
        ok, problems = validate_td(g, td)
        if not ok:
            raise InvalidDecomposition("; ".join(problems))
    elif td.bags:
        tree = nx.Graph()
        tree.add_nodes_from(td.bags)
        tree.add_edges_from(td.edges)
        if not nx.is_tree(tree):
            raise InvalidDecomposition("node graph is not a tree")
    nice = NiceTreeDecomposition()
    if not td.bags:
        nice._add(LEAF, None, (), ())
        return nice
    root, parent, order = td.rooted(root)
    kids: dict[int, list[int]] = {t: [] for t in order}
    for t in order:
        if parent[t] is not None:
            kids[parent[t]].append(t)
    top: dict[int, int] = {}
    for t in reversed(order):
        xt = td.bags[t]
        subs = []
        for c in kids[t]:
            x, bag = top.pop(c), set(td.bags[c])
            for v in sorted(bag - xt):
                bag.discard(v)
                x = nice._add(FORGET, v, bag, (x,))
            for v in sorted(xt - bag):
                bag.add(v)
                x = nice._add(INTRODUCE, v, bag, (x,))
            subs.append(x)
        if not subs:
            x, bag = nice._add(LEAF, None, (), ()), set()
            for v in sorted(xt):
                bag.add(v)
                x = nice._add(INTRODUCE, v, bag, (x,))
            subs.append(x)
        x = subs[0]
        for y in subs[1:]:
            x = nice._add(JOIN, None, xt, (x, y))
        top[t] = x
    x, bag = top[root], set(td.bags[root])
    for v in sorted(td.bags[root]):
        bag.discard(v)
        x = nice._add(FORGET, v, bag, (x,))
    return nice
