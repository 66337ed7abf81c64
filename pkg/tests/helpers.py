"""Small fixtures and hypothesis strategies shared by the test modules."""

from itertools import combinations, permutations

from hypothesis import strategies as st

from tsskit.graph import Graph


def path3():
    return Graph.from_edges(3, [(1, 2), (2, 3)])


def triangle():
    return Graph.from_edges(3, [(1, 2), (2, 3), (1, 3)])


def star3():
    # center 1, leaves 2..4
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def complete(n):
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def instances(draw, min_n=1, max_n=8, low=-1, extra=1):
    """Graph with thresholds in ``[low, degree + extra]``."""
    g = draw(graphs(min_n, max_n))
    tau = {v: draw(st.integers(low, g.degree(v) + extra)) for v in g.vertices}
    return g, tau


def orders_extending(vertices, fixed):
    """All linear orders of ``vertices`` that keep ``fixed`` in its given relative order."""
    pos = {v: i for i, v in enumerate(fixed)}
    for perm in permutations(vertices):
        seq = [pos[v] for v in perm if v in pos]
        if seq == sorted(seq):
            yield perm
