"""Text formats for graphs, tree-decompositions and interval models.

Graph files::

    c comment
    p tss <n> <m>
    e <u> <v>
    t <u> <threshold>      (default 1)
    k <u> <budget>

Tree-decompositions use the PACE 2017 layout (``s td``, ``b`` lines, bare
tree edges).  Interval files hold ``i <vertex> <left> <right>`` with decimal
or ``p/q`` rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple, Optional

from .decomposition import TreeDecomposition
from .errors import FormatError
from .graph import BudgetFn, Graph, ThresholdFn
from .intervals import Interval


class GraphFile(NamedTuple):
    graph: Graph
    tau: ThresholdFn
    # None when the file has no ``k`` lines.
    kappa: Optional[BudgetFn]


def _ints(parts, lineno, count):
    if len(parts) != count:
        raise FormatError(f"expected {count} fields, got {len(parts)}", lineno)
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise FormatError(f"non-integer field in {' '.join(parts)!r}", lineno) from None


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if parts and parts[0] != "c":
            yield lineno, parts


def parse_graph(text: str) -> GraphFile:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    tau: dict[int, int] = {}
    kappa: dict[int, int] = {}
    for lineno, parts in _lines(text):
        tag, rest = parts[0], parts[1:]
        if tag == "p":
            if n is not None:
                raise FormatError("second p line", lineno)
            if len(rest) != 3 or rest[0] != "tss":
                raise FormatError("header must read 'p tss <n> <m>'", lineno)
            n, m = _ints(rest[1:], lineno, 2)
            if n < 0 or m < 0:
                raise FormatError("negative size in header", lineno)
            continue
        if n is None:
            raise FormatError("missing 'p tss' header before data", lineno)
        if tag == "e":
            u, v = _ints(rest, lineno, 2)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"edge {u}-{v} outside 1..{n}", lineno)
            if u == v:
                raise FormatError(f"loop at {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"repeated edge {u}-{v}", lineno)
            seen.add(key)
            edges.append(key)
        elif tag in ("t", "k"):
            u, val = _ints(rest, lineno, 2)
            if not 1 <= u <= n:
                raise FormatError(f"vertex {u} outside 1..{n}", lineno)
            target = tau if tag == "t" else kappa
            if u in target:
                raise FormatError(f"repeated {tag} line for vertex {u}", lineno)
            target[u] = val
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise FormatError("missing 'p tss' header")
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    g = Graph.from_edges(n, edges)
    full_tau = {v: tau.get(v, 1) for v in g.vertices}
    return GraphFile(g, full_tau, kappa if kappa else None)


def emit_graph(g: Graph, tau: Optional[Mapping[int, int]] = None,
               kappa: Optional[Mapping[int, int]] = None, comments=()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p tss {g.n} {g.m}")
    out.extend(f"e {u} {v}" for u, v in g.edges)
    if tau is not None:
        out.extend(f"t {v} {tau[v]}" for v in g.vertices)
    if kappa is not None:
        out.extend(f"k {v} {kappa[v]}" for v in g.vertices)
    return "\n".join(out) + "\n"


def parse_td(text: str) -> TreeDecomposition:
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for lineno, parts in _lines(text):
        if parts[0] == "s":
            if header is not None:
                raise FormatError("second s line", lineno)
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError("header must read 's td <bags> <maxbag> <n>'", lineno)
            header = _ints(parts[2:], lineno, 3)
            continue
        if header is None:
            raise FormatError("missing 's td' header before data", lineno)
        if parts[0] == "b":
            if len(parts) < 2:
                raise FormatError("bag line without id", lineno)
            ids = _ints(parts[1:], lineno, len(parts) - 1)
            if ids[0] in bags:
                raise FormatError(f"repeated bag {ids[0]}", lineno)
            if not 1 <= ids[0] <= header[0]:
                raise FormatError(f"bag id {ids[0]} outside 1..{header[0]}", lineno)
            bags[ids[0]] = frozenset(ids[1:])
        else:
            a, b = _ints(parts, lineno, 2)
            edges.append((a, b))
    if header is None:
        raise FormatError("missing 's td' header")
    nbags, maxbag, _ = header
    for t in range(1, nbags + 1):
        bags.setdefault(t, frozenset())
    if max((len(b) for b in bags.values()), default=0) > maxbag:
        raise FormatError(f"a bag exceeds the declared size {maxbag}")
    for a, b in edges:
        if a not in bags or b not in bags:
            raise FormatError(f"tree edge {a} {b} names an unknown bag")
    return TreeDecomposition(bags, tuple(edges))


def emit_td(td: TreeDecomposition, n: int) -> str:
    ids = {t: i + 1 for i, t in enumerate(td.nodes)}
    maxbag = max((len(b) for b in td.bags.values()), default=0)
    out = [f"s td {len(ids)} {maxbag} {n}"]
    for t in td.nodes:
        out.append(" ".join(["b", str(ids[t])] + [str(v) for v in sorted(td.bags[t])]))
    out.extend(f"{ids[a]} {ids[b]}" for a, b in td.edges)
    return "\n".join(out) + "\n"


def _rational(token, lineno):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad number {token!r}", lineno) from None


def parse_intervals(text: str) -> dict[int, Interval]:
    out: dict[int, Interval] = {}
    for lineno, parts in _lines(text):
        if parts[0] != "i" or len(parts) != 4:
            raise FormatError("expected 'i <vertex> <left> <right>'", lineno)
        (v,) = _ints(parts[1:2], lineno, 1)
        lo, hi = _rational(parts[2], lineno), _rational(parts[3], lineno)
        if lo > hi:
            raise FormatError(f"interval of {v} has left > right", lineno)
        if v in out:
            raise FormatError(f"repeated interval for vertex {v}", lineno)
        out[v] = (lo, hi)
    return out


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else str(x)


def emit_intervals(intervals: Mapping[int, Interval]) -> str:
    return "".join(f"i {v} {_fmt(a)} {_fmt(b)}\n" for v, (a, b) in sorted(intervals.items()))
