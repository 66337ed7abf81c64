"""Command-line front end.

Exit status is 0 on success, 1 for invalid input or an infeasible or
failed verification, and 2 for usage errors.  Reports go to stdout and
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import generators as gen
from .approx import approx_dyn_td, baker_ptas_degenerate
from .decomposition import heuristic_td, make_nice
from .errors import TsskitError
from .graph import (
    constant,
    hull,
    is_degenerate,
    is_dynamic_monopoly,
    is_partial_incentive,
)
from .io import emit_graph, emit_intervals, emit_td, parse_graph, parse_intervals, parse_td
from .oracle import brute_alpha, brute_dyn, brute_pi, brute_vertex_cover
from .pi_interval import solve_pi_interval
from .reductions import dyn_to_pi, vc_to_dyn
from .twdp import estimate_states, prepare_nice, search_bounds, solve_dyn_treewidth, solve_pi_treewidth

DEFAULT_MAX_STATES = 5_000_000


class Report:
    """Scalar facts plus member lines, printable as text or as one JSON object."""

    def __init__(self):
        self.fields: dict = {}
        self.rows: list[tuple[str, str, list]] = []

    def add(self, key, value):
        self.fields[key] = value
        return self

    def rows_of(self, tag, key, items):
        """Member lines ``<tag> <item...>``; JSON lists them under ``key``."""
        self.rows.append((tag, key, list(items)))
        return self

    def text(self) -> str:
        out = []
        for k, v in self.fields.items():
            if isinstance(v, bool):
                out.append(f"{k}: {'true' if v else 'false'}")
            else:
                out.append(f"{k} {v}")
        for tag, _, items in self.rows:
            for it in items:
                parts = it if isinstance(it, tuple) else (it,)
                out.append(" ".join([tag] + [str(p) for p in parts]))
        return "\n".join(out) + "\n"

    def json(self) -> str:
        obj = dict(self.fields)
        for _, key, items in self.rows:
            obj[key] = [list(it) if isinstance(it, tuple) else it for it in items]
        return json.dumps(obj) + "\n"


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _vertex_list(text, g):
    if text is None or not text.strip():
        return []
    try:
        vs = sorted({int(x) for x in text.replace(",", " ").split()})
    except ValueError:
        raise TsskitError(f"bad vertex list {text!r}") from None
    bad = [v for v in vs if v not in g.vertices]
    if bad:
        raise TsskitError(f"vertices {bad} are not in the graph")
    return vs


def _sigma_arg(text, g):
    sigma = {}
    for item in (text or "").replace(",", " ").split():
        try:
            v, x = item.split(":")
            v, x = int(v), int(x)
        except ValueError:
            raise TsskitError(f"bad incentive entry {item!r}; use vertex:value") from None
        if v not in g.vertices or x < 0:
            raise TsskitError(f"incentive entry {item!r} out of range")
        sigma[v] = x
    return sigma


def _kappa(gf, default):
    if gf.kappa is None and default is None:
        raise TsskitError("graph has no k lines; pass --kappa-default")
    base = gf.kappa or {}
    fill = 0 if default is None else default
    return {v: base.get(v, fill) for v in gf.graph.vertices}


def cmd_hull(args, rep):
    gf = parse_graph(_read(args.graph))
    seed = _vertex_list(args.set, gf.graph)
    h, trace = hull(gf.graph, gf.tau, seed)
    rep.add("size", len(h)).add("complete", len(h) == gf.graph.n)
    rep.rows_of("a", "trace", [(a.vertex, a.round, a.active_neighbors) for a in trace.order])
    return 0


def cmd_verify(args, rep):
    gf = parse_graph(_read(args.graph))
    g = gf.graph
    if args.kind == "dyn":
        ok = is_dynamic_monopoly(g, gf.tau, _vertex_list(args.set, g))
    elif args.kind == "pi":
        ok = is_partial_incentive(g, gf.tau, _sigma_arg(args.sigma, g))
    else:
        ok, order = is_degenerate(g, _kappa(gf, args.kappa_default), _vertex_list(args.set, g))
        if ok:
            rep.rows_of("o", "order", order)
    rep.add("valid", ok)
    return 0 if ok else 1


def _incentive_report(rep, g, tau, sol):
    rep.add("weight", sol.weight)
    rep.rows_of("s", "sigma", sorted(sol.sigma.items()))
    rep.add("verified", is_partial_incentive(g, tau, sol.sigma))


def cmd_solve(args, rep):
    gf = parse_graph(_read(args.graph))
    g, tau = gf.graph, gf.tau
    if args.kind == "pi-tw":
        td = parse_td(_read(args.td)) if args.td else heuristic_td(g)
        nice = prepare_nice(g, make_nice(td, g=g))
        lo, hi = search_bounds(g, tau)
        rep.add("width", nice.width).add("states", estimate_states(nice, lo, hi, args.method))
        sol = solve_pi_treewidth(g, tau, nice, method=args.method, max_states=args.max_states,
                                 canonical=args.canonical)
        _incentive_report(rep, g, tau, sol)
    elif args.kind == "pi-interval":
        if not args.intervals or args.t is None:
            raise _Usage("solve pi-interval needs --intervals and --t")
        ivs = parse_intervals(_read(args.intervals))
        sol = solve_pi_interval(g, ivs, tau, args.t, max_states=args.max_states)
        _incentive_report(rep, g, tau, sol)
    else:
        td = parse_td(_read(args.td)) if args.td else heuristic_td(g)
        sol = solve_dyn_treewidth(g, tau, td, method=args.method, max_states=args.max_states)
        rep.add("size", sol.size)
        rep.rows_of("d", "d", list(sol.d))
        rep.add("verified", is_dynamic_monopoly(g, tau, sol.d))
    return 0


def cmd_oracle(args, rep):
    gf = parse_graph(_read(args.graph))
    g = gf.graph
    if args.kind == "dyn":
        r = brute_dyn(g, gf.tau, args.limit)
        rep.add("optimum", r.optimum).rows_of("d", "witness", list(r.witness))
    elif args.kind == "pi":
        r = brute_pi(g, gf.tau, args.limit)
        rep.add("optimum", r.optimum).rows_of("s", "witness", sorted(r.witness.items()))
    elif args.kind == "alpha":
        r = brute_alpha(g, _kappa(gf, args.kappa_default), args.limit)
        rep.add("optimum", r.optimum).rows_of("i", "witness", list(r.witness))
    else:
        r = brute_vertex_cover(g, args.limit)
        rep.add("optimum", r.optimum).rows_of("v", "witness", list(r.witness))
    return 0


def cmd_approx(args, rep):
    gf = parse_graph(_read(args.graph))
    g = gf.graph
    if args.kind == "dyn-td":
        td = parse_td(_read(args.td)) if args.td else heuristic_td(g)
        r = approx_dyn_td(g, gf.tau, td)
        rep.add("size", len(r.d)).add("width", r.width).add("strong", r.b)
        rep.rows_of("d", "d", list(r.d))
        rep.add("verified", is_dynamic_monopoly(g, gf.tau, r.d))
    else:
        if args.epsilon is None or args.outer is None:
            raise _Usage("approx degenerate needs --epsilon and --outer")
        kappa = _kappa(gf, args.kappa_default)
        r = baker_ptas_degenerate(g, kappa, args.epsilon, _vertex_list(args.outer, g),
                                  max_states=args.max_states, threads=args.threads)
        rep.add("size", len(r.members)).add("shift", r.shift).add("k", r.layers.k)
        rep.rows_of("i", "members", list(r.members))
        rep.add("verified", is_degenerate(g, kappa, r.members)[0])
    return 0


def cmd_reduce(args, rep):
    gf = parse_graph(_read(args.graph))
    if args.kind == "vc-dyn":
        g2, tau2 = vc_to_dyn(gf.graph)
        return emit_graph(g2, tau2)
    td = parse_td(_read(args.td)) if args.td else None
    ext = dyn_to_pi(gf.graph, gf.tau, td)
    if args.td_out:
        if ext.td is None:
            raise _Usage("--td-out needs --td")
        with open(args.td_out, "w", encoding="utf-8") as fh:
            fh.write(emit_td(ext.td, ext.graph.n))
    return emit_graph(ext.graph, ext.tau)


def cmd_gen(args, rep):
    fam = args.family
    comments = [f"gen {fam} seed {args.seed}"]
    if fam == "tree":
        g = gen.gen_tree(args.n, args.seed)
    elif fam == "grid":
        inst = gen.gen_grid(args.rows, args.cols, args.seed)
        g = inst.graph
        comments.append("outer " + ",".join(map(str, inst.outer)))
    elif fam == "random":
        g = gen.gen_random(args.n, args.p, args.seed, connected=args.connected)
    else:
        inst = gen.gen_interval(args.n, args.seed)
        g = inst.graph
        if args.intervals_out:
            with open(args.intervals_out, "w", encoding="utf-8") as fh:
                fh.write(emit_intervals(inst.intervals))
    if args.tau_max is not None:
        tau = gen.random_thresholds(g, args.seed + 1, 0, args.tau_max)
    else:
        tau = constant(g, args.tau)
    return emit_graph(g, tau, comments=comments)


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    common.add_argument("--threads", type=int, default=1, help="worker threads; output does not depend on it")
    common.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES,
                        help="refuse DP runs whose estimated table size exceeds this")

    p = _Parser(prog="tsskit", description="Dynamic monopolies, partial incentives and degenerate sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hull", parents=[common], help="hull of a seed set with its activation trace")
    h.add_argument("--graph", required=True)
    h.add_argument("--set", default="", help="seed vertices, comma separated")

    v = sub.add_parser("verify", parents=[common], help="check a candidate solution")
    v.add_argument("kind", choices=["dyn", "pi", "degenerate"])
    v.add_argument("--graph", required=True)
    v.add_argument("--set", default="", help="vertex set for dyn/degenerate")
    v.add_argument("--sigma", default="", help="incentive as vertex:value pairs")
    v.add_argument("--kappa-default", type=int, default=None)

    s = sub.add_parser("solve", parents=[common], help="exact solvers")
    s.add_argument("kind", choices=["pi-tw", "pi-interval", "dyn-exact"])
    s.add_argument("--graph", required=True)
    s.add_argument("--td", help="PACE .td file; min-fill heuristic when omitted")
    s.add_argument("--intervals")
    s.add_argument("--t", type=int)
    s.add_argument("--method", choices=["deferred", "explicit"], default="deferred")
    s.add_argument("--canonical", action="store_true", help="return the lexicographically smallest optimum")

    o = sub.add_parser("oracle", parents=[common], help="brute-force ground truth")
    o.add_argument("kind", choices=["dyn", "pi", "alpha", "vc"])
    o.add_argument("--graph", required=True)
    o.add_argument("--limit", type=int, help="vertex cap (default from TSSKIT_ORACLE_LIMIT or 20)")
    o.add_argument("--kappa-default", type=int, default=None)

    a = sub.add_parser("approx", parents=[common], help="approximation algorithms",
                       epilog="dyn-td accepts any valid decomposition; supply a small-width one "
                              "(e.g. O(sqrt n) for planar inputs) for a useful ratio.")
    a.add_argument("kind", choices=["dyn-td", "degenerate"])
    a.add_argument("--graph", required=True)
    a.add_argument("--td")
    a.add_argument("--kappa-default", type=int, default=None)
    a.add_argument("--epsilon", type=float)
    a.add_argument("--outer", help="outer-face vertices, comma separated")

    r = sub.add_parser("reduce", parents=[common], help="instance transformers")
    r.add_argument("kind", choices=["vc-dyn", "dyn-pi"])
    r.add_argument("--graph", required=True)
    r.add_argument("--td")
    r.add_argument("--td-out")

    g = sub.add_parser("gen", parents=[common], help="seeded instance generators")
    g.add_argument("family", choices=["tree", "grid", "random", "interval"])
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--rows", type=int, default=3)
    g.add_argument("--cols", type=int, default=3)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--connected", action="store_true")
    g.add_argument("--tau", type=int, default=1, help="constant threshold")
    g.add_argument("--tau-max", type=int, help="uniform random thresholds in [0, TAU_MAX] instead")
    g.add_argument("--intervals-out", help="where gen interval writes the representation")
    return p


COMMANDS = {
    "hull": cmd_hull,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "oracle": cmd_oracle,
    "approx": cmd_approx,
    "reduce": cmd_reduce,
    "gen": cmd_gen,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        rep = Report()
        out = COMMANDS[args.command](args, rep)
    except _Usage as exc:
        stderr.write(f"usage error: {exc}\n")
        return 2
    except (TsskitError, OSError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    if isinstance(out, str):
        stdout.write(out)
        return 0
    if args.command in ("solve", "approx") and rep.fields.get("verified") is False:
        stderr.write("error: self-verification failed\n")
        out = 1
    stdout.write(rep.json() if args.json else rep.text())
    return out


def main() -> None:
    sys.exit(run())
