"""Acceptance criteria, one check per criterion.

Each check returns ``(ok, detail)``.  Results are collected in ``RESULTS``
and printed as one ``PASS``/``FAIL`` line per criterion at the end of the
pytest run (see ``conftest.py``), or directly when run as a script.
"""

import math
import random
import time
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from tsskit.approx import approx_dyn_td, baker_ptas_degenerate
from tsskit.decomposition import heuristic_td, make_nice, validate_td
from tsskit.generators import gen_grid, gen_interval, gen_random, gen_tree, random_thresholds
from tsskit.graph import (
    Graph,
    dual_threshold,
    hull_set,
    is_degenerate,
    is_dynamic_monopoly,
    is_partial_incentive,
)
from tsskit.intervals import has_small_cut, interval_scan, is_clique, minimal_vertex_cuts
from tsskit.oracle import brute_alpha, brute_dyn, brute_pi, brute_vertex_cover, is_monopoly_mask
from tsskit.pi_interval import block_budget, clique_incentive, solve_pi_interval
from tsskit.reductions import dyn_to_pi, vc_to_dyn
from tsskit.twdp import solve_dyn_treewidth, solve_pi_treewidth

RESULTS: dict[int, tuple[bool, str]] = {}
NAMES = {
    1: "treewidth DP exactness",
    2: "interval DP exactness and block budget",
    3: "exact dynamic monopoly via path attachment",
    4: "(w+1)-ratio and strong-region hitting",
    5: "layer-shifting bound for degenerate sets",
    6: "reduction equalities",
    7: "clique incentive validity",
    8: "interval structure and nice decompositions",
    9: "duality and hull properties",
}


def labelled_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def check_1():
    start = time.perf_counter()
    total = bad = 0
    for seed in range(210):
        n = 2 + seed % 7
        g = gen_random(n, 0.25 + 0.05 * (seed % 8), seed=seed, connected=True)
        tau = random_thresholds(g, seed=10_000 + seed, low=0, high=1, relative=True)
        sol = solve_pi_treewidth(g, tau, make_nice(heuristic_td(g)))
        total += 1
        if not is_partial_incentive(g, tau, sol.sigma) or sol.weight != brute_pi(g, tau).optimum:
            bad += 1
    took = time.perf_counter() - start
    return bad == 0 and took < 600, f"{total - bad}/{total} match the oracle in {took:.1f}s"


def check_2():
    total = bad = over = 0
    for seed in range(120):
        n = 1 + seed % 10
        t = 1 + seed % 3
        inst = gen_interval(n, seed=seed, span=n + 4, max_len=4)
        g = inst.graph
        tau = random_thresholds(g, seed=20_000 + seed, low=0, high=t)
        sol = solve_pi_interval(g, inst.intervals, tau, t)
        total += 1
        if not is_partial_incentive(g, tau, sol.sigma) or sol.weight != brute_pi(g, tau).optimum:
            bad += 1
        s = interval_scan(g, inst.intervals, t)
        over += sum(sum(sol.sigma.get(v, 0) for v in r) > block_budget(t) for r in s.regions)
    return bad == 0 and over == 0, f"{total - bad}/{total} match the oracle; {over} blocks over budget"


def check_3():
    total = bad = 0
    for seed in range(110):
        n = 1 + seed % 7
        g = gen_random(n, 0.3 + 0.1 * (seed % 4), seed=seed, connected=seed % 2 == 0)
        tau = random_thresholds(g, seed=30_000 + seed, low=0, high=3)
        sol = solve_dyn_treewidth(g, tau)
        total += 1
        if not is_dynamic_monopoly(g, tau, sol.d) or sol.size != brute_dyn(g, tau).optimum:
            bad += 1
    return bad == 0, f"{total - bad}/{total} match the oracle"


def _all_monopolies_hit(g, tau, a, b):
    rest = [v for v in g.vertices if v not in a]
    for r in range(len(rest) + 1):
        for extra in combinations(rest, r):
            d = set(a) | set(extra)
            if is_monopoly_mask(g, tau, d) and not b & (d - set(a)):
                return False
    return True


def check_4():
    total = bad = strong = miss = 0
    worst = 0.0
    for seed in range(110):
        n = 1 + seed % 8
        g = gen_random(n, 0.3 + 0.05 * (seed % 5), seed=seed, connected=seed % 3 > 0)
        tau = random_thresholds(g, seed=40_000 + seed, low=0, high=1, relative=True)
        td = heuristic_td(g)
        r = approx_dyn_td(g, tau, td, check=True)
        opt = brute_dyn(g, tau).optimum
        total += 1
        if not is_dynamic_monopoly(g, tau, r.d) or len(r.d) > (td.width + 1) * opt:
            bad += 1
        if opt:
            worst = max(worst, len(r.d) / opt)
        below = td.subtree_vertices(r.order[-1] if r.order else None)
        seeds = {}
        prev: tuple = ()
        for node, grown in zip(r.order, r.grown):
            seeds[node] = prev
            prev = grown
        for node in r.strong:
            strong += 1
            if not _all_monopolies_hit(g, tau, set(seeds[node]), set(below[node])):
                miss += 1
    ok = bad == 0 and miss == 0
    return ok, (f"{total - bad}/{total} within (w+1)*dyn (worst ratio {worst:.2f}); "
                f"{strong - miss}/{strong} strong regions hit by every monopoly")


def _planar_instances():
    for rows, cols in [(2, 2), (2, 3), (2, 4), (3, 3), (2, 5)]:
        inst = gen_grid(rows, cols)
        yield inst.graph, inst.outer
    rng = random.Random(5)
    made = 0
    seed = 0
    while made < 15:
        seed += 1
        n = 5 + seed % 6
        base = gen_tree(n, seed)
        edges = set(base.edges)
        for _ in range(n // 2):
            u, v = sorted(rng.sample(range(1, n + 1), 2))
            edges.add((u, v))
        g = Graph.from_edges(n, sorted(edges))
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(g.vertices)
        if nx.check_planarity(h)[0]:
            made += 1
            yield g, (1,)


def check_5():
    total = bad = 0
    for g, outer in _planar_instances():
        for kap in (0, 1, 2):
            kappa = {v: kap for v in g.vertices}
            alpha = brute_alpha(g, kappa).optimum
            for eps in ("0.34", "0.5", "1.0"):
                r = baker_ptas_degenerate(g, kappa, float(eps), outer)
                total += 1
                if not is_degenerate(g, kappa, r.members)[0] or \
                        len(r.members) < math.ceil((1 - Fraction(eps)) * alpha):
                    bad += 1
    return bad == 0, f"{total - bad}/{total} runs meet ceil((1-eps)*alpha)"


def _restricted_dyn(g, g2, tau2):
    for size in range(g.n + 1):
        for d in combinations(g.vertices, size):
            if is_dynamic_monopoly(g2, tau2, d):
                return size


def check_6():
    l1 = l1_bad = 0
    for n in range(1, 5):
        for g in labelled_graphs(n):
            if g.is_connected():
                g2, tau2 = vc_to_dyn(g)
                l1 += 1
                l1_bad += _restricted_dyn(g, g2, tau2) != brute_vertex_cover(g).optimum
    for seed in range(20):
        g = gen_random(5, 0.5, seed=seed)
        g2, tau2 = vc_to_dyn(g)
        l1 += 1
        l1_bad += _restricted_dyn(g, g2, tau2) != brute_vertex_cover(g).optimum
    l2 = l2_bad = 0
    for seed in range(110):
        n = 1 + seed % 5
        g = gen_random(n, 0.5, seed=seed)
        tau = random_thresholds(g, seed=60_000 + seed, low=0, high=2)
        ext = dyn_to_pi(g, tau)
        l2 += 1
        l2_bad += brute_dyn(g, tau).optimum != brute_pi(ext.graph, ext.tau).optimum
    ok = l1_bad == 0 and l2_bad == 0
    return ok, f"vertex cover: {l1 - l1_bad}/{l1}; path attachment: {l2 - l2_bad}/{l2}"


def check_7():
    rng = random.Random(7)
    total = bad = 0
    for t in range(1, 6):
        g = Graph.from_edges(t, combinations(range(1, t + 1), 2))
        for _ in range(60):
            tau = {v: rng.randint(-1, t) for v in g.vertices}
            order = rng.sample(range(1, t + 1), t)
            sigma = clique_incentive(g, tau, order)
            total += 1
            if not is_partial_incentive(g, tau, sigma) or sum(sigma.values()) > block_budget(t):
                bad += 1
    return bad == 0, f"{total - bad}/{total} valid and within (t+1 choose 2)"


def check_8():
    blocks = block_bad = cuts = cut_bad = 0
    for seed in range(150):
        n = 2 + seed % 11
        t = 1 + seed % 3
        inst = gen_interval(n, seed=seed, span=n + 4, max_len=4)
        g = inst.graph
        s = interval_scan(g, inst.intervals, t)
        for region in s.regions:
            sub, _ = g.induced(region)
            blocks += 1
            if not ((is_clique(g, region) and len(region) <= t) or not has_small_cut(sub, t)):
                block_bad += 1
        if n <= 8:
            dips = {s.cuts[i - 1] for i in s.dips()}
            for cut in minimal_vertex_cuts(g):
                cuts += 1
                cut_bad += cut not in dips
    nice_total = nice_bad = 0
    for seed in range(100):
        g = gen_random(2 + seed % 9, 0.4, seed=seed)
        td = heuristic_td(g)
        for root in td.nodes[:3]:
            nice = make_nice(td, root=root)
            nice_total += 1
            if not validate_td(g, nice.to_td())[0] or nice.width != td.width:
                nice_bad += 1
    ok = block_bad == 0 and cut_bad == 0 and nice_bad == 0
    return ok, (f"blocks {blocks - block_bad}/{blocks}; minimal cuts {cuts - cut_bad}/{cuts}; "
                f"nice forms {nice_total - nice_bad}/{nice_total}")


def check_9():
    dual = dual_bad = 0
    for n in range(1, 5):
        for g in labelled_graphs(n):
            for code in range(3 ** n):
                kappa = {v: code // 3 ** (v - 1) % 3 for v in g.vertices}
                tau = dual_threshold(g, kappa)
                for mask in range(1 << n):
                    i = [v for v in g.vertices if mask >> (v - 1) & 1]
                    rest = [v for v in g.vertices if not mask >> (v - 1) & 1]
                    dual += 1
                    dual_bad += is_degenerate(g, kappa, i)[0] != is_dynamic_monopoly(g, tau, rest)
    rng = random.Random(9)
    hull_total = hull_bad = 0
    for seed in range(520):
        n = 1 + seed % 10
        g = gen_random(n, rng.random(), seed=seed)
        tau = random_thresholds(g, seed=90_000 + seed, low=-1, high=1, relative=True)
        b = {v for v in g.vertices if rng.random() < 0.5}
        a = {v for v in b if rng.random() < 0.5}
        ha, hb = hull_set(g, tau, a), hull_set(g, tau, b)
        hull_total += 1
        if not ha <= hb or hull_set(g, tau, ha) != ha or hull_set(g, tau, hb) != hb:
            hull_bad += 1
    ok = dual_bad == 0 and hull_bad == 0
    return ok, f"duality {dual - dual_bad}/{dual}; hull {hull_total - hull_bad}/{hull_total}"


CHECKS = {i: globals()[f"check_{i}"] for i in NAMES}


def line(i):
    ok, detail = RESULTS[i]
    return f"criterion {i} [{'PASS' if ok else 'FAIL'}] {NAMES[i]}: {detail}"


@pytest.mark.parametrize("criterion", sorted(NAMES))
def test_criterion(criterion):
    RESULTS[criterion] = CHECKS[criterion]()
    print(line(criterion))
    assert RESULTS[criterion][0], line(criterion)


if __name__ == "__main__":
    for i in sorted(NAMES):
        RESULTS[i] = CHECKS[i]()
        print(line(i), flush=True)
