"""
Cascades, seed sets and incentives
==================================

A vertex becomes active once enough of its neighbors are.  There are two
ways to get the whole graph going: seed some vertices outright, or lower
thresholds a little everywhere.  This script compares both on a star and
on a small grid.
"""
from tsskit.generators import gen_grid
from tsskit.graph import Graph, constant, dual_threshold, hull, is_degenerate, is_dynamic_monopoly
from tsskit.oracle import brute_alpha, brute_dyn, brute_pi

###############################################################################
# A star with a stubborn center
# -----------------------------
# The center needs all three leaves; each leaf needs one neighbor.

star = Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])
tau = {1: 3, 2: 1, 3: 1, 4: 1}

active, trace = hull(star, tau, {1})
print("seeding the center reaches", sorted(active))
for step in trace.order:
    print("  ", step)

# Seeding is cheap here, discounts are not: the center has to be paid in
# full or every leaf needs a nudge.
print("smallest seed set:", brute_dyn(star, tau))
print("cheapest discount:", brute_pi(star, tau))

###############################################################################
# Grid, threshold 2 everywhere
# ----------------------------

grid = gen_grid(3, 3).graph
tau = constant(grid, 2)
best = brute_dyn(grid, tau)
print("\n3x3 grid, tau=2: three seeds suffice ->", best.witness)
print("discount optimum:", brute_pi(grid, tau).optimum)

###############################################################################
# The same question from the other side
# -------------------------------------
# With kappa = degree - tau, the complement of a seed set is exactly a set
# that can be ordered so each vertex has at most kappa earlier neighbors.

kappa = {v: grid.degree(v) - tau[v] for v in grid.vertices}
rest = [v for v in grid.vertices if v not in best.witness]
print("\ncomplement degenerate?", is_degenerate(grid, kappa, rest))
print("thresholds recovered:", dual_threshold(grid, kappa) == tau)
print("alpha =", brute_alpha(grid, kappa).optimum, "= n - dyn =", grid.n - best.optimum)
assert is_dynamic_monopoly(grid, tau, best.witness)
