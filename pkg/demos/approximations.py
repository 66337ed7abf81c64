"""
Approximations with guarantees
==============================

Two algorithms that trade exactness for speed while keeping a provable
ratio: bag-by-bag seeding from a tree-decomposition, and layer shifting
for large degenerate sets in planar graphs.
"""
from fractions import Fraction
import math

from tsskit.approx import approx_dyn_td, baker_ptas_degenerate
from tsskit.decomposition import heuristic_td
from tsskit.generators import gen_grid, random_thresholds
from tsskit.graph import constant
from tsskit.oracle import brute_alpha, brute_dyn

###############################################################################
# Seeding whole bags
# ------------------
# Walk the decomposition from the leaves up.  Whenever the part below a bag
# cannot be finished from what is already seeded plus its outside
# neighbors, seed the entire bag.

g = gen_grid(3, 4).graph
tau = random_thresholds(g, seed=3, low=1, high=2)
td = heuristic_td(g)
res = approx_dyn_td(g, tau, td)
opt = brute_dyn(g, tau).optimum
print(f"width {res.width}: seeded {len(res.d)} vertices, optimum {opt}, bound {(res.width + 1) * opt}")
print("bags that forced a seed:", res.strong)

###############################################################################
# Layer shifting
# --------------
# Peel the grid into rings from the border; dropping every k-th ring leaves
# pieces that are solved exactly.  The best of the k shifts loses at most
# a 1/k share.

grid = gen_grid(4, 4)
kappa = constant(grid.graph, 1)
alpha = brute_alpha(grid.graph, kappa).optimum
for eps in ("1.0", "0.5", "0.34"):
    r = baker_ptas_degenerate(grid.graph, kappa, float(eps), grid.outer)
    need = math.ceil((1 - Fraction(eps)) * alpha)
    print(f"eps {eps}: k={r.layers.k} shift {r.shift} kept {len(r.members)} of alpha={alpha} (need >= {need})")
