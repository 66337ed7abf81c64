"""Dynamic monopolies, partial incentives and degenerate sets on graphs.

Exact solvers (treewidth and interval-graph dynamic programs), two
approximation algorithms, instance transformers and brute-force oracles.
"""

from .approx import approx_dyn_td, baker_ptas_degenerate, is_strong_region
from .decomposition import NiceTreeDecomposition, TreeDecomposition, heuristic_td, make_nice, validate_td
from .errors import (
    FormatError,
    InvalidDecomposition,
    LimitExceeded,
    NotAClique,
    PieceTooLarge,
    RepresentationMismatch,
    StateLimitExceeded,
    ThresholdExceedsBound,
    TsskitError,
)
from .graph import (
    CascadeTrace,
    Graph,
    dual_budget,
    dual_threshold,
    hull,
    is_degenerate,
    is_dynamic_monopoly,
    is_partial_incentive,
    normalize_thresholds,
    weight,
)
from .intervals import interval_scan, perturb_intervals
from .oracle import brute_alpha, brute_dyn, brute_pi, brute_vertex_cover
from .pi_interval import clique_incentive, solve_pi_interval
from .reductions import dyn_to_pi, vc_to_dyn
from .twdp import solve_dyn_treewidth, solve_pi_treewidth

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
