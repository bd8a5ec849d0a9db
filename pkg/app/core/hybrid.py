"""
Hybrid greedy/LP dominating set.

The first ceil(alpha * d) greedy picks S are forced into the solution, the
partial LP covers whatever S leaves undominated, and rounding is restricted
to C = V - N[S]. The output S ∪ H ∪ U always dominates: S covers A ∪ B,
H ∪ U covers C.

For A1 the result records |S| + 3a·J* as its size bound. It holds when the
partial LP keeps its weight on C or when 3a >= Δ + 1; a heavy vertex in B
can push U past it, since only C is thresholded.
"""

import time
from typing import Optional

from core.calculations import hybrid_upper_bound
from core.errors import InputError
from core.graph import Graph
from core.greedy import greedy_dominating_set, greedy_prefix
from core.logging_config import get_logger, log_performance
from core.lp_engine import (
    LpEngine, build_partial_lp, require_optimal, separation_from_prefix, solve_lp
)
from core.models import DominatingSetResult, GreedyResult, HybridConfig, VariantTag
from core.rounding import restricted_parts, threshold_for

logger = get_logger(__name__)


def hybrid_dominating_set(g: Graph, cfg: HybridConfig, engine: Optional[LpEngine] = None,
                          greedy_result: Optional[GreedyResult] = None,
                          n_star: Optional[float] = None) -> DominatingSetResult:
    """
    Run the hybrid pipeline.

    Args:
        g: Input graph
        cfg: alpha, rounding variant (arboricity already bound) and greedy tie policy
        engine: LP engine for the partial LP
        greedy_result: A greedy run with the same tie policy to reuse
        n_star: N* of the same separation, when known, for the composite bound

    Returns:
        DominatingSetResult whose details record |S|, |H|, |U|, X(C), J* and,
        for A1, the size bounds

    Raises:
        InputError: alpha outside [0, 1]
        SolverError: the partial LP failed
    """
    if not 0.0 <= cfg.alpha <= 1.0:
        raise InputError(f"alpha must lie in [0, 1], got {cfg.alpha}")
    t = threshold_for(cfg.variant)
    start = time.perf_counter()

    if greedy_result is None or greedy_result.tie != cfg.tie:
        greedy_result = greedy_dominating_set(g, cfg.tie)
    d = greedy_result.size
    s = frozenset(greedy_prefix(greedy_result, cfg.alpha))

    solution = require_optimal(solve_lp(build_partial_lp(g, s), engine), "partial LP")
    sep = separation_from_prefix(g, s)
    heavy, light = restricted_parts(g, solution, t, sep.c)
    vertices = s | heavy | light

    elapsed = time.perf_counter() - start
    x_c = solution.weight_of(sep.c)
    details = {
        "variant": cfg.variant.label,
        "alpha": cfg.alpha,
        "threshold": t,
        "arboricity": cfg.variant.arboricity,
        "arboricity_kind": cfg.variant.arboricity_kind,
        "greedy_size": d,
        "s": len(s),
        "h": len(heavy),
        "u": len(light),
        "x_c": x_c,
        "j_star": solution.objective,
    }
    if cfg.variant.tag == VariantTag.A1:
        # the prefix holds ceil(alpha * d) vertices, so |S| stands in for alpha * d
        a = cfg.variant.arboricity
        details["size_bound"] = hybrid_upper_bound(len(s), a, solution.objective)
        if n_star is not None:
            details["composite_bound"] = hybrid_upper_bound(len(s), a, n_star)

    log_performance(f"hybrid {cfg.variant.label}", elapsed * 1000,
                    f"n={g.n}, alpha={cfg.alpha}, |S|={len(s)}, |H|={len(heavy)}, "
                    f"|U|={len(light)}, J*={solution.objective:.4f}")
    return DominatingSetResult(vertices, "hybrid", elapsed, details)
