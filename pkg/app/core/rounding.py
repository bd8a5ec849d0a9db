"""
Threshold rounding of fractional domination solutions.

Algorithms A1 and A2 threshold LP1 at 1/(3a) and 1/(2a+1); the primed
variants use the density bound a' instead of a, and A3 uses 2/a'. Every
vertex left undominated by the heavy set H is added back, so the output
always dominates.
"""

import time
from typing import Iterable, Optional, Tuple

import numpy as np

from core.arboricity import density_lower_bound, resolve_arboricity, user_supplied
from core.calculations import a1_upper_bound, a2_upper_bound
from core.errors import InputError
from core.graph import Graph, dominated_mask
from core.logging_config import get_logger, log_performance
from core.lp_engine import LpEngine, build_lp1, require_optimal, solve_lp
from core.models import (
    DominatingSetResult, FamilyParams, FractionalSolution, RoundingVariant, VariantTag, VertexSet
)

logger = get_logger(__name__)

THRESHOLD_SLACK = 1e-9


def threshold_for(variant: RoundingVariant) -> float:
    """
    Threshold t of a rounding variant.

    A1, A1' -> 1/(3a); A2, A2' -> 1/(2a+1); A3 -> min(2/a', 1);
    custom -> the given threshold, capped at 1.

    Raises:
        InputError: nonpositive arboricity, or a custom threshold that is missing or <= 0
    """
    tag = variant.tag
    if tag == VariantTag.CUSTOM:
        if variant.threshold is None or variant.threshold <= 0:
            raise InputError(f"custom rounding needs a positive threshold, got {variant.threshold}")
        return min(float(variant.threshold), 1.0)

    a = variant.arboricity
    if a is None or a < 1:
        raise InputError(f"{tag.label} rounding needs an arboricity value >= 1, got {a}")
    if tag in (VariantTag.A1, VariantTag.A1_PRIME):
        return 1.0 / (3 * a)
    if tag in (VariantTag.A2, VariantTag.A2_PRIME):
        return 1.0 / (2 * a + 1)
    # A3: 2/a' reaches past 1 only when a' = 1
    return min(2.0 / a, 1.0)


def resolve_variant(tag: VariantTag, g: Graph, family: Optional[FamilyParams] = None,
                    arboricity: Optional[int] = None,
                    threshold: Optional[float] = None) -> RoundingVariant:
    """
    Bind a variant tag to the arboricity value it will threshold with.

    A1/A2 take an explicit value, else the family bound, else a'. The primed
    variants and A3 take an explicit value, else a'.
    """
    if tag == VariantTag.CUSTOM:
        return RoundingVariant(tag, threshold=threshold)
    if arboricity is not None:
        estimate = user_supplied(arboricity)
    elif tag.uses_density:
        estimate = density_lower_bound(g)
    else:
        estimate = resolve_arboricity(g, family)
    return RoundingVariant(tag, arboricity=estimate.value, arboricity_kind=estimate.kind)


def _weights_array(g: Graph, x: FractionalSolution, vertices: Iterable[int]) -> np.ndarray:
    weights = np.zeros(g.n)
    for v in vertices:
        try:
            weights[v] = x.weights[v]
        except KeyError:
            raise InputError(f"fractional solution has no weight for vertex {v}") from None
    return weights


def _check_threshold(t: float) -> None:
    if not 0.0 < t <= 1.0:
        raise InputError(f"threshold must lie in (0, 1], got {t}")


def threshold_round(g: Graph, x: FractionalSolution, t: float) -> DominatingSetResult:
    """
    H = {v : x_v >= t}, U = vertices with no member of H in N[v]; returns H ∪ U.

    Raises:
        InputError: x misses a vertex, or t outside (0, 1]
    """
    _check_threshold(t)
    start = time.perf_counter()
    weights = _weights_array(g, x, range(g.n))
    heavy = np.flatnonzero(weights >= t - THRESHOLD_SLACK)
    undominated = np.flatnonzero(~dominated_mask(g, heavy.tolist()))
    vertices = frozenset(heavy.tolist()) | frozenset(undominated.tolist())
    elapsed = time.perf_counter() - start
    return DominatingSetResult(
        vertices=vertices,
        algorithm="threshold",
        elapsed=elapsed,
        details={"threshold": t, "h": len(heavy), "u": len(undominated)},
    )


def restricted_parts(g: Graph, x: FractionalSolution, t: float,
                     c: Iterable[int]) -> Tuple[VertexSet, VertexSet]:
    """
    (H, U) of the rounding restricted to C: H = {v in C : x_v >= t} and
    U = C - (H ∪ N(H)), neighbors taken in the whole graph.
    """
    _check_threshold(t)
    members = sorted(set(c))
    weights = _weights_array(g, x, members)
    heavy = [v for v in members if weights[v] >= t - THRESHOLD_SLACK]
    dominated = dominated_mask(g, heavy)
    light = [v for v in members if not dominated[v]]
    return frozenset(heavy), frozenset(light)


def restricted_round(g: Graph, x: FractionalSolution, t: float, c: Iterable[int]) -> VertexSet:
    """H ∪ U ⊆ C; with C = V this equals threshold_round's set."""
    heavy, light = restricted_parts(g, x, t, c)
    return heavy | light


def lp_round(g: Graph, variant: RoundingVariant, engine: Optional[LpEngine] = None,
             lp_solution: Optional[FractionalSolution] = None) -> DominatingSetResult:
    """
    Solve LP1 (unless an optimal solution is passed in) and threshold it.

    Args:
        g: Input graph
        variant: Rounding variant with its arboricity value bound
        engine: LP engine; the default HiGHS engine when omitted
        lp_solution: An optimal LP1 solution to reuse

    Returns:
        DominatingSetResult tagged with the variant, L* and the threshold; its
        elapsed time includes the LP solve

    Raises:
        SolverError: LP1 could not be solved
    """
    t = threshold_for(variant)
    if lp_solution is None:
        lp_solution = solve_lp(build_lp1(g), engine)
    require_optimal(lp_solution, f"{variant.label} rounding")

    rounded = threshold_round(g, lp_solution, t)
    elapsed = lp_solution.elapsed + rounded.elapsed
    log_performance(f"lp_round {variant.label}", elapsed * 1000,
                    f"n={g.n}, t={t:.6f}, size={rounded.size}, L*={lp_solution.objective:.4f}")
    details = dict(rounded.details)
    details.update({
        "variant": variant.label,
        "arboricity": variant.arboricity,
        "arboricity_kind": variant.arboricity_kind,
        "lp_objective": lp_solution.objective,
    })
    if variant.tag == VariantTag.A1:
        details["guarantee"] = a1_upper_bound(lp_solution.objective, variant.arboricity)
    elif variant.tag == VariantTag.A2:
        details["guarantee"] = a2_upper_bound(lp_solution.objective, variant.arboricity)
    return DominatingSetResult(rounded.vertices, variant.tag.value, elapsed, details)
