"""
Ratio and bound calculations for experiment reports.
Ratios are rounded half-up to two decimals, the way published tables print them.
"""

import math
from decimal import Decimal, ROUND_HALF_UP
from typing import Optional

RATIO_PLACES = Decimal('0.01')
RATIO_SLACK = 1e-6


def calc_ratio(size: int, bound: float) -> Optional[Decimal]:
    """
    Performance ratio size / bound, rounded to 2 decimal places.

    Args:
        size: Dominating set size
        bound: Lower bound (L* or max{M*, N*})

    Returns:
        The rounded ratio, or None when the bound is not positive
    """
    if bound is None or not bound > 0:
        return None
    ratio = Decimal(str(size)) / Decimal(repr(float(bound)))
    return ratio.quantize(RATIO_PLACES, rounding=ROUND_HALF_UP)


def format_ratio(size: int, bound: float) -> str:
    """Ratio as a 2-decimal string; '-' when no ratio exists."""
    ratio = calc_ratio(size, bound)
    return '-' if ratio is None else str(ratio)


def format_bound(value: Optional[float]) -> str:
    """An LP objective to 2 decimals, half-up."""
    if value is None:
        return '-'
    return str(Decimal(repr(float(value))).quantize(RATIO_PLACES, rounding=ROUND_HALF_UP))


def ratio_at_least_one(size: int, bound: float) -> bool:
    """size / bound >= 1 within RATIO_SLACK; a valid set can never beat L*."""
    return size >= bound * (1 - RATIO_SLACK)


def greedy_upper_bound(lp_objective: float, max_degree: int) -> float:
    """(ln(Δ+1) + 1) · L*, the greedy guarantee against the LP bound."""
    return (math.log(max_degree + 1) + 1) * lp_objective


def a1_upper_bound(lp_objective: float, arboricity: int) -> float:
    """3a · L*."""
    return 3 * arboricity * lp_objective


def a2_upper_bound(lp_objective: float, arboricity: int) -> float:
    """(2a + 1) · L*."""
    return (2 * arboricity + 1) * lp_objective


def hybrid_upper_bound(prefix_size: int, arboricity: int, partial_lp_value: float) -> float:
    """
    |S| + 3a · J*. The partial LP may place weight on B, so X(C) alone is not
    enough; J* = N* for the separation the prefix induces.
    """
    return prefix_size + 3 * arboricity * partial_lp_value
