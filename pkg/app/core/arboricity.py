"""
Arboricity estimates feeding the rounding thresholds: the density lower bound
a' = ceil(m / (n - 1)) and the per-family upper bounds.
Exact Nash-Williams arboricity is never computed; callers may always supply a value.
"""

import math
from typing import Optional

from core.errors import InputError
from core.graph import Graph
from core.models import ArboricityEstimate, ArboricityKind, Family, FamilyParams

PLANAR_ARBORICITY = 3


def density_lower_bound(g: Graph) -> ArboricityEstimate:
    """
    a' = ceil(m / (n - 1)), clamped to at least 1.

    Graphs with n <= 1 have no edges and get 1 by convention.
    """
    if g.n <= 1:
        value = 1
    else:
        value = max(1, -(-g.m // (g.n - 1)))
    return ArboricityEstimate(value, ArboricityKind.DENSITY_LOWER_BOUND)


def family_upper_bound(params: FamilyParams) -> ArboricityEstimate:
    """
    Upper bound on a(G) for a known family.

    planar -> 3; tree -> 1; ktree(n, k) -> ceil(k - (k/2)(k-1)/(n-1));
    kplanar(k) -> ceil(8 sqrt(k)); hypercube(d) -> floor(d/2) + 1;
    queens(k) -> 3(k-1).
    """
    family = params.family
    if family == Family.PLANAR:
        value = PLANAR_ARBORICITY
    elif family == Family.TREE:
        value = 1
    elif family == Family.KTREE:
        n, k = _need(params, "n"), _need(params, "k")
        if n < 2:
            raise InputError("ktree arboricity bound needs n >= 2")
        value = math.ceil(k - (k / 2) * (k - 1) / (n - 1) - 1e-12)
    elif family == Family.KPLANAR:
        value = math.ceil(8 * math.sqrt(_need(params, "k")) - 1e-12)
    elif family == Family.HYPERCUBE:
        value = _need(params, "d") // 2 + 1
    elif family == Family.QUEENS:
        value = 3 * (_need(params, "k") - 1)
    else:
        raise InputError(
            f"no arboricity bound is known for family '{family.value}'; supply one with --arboricity"
        )
    return ArboricityEstimate(max(value, 1), ArboricityKind.FAMILY_UPPER_BOUND, family)


def user_supplied(value: int) -> ArboricityEstimate:
    if value < 1:
        raise InputError(f"arboricity must be a positive integer, got {value}")
    return ArboricityEstimate(value, ArboricityKind.USER_SUPPLIED)


def resolve_arboricity(g: Graph, family: Optional[FamilyParams] = None,
                       override: Optional[int] = None) -> ArboricityEstimate:
    """
    Pick the estimate an algorithm should use: an explicit value wins,
    then a known family bound, then the density lower bound.
    """
    if override is not None:
        return user_supplied(override)
    if family is not None:
        try:
            return family_upper_bound(family)
        except InputError:
            pass
    return density_lower_bound(g)


def _need(params: FamilyParams, name: str) -> int:
    value = getattr(params, name)
    if value is None:
        raise InputError(f"family '{params.family.value}' needs parameter '{name}' for its arboricity bound")
    return value
