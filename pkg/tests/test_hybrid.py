import pytest

from conftest import random_graph
from core.errors import InputError
from core.generators import generate, hypercube, random_ktree
from core.graph import build_graph, is_dominating
from core.greedy import greedy_dominating_set, greedy_prefix
from core.hybrid import hybrid_dominating_set
from core.lp_engine import decomposition_lower_bound, separation_from_prefix
from core.models import (
    ArboricityKind, Family, FamilyParams, HybridConfig, RoundingVariant, TiePolicy, VariantTag
)
from core.rounding import lp_round, resolve_variant

A1 = RoundingVariant(VariantTag.A1, arboricity=3)


def test_alpha_one_is_greedy():
    g = random_graph(40, 0.1, seed=1)
    result = hybrid_dominating_set(g, HybridConfig(alpha=1.0, variant=A1))
    assert result.vertices == greedy_dominating_set(g).vertices
    assert (result.details["h"], result.details["u"]) == (0, 0)
    assert result.details["j_star"] == 0.0
    assert result.details["x_c"] == 0.0


def test_alpha_zero_is_plain_rounding():
    g = random_graph(40, 0.1, seed=2)
    result = hybrid_dominating_set(g, HybridConfig(alpha=0.0, variant=A1))
    assert result.details["s"] == 0
    assert result.vertices == lp_round(g, A1).vertices


@pytest.mark.parametrize("alpha", [-0.1, 1.5])
def test_alpha_must_be_a_fraction(path3, alpha):
    with pytest.raises(InputError, match="alpha"):
        hybrid_dominating_set(path3, HybridConfig(alpha=alpha, variant=A1))


def test_details_and_prefix(path5):
    result = hybrid_dominating_set(path5, HybridConfig(alpha=0.5, variant=A1))
    greedy = greedy_dominating_set(path5)
    assert result.algorithm == "hybrid"
    assert result.details["greedy_size"] == greedy.size
    assert result.details["s"] == len(greedy_prefix(greedy, 0.5))
    assert set(greedy_prefix(greedy, 0.5)) <= result.vertices
    assert result.details["variant"] == "A1"
    assert "composite_bound" not in result.details


def test_reuses_matching_greedy_run():
    g = random_graph(30, 0.15, seed=4)
    greedy = greedy_dominating_set(g, TiePolicy.MAX_ID)
    cfg = HybridConfig(alpha=1.0, variant=A1, tie=TiePolicy.MAX_ID)
    assert hybrid_dominating_set(g, cfg, greedy_result=greedy).vertices == greedy.vertices


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
def test_output_dominates_and_records_size_bound(seed, alpha):
    g = random_graph(45, 0.08, seed)
    variant = RoundingVariant(VariantTag.A1, arboricity=max(1, g.max_degree))
    result = hybrid_dominating_set(g, HybridConfig(alpha=alpha, variant=variant))
    assert is_dominating(g, result.vertices)
    details = result.details
    assert result.size <= details["s"] + details["h"] + details["u"]
    assert details["size_bound"] == pytest.approx(details["s"] + 3 * variant.arboricity * details["j_star"])
    # 3a >= max degree + 1 here, so |C| alone stays under the bound
    assert result.size <= details["size_bound"] + 1e-6


def test_composite_bound_uses_matching_separation():
    g = random_ktree(300, 3, seed=5)
    greedy = greedy_dominating_set(g)
    prefix = greedy_prefix(greedy, 0.5)
    bound = decomposition_lower_bound(g, separation_from_prefix(g, prefix))
    variant = RoundingVariant(VariantTag.A1, arboricity=3)
    result = hybrid_dominating_set(g, HybridConfig(alpha=0.5, variant=variant),
                                   greedy_result=greedy, n_star=bound.n_star)
    assert result.details["j_star"] == pytest.approx(bound.n_star, abs=1e-6)
    assert result.details["x_c"] <= result.details["j_star"] + 1e-6
    assert result.details["composite_bound"] == pytest.approx(len(prefix) + 9 * bound.n_star)
    assert is_dominating(g, result.vertices)


def test_size_bound_only_for_a1(path5):
    variant = RoundingVariant(VariantTag.A2, arboricity=1)
    details = hybrid_dominating_set(path5, HybridConfig(alpha=0.5, variant=variant)).details
    assert "size_bound" not in details


def test_separator_weight_can_break_the_size_bound():
    # hub 0 with leaves 2..6, its neighbor 1 with leaves 7..11: the partial LP
    # puts all its weight on 1, which sits in B, so every leaf of 1 lands in U
    edges = [(0, 1)] + [(0, v) for v in range(2, 7)] + [(1, v) for v in range(7, 12)]
    g = build_graph(12, edges)
    variant = RoundingVariant(VariantTag.A1, arboricity=1)
    result = hybrid_dominating_set(g, HybridConfig(alpha=0.5, variant=variant))
    details = result.details
    assert result.vertices == frozenset({0, *range(7, 12)})
    assert details["x_c"] == pytest.approx(0.0, abs=1e-6)
    assert details["j_star"] == pytest.approx(1.0, abs=1e-6)
    assert result.size > details["size_bound"]


def _family_cases(hypercube_dims, queens_sizes, ktree_sizes):
    cases = [FamilyParams(Family.HYPERCUBE, d=d) for d in hypercube_dims]
    cases += [FamilyParams(Family.QUEENS, k=k) for k in queens_sizes]
    cases += [FamilyParams(Family.KTREE, n=n, k=5) for n in ktree_sizes]
    return cases


def _check_family_bounds(params, alpha):
    g = generate(params)
    variant = resolve_variant(VariantTag.A1, g, params)
    assert variant.arboricity_kind == ArboricityKind.FAMILY_UPPER_BOUND
    greedy = greedy_dominating_set(g)
    prefix = greedy_prefix(greedy, alpha)
    n_star = None
    if 0.0 < alpha < 1.0:
        n_star = decomposition_lower_bound(g, separation_from_prefix(g, prefix)).n_star
    result = hybrid_dominating_set(g, HybridConfig(alpha=alpha, variant=variant),
                                   greedy_result=greedy, n_star=n_star)
    assert is_dominating(g, result.vertices)
    assert result.size <= result.details["size_bound"] + 1e-6
    if n_star is not None:
        assert result.size <= result.details["composite_bound"] + 1e-6
    if alpha == 0.0:
        assert result.vertices == lp_round(g, variant).vertices
    if alpha == 1.0:
        assert result.vertices == greedy.vertices


@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("params", _family_cases([5, 6, 7], [5, 6, 8], []), ids=FamilyParams.describe)
def test_family_bounds(params, alpha):
    _check_family_bounds(params, alpha)


@pytest.mark.slow
@pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("params", _family_cases([8, 9, 10], [10, 12, 15, 20], [1000, 2000, 3000, 4000, 5000]),
                         ids=FamilyParams.describe)
def test_family_bounds_at_acceptance_size(params, alpha):
    _check_family_bounds(params, alpha)


def test_hypercube_hybrids_dominate():
    g = hypercube(7)
    for tag in (VariantTag.A1, VariantTag.A2):
        variant = RoundingVariant(tag, arboricity=4)
        assert is_dominating(g, hybrid_dominating_set(g, HybridConfig(variant=variant)).vertices)
