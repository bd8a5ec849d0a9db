import pytest

from conftest import complete_graph, path_graph, star_graph
from core.arboricity import density_lower_bound, family_upper_bound, resolve_arboricity, user_supplied
from core.errors import InputError
from core.graph import build_graph
from core.models import ArboricityKind, Family, FamilyParams


class _Counts:
    """Stand-in exposing only n and m, for sizes too large to build."""

    def __init__(self, n, m):
        self.n = n
        self.m = m


def test_density_bound_on_published_street_network_size():
    assert density_lower_bound(_Counts(7733822, 8156517)).value == 2


@pytest.mark.parametrize("g, expected", [
    (path_graph(10), 1),
    (star_graph(6), 1),
    (complete_graph(5), 3),
    (build_graph(1, []), 1),
    (build_graph(0, []), 1),
    (build_graph(4, []), 1),
])
def test_density_bound(g, expected):
    estimate = density_lower_bound(g)
    assert estimate.value == expected
    assert estimate.kind == ArboricityKind.DENSITY_LOWER_BOUND


@pytest.mark.parametrize("params, expected", [
    (FamilyParams(Family.HYPERCUBE, d=12), 7),
    (FamilyParams(Family.HYPERCUBE, d=5), 3),
    (FamilyParams(Family.QUEENS, k=15), 42),
    (FamilyParams(Family.KTREE, n=2000, k=5), 5),
    (FamilyParams(Family.KTREE, n=6, k=5), 3),
    (FamilyParams(Family.KPLANAR, k=5), 18),
    (FamilyParams(Family.PLANAR), 3),
    (FamilyParams(Family.TREE), 1),
])
def test_family_upper_bound(params, expected):
    estimate = family_upper_bound(params)
    assert estimate.value == expected
    assert estimate.kind == ArboricityKind.FAMILY_UPPER_BOUND


def test_unknown_family_asks_for_a_value():
    with pytest.raises(InputError, match="--arboricity"):
        family_upper_bound(FamilyParams(Family.TRAP_STARS, p=3))


def test_family_bound_needs_its_parameter():
    with pytest.raises(InputError, match="'k'"):
        family_upper_bound(FamilyParams(Family.QUEENS))


def test_user_value_must_be_positive():
    assert user_supplied(4).value == 4
    with pytest.raises(InputError):
        user_supplied(0)


def test_resolution_order():
    g = complete_graph(5)
    assert resolve_arboricity(g, FamilyParams(Family.PLANAR), 7).kind == ArboricityKind.USER_SUPPLIED
    assert resolve_arboricity(g, FamilyParams(Family.PLANAR)).value == 3
    fallback = resolve_arboricity(g, FamilyParams(Family.TRAP_CLIQUE, p=2))
    assert fallback.kind == ArboricityKind.DENSITY_LOWER_BOUND
    assert resolve_arboricity(g).value == 3
