import math
import time

import pytest

from conftest import path_graph, random_graph, star_graph
from core.errors import InputError
from core.generators import hypercube, random_ktree, trap_clique, trap_stars
from core.graph import build_graph, is_dominating
from core.greedy import greedy_dominating_set, greedy_prefix, prefix_length
from core.models import TiePolicy


def _reference_greedy(g, tie):
    """Quadratic greedy with the same gain and tie rules."""
    uncovered = set(range(g.n))
    chosen = []
    while uncovered:
        best, best_gain = None, 0
        candidates = range(g.n) if tie == TiePolicy.MIN_ID else range(g.n - 1, -1, -1)
        for v in candidates:
            if v in chosen:
                continue
            gain = len(uncovered & set(g.closed_neighborhood(v)))
            if gain > best_gain:
                best, best_gain = v, gain
        chosen.append(best)
        uncovered -= set(g.closed_neighborhood(best))
    return chosen


def test_star_picks_center():
    result = greedy_dominating_set(star_graph(8))
    assert result.ordered_selection == (0,)
    assert result.gains == (9,)


def test_path_picks_middle():
    assert greedy_dominating_set(path_graph(3)).ordered_selection == (1,)


def test_empty_and_isolated():
    assert greedy_dominating_set(build_graph(0, [])).size == 0
    assert greedy_dominating_set(build_graph(3, [])).ordered_selection == (0, 1, 2)
    assert greedy_dominating_set(build_graph(3, []), TiePolicy.MAX_ID).ordered_selection == (2, 1, 0)


@pytest.mark.parametrize("tie", list(TiePolicy))
def test_matches_reference_greedy(tie):
    for seed in range(25):
        g = random_graph(30, 0.05 + 0.02 * seed, seed)
        result = greedy_dominating_set(g, tie)
        assert list(result.ordered_selection) == _reference_greedy(g, tie)
        assert is_dominating(g, result.vertices)


def test_gains_never_increase():
    result = greedy_dominating_set(random_graph(60, 0.1, seed=5))
    assert list(result.gains) == sorted(result.gains, reverse=True)
    assert sum(result.gains) == 60


def test_deterministic():
    g = random_ktree(800, 4, seed=2)
    assert greedy_dominating_set(g).ordered_selection == greedy_dominating_set(g).ordered_selection


def test_hypercube_7_min_id_is_perfect_code():
    assert greedy_dominating_set(hypercube(7), TiePolicy.MIN_ID).size == 16


@pytest.mark.parametrize("p", range(2, 8))
def test_traps_fool_greedy(p):
    assert greedy_dominating_set(trap_stars(p)).size >= p
    assert greedy_dominating_set(trap_clique(p)).size >= p


@pytest.mark.slow
def test_ktree_20000_under_a_second():
    g = random_ktree(20000, 5, seed=0)
    g.neighbor_lists
    start = time.perf_counter()
    result = greedy_dominating_set(g)
    assert time.perf_counter() - start < 1.0
    assert is_dominating(g, result.vertices)


@pytest.mark.parametrize("d, fraction, expected", [
    (8, 0.5, 4), (8, 0.75, 6), (7, 0.5, 4), (5, 0.0, 0), (5, 1.0, 5), (0, 0.5, 0), (3, 0.1, 1),
])
def test_prefix_length(d, fraction, expected):
    assert prefix_length(d, fraction) == expected


def test_prefix_length_rejects_bad_fraction():
    with pytest.raises(InputError):
        prefix_length(4, 1.5)


def test_greedy_prefix_takes_pick_order():
    result = greedy_dominating_set(random_graph(40, 0.1, seed=8))
    prefix = greedy_prefix(result, 0.5)
    assert prefix == result.ordered_selection[:math.ceil(result.size / 2)]
