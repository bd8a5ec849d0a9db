import io
import random

import pytest

from conftest import path_graph, random_graph
from core.errors import InputError, SolverError
from core.generators import hypercube, trap_clique, trap_stars
from core.graph import build_graph
from core.greedy import greedy_dominating_set, greedy_prefix
from core.lp_engine import (
    HighsEngine, build_lp1, build_partial_lp, build_separation_lps, decomposition_lower_bound,
    dump_model, get_engine, require_optimal, restrict, separation_from_prefix, solve_lp,
    verify_feasibility
)
from core.models import FractionalSolution, LpStatus, Separation


def _objective(model, engine=None):
    solution = solve_lp(model, engine)
    assert solution.is_optimal, solution.message
    return solution.objective


@pytest.mark.parametrize("method", HighsEngine.METHODS)
def test_triangle_lp_is_one(triangle, method):
    assert _objective(build_lp1(triangle), get_engine(method)) == pytest.approx(1.0, abs=1e-6)


def test_isolated_vertex_needs_full_weight():
    solution = solve_lp(build_lp1(build_graph(1, [])))
    assert solution.objective == pytest.approx(1.0, abs=1e-6)
    assert solution.weights[0] == pytest.approx(1.0, abs=1e-6)


def test_empty_graph_lp_is_zero():
    assert _objective(build_lp1(build_graph(0, []))) == 0.0


@pytest.mark.parametrize("d", [5, 6, 7, 8])
def test_hypercube_lp_value(d):
    assert _objective(build_lp1(hypercube(d))) == pytest.approx(2 ** d / (d + 1), abs=0.01)


@pytest.mark.slow
@pytest.mark.parametrize("d", [9, 10, 11, 12])
def test_large_hypercube_lp_value(d):
    assert _objective(build_lp1(hypercube(d))) == pytest.approx(2 ** d / (d + 1), abs=0.01)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_trap_lp_value_is_two(p):
    assert _objective(build_lp1(trap_stars(p))) == pytest.approx(2.0, abs=1e-6)
    assert _objective(build_lp1(trap_clique(p))) == pytest.approx(2.0, abs=1e-6)


def test_lp1_solution_is_feasible():
    g = random_graph(40, 0.1, seed=3)
    model = build_lp1(g)
    solution = solve_lp(model)
    assert verify_feasibility(model, solution) == []
    assert all(0.0 <= w <= 1.0 for w in solution.weights.values())


def test_partial_lp_on_path(path5):
    model = build_partial_lp(path5, {2})
    assert model.variable_vertices == (0, 1, 3, 4)
    assert model.constraint_vertices == (0, 4)
    assert model.rows == ((0, 1), (3, 4))
    assert _objective(model) == pytest.approx(2.0, abs=1e-6)


def test_partial_lp_with_everything_forced(path5):
    model = build_partial_lp(path5, range(5))
    assert model.num_variables == 0
    assert model.num_constraints == 0
    assert _objective(model) == 0.0


def test_partial_lp_with_nothing_forced_is_lp1(path5):
    assert build_partial_lp(path5, []) == build_lp1(path5)


def test_partial_lp_rejects_unknown_vertex(path5):
    with pytest.raises(InputError):
        build_partial_lp(path5, {9})


def test_separation_on_path(path3):
    sep = Separation(frozenset({0}), frozenset({1}), frozenset({2}))
    lp2, lp3 = build_separation_lps(path3, sep)
    assert lp2.variable_vertices == (0, 1)
    assert lp2.rows == ((0, 1),)
    assert lp3.variable_vertices == (1, 2)
    assert lp3.rows == ((1, 2),)
    bound = decomposition_lower_bound(path3, sep)
    assert bound.m_star == pytest.approx(1.0, abs=1e-6)
    assert bound.n_star == pytest.approx(1.0, abs=1e-6)
    assert bound.value == pytest.approx(1.0, abs=1e-6)


def test_separator_holding_everything_gives_zero(path3):
    sep = Separation(frozenset(), frozenset(range(3)), frozenset())
    assert decomposition_lower_bound(path3, sep).value == 0.0


def test_separation_with_a_to_c_edge_is_rejected(path3):
    sep = Separation(frozenset({0}), frozenset({2}), frozenset({1}))
    with pytest.raises(InputError, match="joins A and C"):
        build_separation_lps(path3, sep)


def test_separation_must_partition(path3):
    with pytest.raises(InputError, match="disjoint"):
        build_separation_lps(path3, Separation(frozenset({0}), frozenset({0, 1}), frozenset({2})))
    with pytest.raises(InputError, match="covers 2 of 3"):
        build_separation_lps(path3, Separation(frozenset({0}), frozenset({1}), frozenset()))


def test_separation_from_prefix(path5):
    sep = separation_from_prefix(path5, [2])
    assert sep == Separation(frozenset({2}), frozenset({1, 3}), frozenset({0, 4}))


@pytest.mark.parametrize("fraction", [0.25, 0.5, 0.75])
def test_lp1_optimum_restricts_to_both_separation_lps(fraction):
    rng = random.Random(11)
    for seed in range(100):
        g = random_graph(rng.randint(2, 50), rng.choice([0.05, 0.1, 0.2, 0.4]), seed)
        x = require_optimal(solve_lp(build_lp1(g)), "LP1")
        sep = separation_from_prefix(g, greedy_prefix(greedy_dominating_set(g), fraction))
        lp2, lp3 = build_separation_lps(g, sep)
        assert verify_feasibility(lp2, restrict(x, sep.a | sep.b)) == []
        assert verify_feasibility(lp3, restrict(x, sep.b | sep.c)) == []
        bound = decomposition_lower_bound(g, sep)
        assert bound.value <= x.objective + 1e-6


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(8))
def test_decomposition_never_exceeds_lp1(seed):
    g = random_graph(60, 0.06, seed)
    l_star = _objective(build_lp1(g))
    prefix = greedy_prefix(greedy_dominating_set(g), 0.5)
    sep = separation_from_prefix(g, prefix)
    bound = decomposition_lower_bound(g, sep, parallel=seed % 2 == 0)
    assert bound.value <= l_star + 1e-6
    # the hybrid's partial LP on the same prefix is LP3
    assert _objective(build_partial_lp(g, prefix)) == pytest.approx(bound.n_star, abs=1e-6)


def test_verify_feasibility_lists_short_rows(path3):
    model = build_lp1(path3)
    half = FractionalSolution({0: 0.0, 1: 0.5, 2: 0.0}, 0.5, LpStatus.OPTIMAL)
    assert verify_feasibility(model, half) == [0, 1, 2]
    ones = FractionalSolution({0: 0.0, 1: 1.0, 2: 0.0}, 1.0, LpStatus.OPTIMAL)
    assert verify_feasibility(model, ones) == []
    missing = FractionalSolution({1: 1.0}, 1.0, LpStatus.OPTIMAL)
    assert verify_feasibility(model, missing) == [0, 2]


def test_require_optimal():
    bad = FractionalSolution({}, float("nan"), LpStatus.ERROR, "time limit reached")
    with pytest.raises(SolverError, match="LP1: LP error") as excinfo:
        require_optimal(bad, "LP1")
    assert excinfo.value.solution is bad


def test_unknown_engine():
    with pytest.raises(InputError, match="unknown LP engine"):
        get_engine("simplex")
    with pytest.raises(InputError, match="unknown LP method"):
        HighsEngine("cplex")


def test_dump_model(path3):
    out = io.StringIO()
    dump_model(build_lp1(path3), out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "# LP1 variables=3 constraints=3 terms=7"
    assert lines[2:] == ["0: 0 1", "1: 0 1 2", "2: 1 2"]


def test_path_lp_matches_hand_value():
    # P6 has a perfect fractional cover of weight 2
    assert _objective(build_lp1(path_graph(6))) == pytest.approx(2.0, abs=1e-6)
