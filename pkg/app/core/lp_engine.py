"""
Covering linear programs for domination: LP1, the hybrid's partial LP and the
LP2/LP3 separation pair, plus a pluggable solving engine.

The default engine hands the model to HiGHS through scipy.optimize.linprog.
Solutions are re-checked row by row against the model; solver residuals are
never trusted.
"""

import time
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, TextIO, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.optimize import linprog

from core.errors import InputError, SolverError
from core.graph import Graph, open_neighborhood_of_set
from core.logging_config import get_logger, log_function_call, log_performance
from core.models import (
    DecompositionBound, FractionalSolution, LpModel, LpStatus, Separation, VertexSet
)

logger = get_logger(__name__)

FEASIBILITY_TOL = 1e-6


# Model builders
def build_lp1(g: Graph) -> LpModel:
    """LP1: one variable and one closed-neighborhood row per vertex."""
    vertices = tuple(range(g.n))
    rows = tuple(tuple(g.closed_neighborhood(v)) for v in vertices)
    return LpModel(vertices, vertices, rows, name="LP1")


def build_partial_lp(g: Graph, s: Iterable[int]) -> LpModel:
    """
    The hybrid's partial LP: variables on V - S, rows for every vertex that
    S does not dominate. Such a vertex has no neighbor in S, so its whole
    closed neighborhood is variables. With S empty this is LP1.
    """
    forced = frozenset(s)
    _check_vertices(g, forced)
    if not forced:
        model = build_lp1(g)
        return LpModel(model.variable_vertices, model.constraint_vertices, model.rows, name="partial LP")

    dominated = set(forced) | open_neighborhood_of_set(g, forced)
    variables = tuple(v for v in range(g.n) if v not in forced)
    constraints = tuple(v for v in range(g.n) if v not in dominated)
    rows = tuple(tuple(g.closed_neighborhood(v)) for v in constraints)
    return LpModel(variables, constraints, rows, name="partial LP")


def build_separation_lps(g: Graph, sep: Separation) -> Tuple[LpModel, LpModel]:
    """
    LP2 (variables A ∪ B, rows for A) and LP3 (variables B ∪ C, rows for C).

    Raises:
        InputError: if sep is not a partition of V or an edge joins A and C
    """
    validate_separation(g, sep)
    lp2 = _restricted_model(g, sep.a | sep.b, sep.a, "LP2")
    lp3 = _restricted_model(g, sep.b | sep.c, sep.c, "LP3")
    return lp2, lp3


def _restricted_model(g: Graph, variables: VertexSet, constraints: VertexSet, name: str) -> LpModel:
    var_order = tuple(sorted(variables))
    rows = []
    for v in sorted(constraints):
        row = tuple(u for u in g.closed_neighborhood(v) if u in variables)
        if not row:
            raise InputError(f"{name}: constraint for vertex {v} has no variables")
        rows.append(row)
    return LpModel(var_order, tuple(sorted(constraints)), tuple(rows), name=name)


def validate_separation(g: Graph, sep: Separation) -> None:
    parts = (sep.a, sep.b, sep.c)
    for part in parts:
        _check_vertices(g, part)
    if sep.a & sep.b or sep.a & sep.c or sep.b & sep.c:
        raise InputError("separation parts A, B, C must be disjoint")
    if len(sep.a) + len(sep.b) + len(sep.c) != g.n:
        raise InputError(f"separation covers {len(sep.a) + len(sep.b) + len(sep.c)} of {g.n} vertices")
    for u in sorted(sep.a):
        for v in g.neighbor_lists[u]:
            if v in sep.c:
                raise InputError(f"invalid separation: edge ({u}, {v}) joins A and C")


def separation_from_prefix(g: Graph, prefix: Iterable[int]) -> Separation:
    """A = prefix, B = N(A) - A, C = everything else."""
    a = frozenset(prefix)
    b = open_neighborhood_of_set(g, a)
    c = frozenset(range(g.n)) - a - b
    return Separation(a, b, c)


def _check_vertices(g: Graph, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} is not in 0..{g.n - 1}")


# Engines
class LpEngine(ABC):
    """Solves an LpModel to optimality or reports why it could not."""

    name = "abstract"

    @abstractmethod
    def solve(self, model: LpModel) -> FractionalSolution:
        pass


class HighsEngine(LpEngine):
    """
    HiGHS through scipy.optimize.linprog.

    method is one of 'highs' (automatic choice), 'highs-ds' (dual revised
    simplex) or 'highs-ipm' (interior point with crossover).
    """

    METHODS = ("highs", "highs-ds", "highs-ipm")

    def __init__(self, method: str = "highs", time_limit: Optional[float] = None):
        if method not in self.METHODS:
            raise InputError(f"unknown LP method '{method}' (expected one of {', '.join(self.METHODS)})")
        self.method = method
        self.time_limit = time_limit
        self.name = method

    def solve(self, model: LpModel) -> FractionalSolution:
        if model.num_constraints == 0:
            weights = {v: 0.0 for v in model.variable_vertices}
            return FractionalSolution(weights, 0.0, LpStatus.OPTIMAL, "no constraints")

        index = {v: i for i, v in enumerate(model.variable_vertices)}
        indptr = np.zeros(model.num_constraints + 1, dtype=np.int64)
        np.cumsum([len(row) for row in model.rows], out=indptr[1:])
        indices = np.fromiter((index[u] for row in model.rows for u in row),
                              dtype=np.int64, count=int(indptr[-1]))
        a_ub = sp.csr_matrix((-np.ones(len(indices)), indices, indptr),
                             shape=(model.num_constraints, model.num_variables))
        b_ub = -np.ones(model.num_constraints)
        c = np.ones(model.num_variables)

        options = {"presolve": True}
        if self.time_limit is not None:
            options["time_limit"] = float(self.time_limit)

        try:
            res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=(0.0, 1.0), method=self.method, options=options)
        except (MemoryError, ValueError) as e:
            return FractionalSolution({}, float("nan"), LpStatus.ERROR, f"{self.method} failed: {e}")

        if res.status == 2:
            return FractionalSolution({}, float("nan"), LpStatus.INFEASIBLE, res.message)
        if res.status != 0 or res.x is None:
            return FractionalSolution({}, float("nan"), LpStatus.ERROR, f"{self.method}: {res.message}")

        x = np.clip(res.x, 0.0, 1.0)
        weights = dict(zip(model.variable_vertices, x.tolist()))
        return FractionalSolution(weights, float(x.sum()), LpStatus.OPTIMAL, res.message)


ENGINES = {method: HighsEngine for method in HighsEngine.METHODS}
_default_engine: LpEngine = HighsEngine()


def get_engine(method: str = "highs", time_limit: Optional[float] = None) -> LpEngine:
    if method not in ENGINES:
        raise InputError(f"unknown LP engine '{method}' (expected one of {', '.join(sorted(ENGINES))})")
    return ENGINES[method](method, time_limit)


def default_engine() -> LpEngine:
    return _default_engine


# Solving
@log_function_call
def solve_lp(model: LpModel, engine: Optional[LpEngine] = None) -> FractionalSolution:
    """
    Solve a covering model.

    Returns:
        FractionalSolution; status OPTIMAL only when every row checks out
        within FEASIBILITY_TOL against the model itself
    """
    engine = engine or _default_engine
    start = time.perf_counter()
    if model.num_variables == 0:
        solution = FractionalSolution({}, 0.0, LpStatus.OPTIMAL, "empty model")
    else:
        solution = engine.solve(model)

    if solution.status == LpStatus.OPTIMAL:
        violated = verify_feasibility(model, solution)
        if violated:
            solution = FractionalSolution(
                solution.weights, solution.objective, LpStatus.ERROR,
                f"{len(violated)} constraint(s) violated after solve, first at vertex {violated[0]}",
            )
    elif solution.status == LpStatus.INFEASIBLE:
        # The all-ones point is feasible for every well-formed covering model
        logger.error(f"{model.name} reported infeasible: {solution.message}")

    elapsed = time.perf_counter() - start
    log_performance(f"solve {model.name}", elapsed * 1000,
                    f"vars={model.num_variables}, rows={model.num_constraints}, "
                    f"status={solution.status.value}, objective={solution.objective:.6f}")
    return FractionalSolution(solution.weights, solution.objective, solution.status, solution.message, elapsed)


def verify_feasibility(model: LpModel, solution: FractionalSolution,
                       tol: float = FEASIBILITY_TOL) -> List[int]:
    """Constraint vertices whose row sum falls short of 1 - tol, or whose weights are missing."""
    weights = solution.weights
    violated = []
    for v, row in zip(model.constraint_vertices, model.rows):
        total = 0.0
        for u in row:
            if u not in weights:
                violated.append(v)
                break
            total += weights[u]
        else:
            if total < 1.0 - tol:
                violated.append(v)
    return violated


def require_optimal(solution: FractionalSolution, context: str) -> FractionalSolution:
    if solution.status != LpStatus.OPTIMAL:
        raise SolverError(f"{context}: LP {solution.status.value} ({solution.message})", solution)
    return solution


def restrict(solution: FractionalSolution, vertices: Iterable[int]) -> FractionalSolution:
    """Restrict a solution to a subset of its variables."""
    weights = {v: solution.weights[v] for v in vertices}
    return FractionalSolution(weights, float(sum(weights.values())), solution.status, "restricted")


def decomposition_lower_bound(g: Graph, sep: Separation, engine: Optional[LpEngine] = None,
                              parallel: bool = False,
                              prefix_fraction: Optional[float] = None) -> DecompositionBound:
    """
    max{M*, N*} from LP2 and LP3: a certified lower bound on L* and so on γ(G).

    Raises:
        InputError: invalid separation
        SolverError: either LP failed
    """
    lp2, lp3 = build_separation_lps(g, sep)
    if parallel:
        with ThreadPoolExecutor(max_workers=2) as pool:
            sol2, sol3 = pool.map(lambda model: solve_lp(model, engine), (lp2, lp3))
    else:
        sol2, sol3 = solve_lp(lp2, engine), solve_lp(lp3, engine)
    require_optimal(sol2, "LP2")
    require_optimal(sol3, "LP3")
    value = max(sol2.objective, sol3.objective)
    logger.info(f"decomposition bound: M*={sol2.objective:.4f}, N*={sol3.objective:.4f}, "
                f"|A|={len(sep.a)}, |B|={len(sep.b)}, |C|={len(sep.c)}")
    return DecompositionBound(value, sol2.objective, sol3.objective, sep, prefix_fraction)


def dump_model(model: LpModel, stream: TextIO) -> None:
    """Row-oriented text dump: one 'vertex: term term ...' line per constraint."""
    stream.write(f"# {model.name} variables={model.num_variables} "
                 f"constraints={model.num_constraints} terms={model.num_terms}\n")
    stream.write("# minimize sum of all variables, 0 <= x_v <= 1, each row >= 1\n")
    for v, row in zip(model.constraint_vertices, model.rows):
        stream.write(f"{v}: {' '.join(str(u) for u in row)}\n")
