"""
Services behind the command-line layer.
Loading graphs, computing lower bounds, running single algorithms and whole
experiments; every set leaving this module has been re-checked for domination.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from core.arboricity import resolve_arboricity
from core.calculations import format_ratio, greedy_upper_bound, ratio_at_least_one
from core.errors import InputError, InvalidResultError, SolverError
from core.exact_oracle import exact_gamma
from core.experiment_config import parse_algorithms
from core.generators import generate
from core.graph import Graph, first_undominated, is_dominating
from core.greedy import greedy_dominating_set, greedy_prefix
from core.hybrid import hybrid_dominating_set
from core.ingest import read_graph_file
from core.logging_config import get_logger, log_performance
from core.lp_engine import (
    LpEngine, build_lp1, decomposition_lower_bound, get_engine, separation_from_prefix, solve_lp
)
from core.models import (
    AlgorithmName, AlgorithmOutcome, AlgorithmSpec, DecompositionBound, DominatingSetResult,
    ExperimentReport, ExperimentRow, ExperimentSpec, FamilyParams, FractionalSolution,
    GraphFormat, GraphSource, GreedyResult, HybridConfig, LowerBoundMode, OracleLimits,
    OutputFormat, TiePolicy, VariantTag
)
from core.rounding import lp_round, resolve_variant
from core.suites import (
    DENSITY_ALGORITHMS, FILES_SUITE, GENERATOR_ALGORITHMS, PUBLISHED, file_sources, get_suite,
    parse_declared_family
)

logger = get_logger(__name__)

DEFAULT_PREFIX_FRACTION = 0.5
LP_BOUND = "L*"
DECOMPOSITION_BOUND = "max{M*,N*}"
ROUNDING_ALGORITHMS = (
    AlgorithmName.A1, AlgorithmName.A2, AlgorithmName.A1_PRIME, AlgorithmName.A2_PRIME, AlgorithmName.A3,
)


class GraphService:
    """Service for obtaining graphs."""

    @staticmethod
    def load(source: GraphSource) -> Graph:
        """Generate or read the graph of a source."""
        if source.family_params is not None:
            return generate(source.family_params)
        if source.path is None:
            raise InputError("graph source has neither generator parameters nor a file")
        return read_graph_file(source.path, source.format)

    @staticmethod
    def load_file(path: str, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> Graph:
        return read_graph_file(path, fmt)


@dataclass
class LowerBoundInfo:
    """The bound a row's ratios are computed against."""
    kind: str
    value: float
    lp_solution: Optional[FractionalSolution] = None
    decomposition: Optional[DecompositionBound] = None


class LowerBoundService:
    """Service for LP lower bounds."""

    @staticmethod
    def lp1(g: Graph, engine: Optional[LpEngine] = None) -> FractionalSolution:
        return solve_lp(build_lp1(g), engine)

    @staticmethod
    def decomposition(g: Graph, prefix_fraction: float, tie: TiePolicy = TiePolicy.MIN_ID,
                      engine: Optional[LpEngine] = None, parallel: bool = False,
                      greedy_result: Optional[GreedyResult] = None) -> DecompositionBound:
        """max{M*, N*} on the separation induced by a greedy prefix."""
        if not 0.0 < prefix_fraction < 1.0:
            raise InputError(f"prefix fraction must lie in (0, 1), got {prefix_fraction}")
        if greedy_result is None or greedy_result.tie != tie:
            greedy_result = greedy_dominating_set(g, tie)
        prefix = greedy_prefix(greedy_result, prefix_fraction)
        sep = separation_from_prefix(g, prefix)
        return decomposition_lower_bound(g, sep, engine, parallel, prefix_fraction)

    @staticmethod
    def compute(g: Graph, spec: ExperimentSpec, engine: Optional[LpEngine] = None,
                greedy_result: Optional[GreedyResult] = None) -> LowerBoundInfo:
        """
        The bound a spec asks for, falling back from LP1 to the decomposition
        bound when LP1 is over the vertex cap or the solver fails.

        Raises:
            SolverError: the decomposition bound failed as well
        """
        fraction = spec.prefix_fraction or DEFAULT_PREFIX_FRACTION
        parallel = spec.jobs > 1
        if spec.lower_bound == LowerBoundMode.LP1:
            if spec.lp_max_vertices is not None and g.n > spec.lp_max_vertices:
                logger.warning(f"n={g.n} exceeds lp_max_vertices={spec.lp_max_vertices}; "
                               f"using the decomposition bound (prefix fraction {fraction})")
            else:
                solution = LowerBoundService.lp1(g, engine)
                if solution.is_optimal:
                    return LowerBoundInfo(LP_BOUND, solution.objective, lp_solution=solution)
                logger.warning(f"LP1 failed ({solution.message}); falling back to the decomposition bound, "
                               f"use --lower-bound decomposition to skip LP1")

        try:
            bound = LowerBoundService.decomposition(g, fraction, spec.tie, engine, parallel, greedy_result)
        except SolverError as e:
            raise SolverError(f"{e}; try a different --prefix-fraction or --lp-method", e.solution) from e
        return LowerBoundInfo(DECOMPOSITION_BOUND, bound.value, decomposition=bound)


@dataclass
class SolveContext:
    """What one graph's algorithm runs share."""
    family: Optional[FamilyParams] = None
    arboricity: Optional[int] = None
    threshold: Optional[float] = None
    engine: Optional[LpEngine] = None
    lp_solution: Optional[FractionalSolution] = None
    decomposition: Optional[DecompositionBound] = None
    oracle_limits: OracleLimits = OracleLimits()
    greedy_runs: Dict[TiePolicy, GreedyResult] = field(default_factory=dict)

    def greedy(self, g: Graph, tie: TiePolicy) -> GreedyResult:
        if tie not in self.greedy_runs:
            self.greedy_runs[tie] = greedy_dominating_set(g, tie)
        return self.greedy_runs[tie]


class SolverService:
    """Service for running one algorithm on one graph."""

    @staticmethod
    def run(g: Graph, algorithm: AlgorithmSpec, ctx: SolveContext) -> DominatingSetResult:
        """
        Run an algorithm and re-check its output.

        Raises:
            InputError: the algorithm cannot run on this graph (lp-only has no set)
            SolverError: an LP failed
            InvalidResultError: the output does not dominate g
        """
        name = algorithm.name
        if name == AlgorithmName.GREEDY:
            run = ctx.greedy(g, algorithm.tie)
            result = run.as_result()
        elif name == AlgorithmName.HYBRID:
            tag = algorithm.variant or VariantTag.A1
            variant = resolve_variant(tag, g, ctx.family, ctx.arboricity, ctx.threshold)
            reused = ctx.greedy(g, algorithm.tie)
            n_star = None
            bound = ctx.decomposition
            if bound is not None and bound.separation.a == frozenset(greedy_prefix(reused, algorithm.alpha)):
                n_star = bound.n_star
            result = hybrid_dominating_set(g, HybridConfig(algorithm.alpha, variant, algorithm.tie),
                                           ctx.engine, reused, n_star)
            result = DominatingSetResult(result.vertices, result.algorithm,
                                         result.elapsed + reused.elapsed, result.details)
        elif name == AlgorithmName.EXACT:
            lp = ctx.lp_solution
            lp_bound = lp.objective if lp is not None and lp.is_optimal else None
            oracle = exact_gamma(g, ctx.oracle_limits, lp_bound)
            result = DominatingSetResult(oracle.vertices, "exact", oracle.elapsed,
                                         {"complete": oracle.complete, "nodes": oracle.nodes})
        elif name == AlgorithmName.LP_ONLY:
            raise InputError("lp-only computes L* and returns no dominating set")
        else:
            variant = resolve_variant(VariantTag(name.value), g, ctx.family, ctx.arboricity)
            if ctx.lp_solution is None:
                ctx.lp_solution = LowerBoundService.lp1(g, ctx.engine)
            result = lp_round(g, variant, ctx.engine, ctx.lp_solution)

        SolverService.validate(g, result.vertices, algorithm.label)
        return result

    @staticmethod
    def validate(g: Graph, vertices, label: str) -> None:
        if not is_dominating(g, vertices):
            missing = first_undominated(g, vertices)
            raise InvalidResultError(f"{label} returned a set that leaves vertex {missing} undominated")


class ExperimentService:
    """Service for running experiments and suites."""

    @staticmethod
    def build_spec(settings: Dict[str, object]) -> ExperimentSpec:
        """
        Turn typed settings (from a config file and/or CLI flags) into a spec.

        Raises:
            InputError: neither a suite nor an input, or inconsistent settings
        """
        seed = int(settings.get("seed", 0))
        suite_name = settings.get("suite")
        declared = parse_declared_family(settings.get("family"), settings.get("family_k"))
        title = "Experiment"
        default_algorithms = GENERATOR_ALGORITHMS

        if suite_name == FILES_SUITE:
            if not settings.get("input"):
                raise InputError("the files suite needs an input directory (--input DIR)")
            sources = file_sources(Path(settings["input"]), declared)
            title = f"Results for {Path(settings['input']).name}"
            if declared is None:
                default_algorithms = DENSITY_ALGORITHMS
        elif suite_name:
            suite = get_suite(suite_name)
            sources = suite.sources(settings.get("sizes"), seed)
            title = suite.title
            default_algorithms = suite.algorithms
        elif settings.get("input"):
            path = Path(settings["input"])
            fmt = settings.get("format", GraphFormat.EDGE_LIST)
            sources = [GraphSource(path=str(path), format=fmt, declared_family=declared, graph_id=path.stem)]
            title = f"Results for {path.name}"
            if declared is None:
                default_algorithms = DENSITY_ALGORITHMS
        else:
            raise InputError("nothing to run: give a suite or an input graph")

        alpha = float(settings.get("alpha", 0.5))
        tie = settings.get("tie", TiePolicy.MIN_ID)
        if settings.get("algorithms"):
            tokens = settings["algorithms"]
            if isinstance(tokens, str):
                tokens = [tokens]
            algorithms = parse_algorithms(tokens, settings.get("variant", VariantTag.A1), alpha, tie)
        else:
            algorithms = [AlgorithmSpec(a.name, a.variant, alpha, tie) for a in default_algorithms]
        if not algorithms:
            raise InputError("an experiment needs at least one algorithm")

        lower_bound = settings.get("lower_bound", LowerBoundMode.LP1)
        prefix_fraction = settings.get("prefix_fraction")
        if lower_bound == LowerBoundMode.DECOMPOSITION and prefix_fraction is None:
            raise InputError("decomposition lower bound needs a prefix fraction in (0, 1)")

        return ExperimentSpec(
            sources=sources,
            algorithms=algorithms,
            arboricity=settings.get("arboricity"),
            threshold=settings.get("threshold"),
            lower_bound=lower_bound,
            prefix_fraction=prefix_fraction,
            output=settings.get("emit", OutputFormat.CSV),
            seed=seed,
            timings=bool(settings.get("timings", False)),
            jobs=int(settings.get("jobs", 1)),
            lp_method=settings.get("lp_method", "highs"),
            lp_time_limit=settings.get("lp_time_limit"),
            lp_max_vertices=settings.get("lp_max_vertices"),
            tie=tie,
            oracle_max_vertices=int(settings.get("max_n", 32)),
            title=title,
            compare=bool(settings.get("compare", False)),
        )

    @staticmethod
    def run_experiment(spec: ExperimentSpec, engine: Optional[LpEngine] = None) -> ExperimentReport:
        """
        Run every algorithm of a spec on every graph of it.

        Rows may be computed on a thread pool (spec.jobs); they are reported in
        source order either way.

        Raises:
            InputError: empty algorithm list or bad source
            SolverError: no lower bound could be computed for a graph
            InvalidResultError: an algorithm returned a non-dominating set
        """
        if not spec.algorithms:
            raise InputError("an experiment needs at least one algorithm")
        engine = engine or get_engine(spec.lp_method, spec.lp_time_limit)
        start = time.perf_counter()

        if spec.jobs > 1 and len(spec.sources) > 1:
            with ThreadPoolExecutor(max_workers=spec.jobs) as pool:
                rows = list(pool.map(lambda source: ExperimentService.run_row(source, spec, engine),
                                     spec.sources))
        else:
            rows = [ExperimentService.run_row(source, spec, engine) for source in spec.sources]

        published = {}
        if spec.compare:
            published = {row.graph_id: PUBLISHED[row.graph_id] for row in rows if row.graph_id in PUBLISHED}
        log_performance("run_experiment", (time.perf_counter() - start) * 1000,
                        f"graphs={len(rows)}, algorithms={len(spec.algorithms)}, jobs={spec.jobs}")
        return ExperimentReport(rows, spec.title, spec.timings, published)

    @staticmethod
    def run_row(source: GraphSource, spec: ExperimentSpec, engine: Optional[LpEngine] = None) -> ExperimentRow:
        """One graph: load it, bound it, run and check every algorithm."""
        g = GraphService.load(source)
        graph_id = source.graph_id or (source.family_params.describe() if source.family_params else str(source.path))
        logger.info(f"{graph_id}: n={g.n}, m={g.m}")
        family = source.family_context

        ctx = SolveContext(family=family, arboricity=spec.arboricity, threshold=spec.threshold,
                           engine=engine, oracle_limits=OracleLimits(max_vertices=spec.oracle_max_vertices))
        bound = LowerBoundService.compute(g, spec, engine, ctx.greedy(g, spec.tie))
        ctx.lp_solution = bound.lp_solution
        ctx.decomposition = bound.decomposition

        outcomes: List[AlgorithmOutcome] = []
        for algorithm in spec.algorithms:
            outcome = ExperimentService._run_outcome(g, algorithm, ctx, bound, graph_id)
            if outcome is not None:
                outcomes.append(outcome)

        decomposition = bound.decomposition
        return ExperimentRow(
            graph_id=graph_id,
            n=g.n,
            m=g.m,
            bound_kind=bound.kind,
            bound=bound.value,
            arboricity=resolve_arboricity(g, family, spec.arboricity),
            outcomes=tuple(outcomes),
            m_star=decomposition.m_star if decomposition else None,
            n_star=decomposition.n_star if decomposition else None,
        )

    @staticmethod
    def _run_outcome(g: Graph, algorithm: AlgorithmSpec, ctx: SolveContext, bound: LowerBoundInfo,
                     graph_id: str) -> Optional[AlgorithmOutcome]:
        if algorithm.name == AlgorithmName.LP_ONLY:
            return None
        if algorithm.name == AlgorithmName.EXACT and g.n > ctx.oracle_limits.max_vertices:
            logger.warning(f"{graph_id}: skipping exact oracle (n={g.n} > {ctx.oracle_limits.max_vertices})")
            return None
        if algorithm.name in ROUNDING_ALGORITHMS and bound.lp_solution is None:
            logger.warning(f"{graph_id}: skipping {algorithm.label}, whole-graph rounding needs LP1 "
                           f"and this row is bounded by {bound.kind}")
            return None
        result = SolverService.run(g, algorithm, ctx)

        if bound.kind == LP_BOUND and not ratio_at_least_one(result.size, bound.value):
            raise InvalidResultError(
                f"{graph_id}: {algorithm.label} size {result.size} is below L*={bound.value:.6f}"
            )
        details = dict(result.details)
        if bound.kind == LP_BOUND and algorithm.name == AlgorithmName.GREEDY:
            details["guarantee"] = greedy_upper_bound(bound.value, g.max_degree)
        guarantee = details.get("guarantee", details.get("size_bound"))
        if guarantee is not None and result.size > guarantee + 1e-6:
            logger.warning(f"{graph_id}: {algorithm.label} size {result.size} exceeds its guarantee "
                           f"{guarantee:.4f}; check the arboricity value")
        return AlgorithmOutcome(
            label=algorithm.label,
            size=result.size,
            ratio=format_ratio(result.size, bound.value),
            elapsed=result.elapsed,
            valid=True,
            details=details,
        )
