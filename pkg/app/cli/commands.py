"""
Subcommand handlers. Each takes the parsed arguments and an output stream and
returns a process exit code; domain errors propagate to cli_main.
"""

import argparse
import sys
from typing import Dict, Optional, TextIO

from core.calculations import format_bound
from core.errors import InputError
from core.experiment_config import parse_algorithms, parse_config
from core.generators import generate
from core.graph import Graph, first_undominated, is_dominating
from core.ingest import read_vertex_set, write_graph, write_graph_file, write_vertex_set
from core.logging_config import get_logger
from core.lp_engine import (
    build_lp1, build_separation_lps, dump_model, get_engine, require_optimal
)
from core.models import (
    AlgorithmName, Family, FamilyParams, GraphFormat, LowerBoundMode, OracleLimits, OutputFormat,
    TiePolicy, VariantTag
)
from core.paths import app_paths
from core.reports import render
from core.services import ExperimentService, GraphService, LowerBoundService, SolveContext, SolverService
from core.suites import parse_declared_family

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INVALID = 4


def _format(value: Optional[str]) -> GraphFormat:
    return GraphFormat.parse(value) if value else GraphFormat.EDGE_LIST


def _engine(args: argparse.Namespace):
    return get_engine(args.lp_method or "highs", args.lp_time_limit)


def _load(args: argparse.Namespace) -> Graph:
    return GraphService.load_file(args.input, _format(args.format))


def cmd_generate(args: argparse.Namespace, out: TextIO) -> int:
    params = FamilyParams(Family(args.family), d=args.d, k=args.k, n=args.n, p=args.p, seed=args.seed)
    g = generate(params)
    fmt = _format(args.format)
    if args.out:
        write_graph_file(g, app_paths.resolve_output(args.out), fmt)
    else:
        write_graph(g, out, fmt)
    logger.info(f"generated {params.describe()}: n={g.n}, m={g.m}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args)
    variant = VariantTag(args.variant) if args.variant else VariantTag.A1
    tie = TiePolicy(args.tie) if args.tie else TiePolicy.MIN_ID
    alpha = 0.5 if args.alpha is None else args.alpha
    algorithms = parse_algorithms(args.algo or ["greedy"], variant, alpha, tie)
    if args.out and len([a for a in algorithms if a.name != AlgorithmName.LP_ONLY]) > 1:
        raise InputError("--out writes one set; run a single algorithm with it")

    ctx = SolveContext(
        family=parse_declared_family(args.family),
        arboricity=args.arboricity,
        threshold=args.threshold,
        engine=_engine(args),
        oracle_limits=OracleLimits(max_vertices=args.max_n),
    )
    out.write(f"graph: n={g.n} m={g.m}\n")
    for algorithm in algorithms:
        if algorithm.name == AlgorithmName.LP_ONLY:
            model = build_lp1(g)
            if args.dump_model:
                with open(app_paths.resolve_output(args.dump_model), "w", encoding="utf-8") as f:
                    dump_model(model, f)
            solution = require_optimal(LowerBoundService.lp1(g, ctx.engine), "LP1")
            ctx.lp_solution = solution
            out.write(f"L*: {solution.objective:.6f} ({format_bound(solution.objective)}) "
                      f"elapsed={solution.elapsed:.3f}s\n")
            continue

        result = SolverService.run(g, algorithm, ctx)
        line = f"{algorithm.label}: size={result.size} valid=yes elapsed={result.elapsed:.3f}s"
        if algorithm.name == AlgorithmName.EXACT and not result.details.get("complete", True):
            line += " (incomplete: time budget reached)"
        out.write(line + "\n")
        if args.out:
            with open(app_paths.resolve_output(args.out), "w", encoding="utf-8", newline="\n") as f:
                write_vertex_set(g, result.vertices, f)
    return EXIT_OK


def cmd_lowerbound(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args)
    engine = _engine(args)
    mode = LowerBoundMode(args.lower_bound) if args.lower_bound else (
        LowerBoundMode.DECOMPOSITION if args.prefix_fraction is not None else LowerBoundMode.LP1
    )
    tie = TiePolicy(args.tie) if args.tie else TiePolicy.MIN_ID

    if mode == LowerBoundMode.LP1:
        if args.dump_model:
            with open(app_paths.resolve_output(args.dump_model), "w", encoding="utf-8") as f:
                dump_model(build_lp1(g), f)
        solution = require_optimal(LowerBoundService.lp1(g, engine), "LP1 (try --lower-bound decomposition)")
        out.write(f"L*: {solution.objective:.6f}\n")
        return EXIT_OK

    if args.prefix_fraction is None:
        raise InputError("decomposition mode needs --prefix-fraction in (0, 1)")
    bound = LowerBoundService.decomposition(g, args.prefix_fraction, tie, engine, parallel=True)
    if args.dump_model:
        lp2, lp3 = build_separation_lps(g, bound.separation)
        for suffix, model in (("lp2", lp2), ("lp3", lp3)):
            with open(app_paths.resolve_output(f"{args.dump_model}.{suffix}"), "w", encoding="utf-8") as f:
                dump_model(model, f)
    sep = bound.separation
    out.write(f"separation: |A|={len(sep.a)} |B|={len(sep.b)} |C|={len(sep.c)}\n")
    out.write(f"M*: {bound.m_star:.6f}\n")
    out.write(f"N*: {bound.n_star:.6f}\n")
    out.write(f"max{{M*,N*}}: {bound.value:.6f}\n")
    return EXIT_OK


def _bench_settings(args: argparse.Namespace) -> Dict[str, object]:
    settings: Dict[str, object] = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as f:
            settings.update(parse_config(f))

    overrides = {
        "suite": args.suite,
        "input": args.input,
        "format": _format(args.format) if args.format else None,
        "family": args.family,
        "sizes": [int(part) for part in args.sizes.split(",") if part.strip()] if args.sizes else None,
        "algorithms": args.algo,
        "alpha": args.alpha,
        "variant": VariantTag(args.variant) if args.variant else None,
        "arboricity": args.arboricity,
        "threshold": args.threshold,
        "tie": TiePolicy(args.tie) if args.tie else None,
        "lower_bound": LowerBoundMode(args.lower_bound) if args.lower_bound else None,
        "prefix_fraction": args.prefix_fraction,
        "emit": OutputFormat(args.emit) if args.emit else None,
        "seed": args.seed,
        "timings": args.timings,
        "jobs": args.jobs,
        "lp_method": args.lp_method,
        "lp_time_limit": args.lp_time_limit,
        "lp_max_vertices": args.lp_max_vertices,
        "max_n": args.max_n,
        "compare": args.compare,
    }
    settings.update({key: value for key, value in overrides.items() if value is not None})
    if "algorithms" in settings and isinstance(settings["algorithms"], str):
        settings["algorithms"] = [settings["algorithms"]]
    return settings


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    settings = _bench_settings(args)
    if settings.get("jobs", 1) < 1:
        raise InputError("--jobs must be >= 1")
    spec = ExperimentService.build_spec(settings)
    report = ExperimentService.run_experiment(spec)
    text = render(report, spec.output)
    if args.out:
        path = app_paths.resolve_output(args.out)
        path.write_text(text, encoding="utf-8")
        logger.info(f"wrote {spec.output.value} report with {len(report.rows)} rows to {path}")
    else:
        out.write(text)
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    g = _load(args)
    with open(args.set_path, "r", encoding="utf-8") as f:
        vertices = read_vertex_set(g, f)
    if is_dominating(g, vertices):
        out.write(f"valid: {len(vertices)} vertices dominate n={g.n}\n")
        return EXIT_OK
    missing = first_undominated(g, vertices)
    out.write(f"invalid: vertex {g.label_of(missing)} is not dominated\n")
    return EXIT_INVALID


COMMANDS = {
    "generate": cmd_generate,
    "solve": cmd_solve,
    "lowerbound": cmd_lowerbound,
    "bench": cmd_bench,
    "validate": cmd_validate,
}


def dispatch(args: argparse.Namespace, out: TextIO = None) -> int:
    return COMMANDS[args.command](args, out or sys.stdout)
