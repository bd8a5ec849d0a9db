"""
Argument parser for the domset command line.
"""

import argparse

from core.lp_engine import HighsEngine
from core.models import Family, LowerBoundMode, OutputFormat, TiePolicy, VariantTag

FORMAT_CHOICES = ("edge-list", "metis", "snap")


def _add_input(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("-i", "--input", required=required, help="graph file")
    parser.add_argument("--format", default=None, choices=FORMAT_CHOICES,
                        help="graph file format (default: edge-list)")


def _add_lp(parser: argparse.ArgumentParser):
    parser.add_argument("--lp-method", default=None, choices=HighsEngine.METHODS,
                        help="HiGHS algorithm (default: highs)")
    parser.add_argument("--lp-time-limit", type=float, default=None, metavar="SECONDS",
                        help="time limit per LP solve")


def _add_rounding(parser: argparse.ArgumentParser):
    parser.add_argument("--alpha", type=float, default=None,
                        help="hybrid greedy-prefix fraction in [0, 1] (default: 0.5)")
    parser.add_argument("--variant", default=None, choices=[tag.value for tag in VariantTag],
                        help="rounding variant used by the hybrid (default: a1)")
    parser.add_argument("--arboricity", type=int, default=None, metavar="N",
                        help="arboricity value to threshold with")
    parser.add_argument("--threshold", type=float, default=None, metavar="T",
                        help="rounding threshold of the custom variant, capped at 1")
    parser.add_argument("--tie", default=None, choices=[tie.value for tie in TiePolicy],
                        help="greedy tie policy (default: min-id)")
    parser.add_argument("--family", default=None,
                        help="declared family of an input graph: planar, tree, kplanar:K or ktree:K")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domset",
        description="Minimum dominating set approximations: greedy, LP rounding and the hybrid, "
                    "with LP lower bounds and benchmark reports.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-v info, -vv debug)")
    parser.add_argument("--log-file", action="store_true",
                        help="also write daily and debug log files under the user data directory")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    gen = sub.add_parser("generate", help="write a generated graph")
    gen.add_argument("family", choices=[f.value for f in Family if f not in (Family.PLANAR, Family.KPLANAR,
                                                                            Family.TREE)])
    gen.add_argument("--d", type=int, help="hypercube dimension")
    gen.add_argument("--k", type=int, help="queens board side, or k of a k-tree")
    gen.add_argument("--n", type=int, help="k-tree vertex count")
    gen.add_argument("--p", type=int, help="trap scale")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--out", default=None, help="output file (default: stdout)")
    gen.add_argument("--format", default="edge-list", choices=FORMAT_CHOICES)

    solve = sub.add_parser("solve", help="run algorithms on one graph")
    _add_input(solve)
    solve.add_argument("--algo", action="append", default=None,
                       help="greedy, a1, a2, a1p, a2p, a3, hybrid, hybrid-<variant>, lp-only or exact "
                            "(repeatable; default: greedy)")
    _add_rounding(solve)
    solve.add_argument("--max-n", type=int, default=32, help="exact oracle vertex cap")
    solve.add_argument("--out", default=None, help="write the dominating set, one label per line")
    solve.add_argument("--dump-model", default=None, metavar="PATH",
                       help="with lp-only: write the LP1 rows")
    _add_lp(solve)

    lower = sub.add_parser("lowerbound", help="compute L* or max{M*, N*}")
    _add_input(lower)
    lower.add_argument("--lower-bound", default=None, choices=[mode.value for mode in LowerBoundMode],
                       help="lp1 (default) or decomposition")
    lower.add_argument("--prefix-fraction", type=float, default=None,
                       help="greedy-prefix fraction in (0, 1) defining the separation")
    lower.add_argument("--tie", default=None, choices=[tie.value for tie in TiePolicy])
    lower.add_argument("--dump-model", default=None, metavar="PATH",
                       help="write the LP rows (LP1, or LP2 and LP3 as PATH.lp2 / PATH.lp3)")
    _add_lp(lower)

    bench = sub.add_parser("bench", help="run a suite or a config file and report ratios")
    bench.add_argument("--suite", default=None,
                       help="hypercubes, queens, ktrees, ktrees-dense, traps or files")
    bench.add_argument("--sizes", default=None, help="comma-separated sizes overriding the suite's")
    bench.add_argument("--config", default=None, help="key=value experiment file")
    _add_input(bench, required=False)
    bench.add_argument("--algo", action="append", default=None, help="algorithm (repeatable)")
    _add_rounding(bench)
    bench.add_argument("--lower-bound", default=None, choices=[mode.value for mode in LowerBoundMode])
    bench.add_argument("--prefix-fraction", type=float, default=None)
    bench.add_argument("--emit", default=None, choices=[fmt.value for fmt in OutputFormat])
    bench.add_argument("--out", default=None, help="report file (default: stdout)")
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--timings", action="store_true", default=None,
                       help="include per-algorithm seconds")
    bench.add_argument("--jobs", type=int, default=None, help="graphs processed in parallel")
    bench.add_argument("--lp-max-vertices", type=int, default=None,
                       help="use the decomposition bound above this many vertices")
    bench.add_argument("--max-n", type=int, default=None, help="exact oracle vertex cap")
    bench.add_argument("--compare", action="store_true", default=None,
                       help="add published values beside computed ones")
    _add_lp(bench)

    validate = sub.add_parser("validate", help="check that a vertex set dominates a graph")
    _add_input(validate)
    validate.add_argument("--set", required=True, dest="set_path", help="vertex set file, one label per line")

    return parser
