"""
Report rendering: CSV through the csv module, Markdown through Jinja2 templates.

Both formats share one table layout: graph, n, m, the lower bound, then a
size and a ratio column per algorithm in run order. Timings only appear when
requested, so fixed-seed runs render byte-identical output.
"""

import csv
import io
from typing import List, Optional, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from core.calculations import format_bound
from core.logging_config import get_logger
from core.models import ArboricityEstimate, ExperimentReport, ExperimentRow, OutputFormat
from core.paths import app_paths

logger = get_logger(__name__)

MARKDOWN_TEMPLATE = "experiment_report.md.j2"
LP_BOUND = "L*"
DECOMPOSITION_BOUND = "max{M*,N*}"


def _bound_name(report: ExperimentReport) -> str:
    kinds = {row.bound_kind for row in report.rows}
    if kinds == {LP_BOUND}:
        return LP_BOUND
    if kinds == {DECOMPOSITION_BOUND}:
        return DECOMPOSITION_BOUND
    return "bound"


def _published(report: ExperimentReport, row: ExperimentRow, key: str) -> str:
    value = report.published.get(row.graph_id, {}).get(key)
    return "-" if value is None else f"{value:g}"


def _arboricity_cell(row: ExperimentRow) -> str:
    """Each distinct estimate the algorithms thresholded with, else the row's own estimate."""
    used: List[ArboricityEstimate] = []
    for outcome in row.outcomes:
        value, kind = outcome.details.get("arboricity"), outcome.details.get("arboricity_kind")
        if value is None or kind is None:
            continue
        estimate = ArboricityEstimate(value, kind)
        if estimate not in used:
            used.append(estimate)
    if not used and row.arboricity is not None:
        used.append(row.arboricity)
    return "; ".join(estimate.describe() for estimate in used) or "-"


def report_table(report: ExperimentReport) -> Tuple[List[str], List[List[str]]]:
    """Header and rows of the report as strings."""
    labels = report.algorithm_labels
    bound = _bound_name(report)
    with_parts = any(row.m_star is not None for row in report.rows)
    compare = bool(report.published)

    header = ["graph", "n", "m", "bound kind", bound]
    if with_parts:
        header += ["M*", "N*"]
    if compare:
        header.append(f"published {LP_BOUND}")
    header.append("arboricity")
    for label in labels:
        header += [label, f"{label}/{bound}"]
        if report.timings:
            header.append(f"{label} seconds")
        if compare:
            header.append(f"published {label}")
    header.append("valid")

    rows = []
    for row in report.rows:
        by_label = {outcome.label: outcome for outcome in row.outcomes}
        cells = [row.graph_id, str(row.n), str(row.m), row.bound_kind, format_bound(row.bound)]
        if with_parts:
            cells += [format_bound(row.m_star), format_bound(row.n_star)]
        if compare:
            cells.append(_published(report, row, LP_BOUND))
        cells.append(_arboricity_cell(row))
        for label in labels:
            outcome = by_label.get(label)
            if outcome is None:
                cells += ["-", "-"]
            else:
                cells += [str(outcome.size), outcome.ratio or "-"]
            if report.timings:
                cells.append(f"{outcome.elapsed:.3f}" if outcome is not None else "-")
            if compare:
                cells.append(_published(report, row, label))
        cells.append("yes" if all(outcome.valid for outcome in row.outcomes) else "no")
        rows.append(cells)
    return header, rows


def render_csv(report: ExperimentReport) -> str:
    header, rows = report_table(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(app_paths.templates_dir)),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
        undefined=StrictUndefined,
    )


def render_markdown(report: ExperimentReport, notes: Optional[Sequence[str]] = None) -> str:
    header, rows = report_table(report)
    template = _environment().get_template(MARKDOWN_TEMPLATE)
    return template.render(
        title=report.title,
        header=header,
        rows=rows,
        notes=list(notes or []),
    )


def render(report: ExperimentReport, fmt: OutputFormat) -> str:
    if fmt == OutputFormat.MARKDOWN:
        return render_markdown(report)
    return render_csv(report)
