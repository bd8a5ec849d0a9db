"""
Plain-text graph formats: whitespace edge lists, SNAP edge lists and METIS.
Inputs are normalized through build_graph; vertex-set files map labels back to ids.
"""

from pathlib import Path
from typing import Dict, Iterable, List, TextIO, Tuple

from core.errors import GraphParseError, InputError
from core.graph import Graph, build_graph
from core.logging_config import get_logger, log_diagnostic
from core.models import GraphFormat, VertexSet

logger = get_logger(__name__)

EDGE_COMMENT_PREFIXES = ("#", "%")
METIS_COMMENT_PREFIX = "%"


def read_graph(stream: TextIO, fmt: GraphFormat) -> Graph:
    """
    Read a graph in the named format.

    Args:
        stream: Text input
        fmt: Format of the input; never sniffed

    Returns:
        A simple Graph; labels hold the original tokens

    Raises:
        GraphParseError: with the number of the first offending line
    """
    if fmt == GraphFormat.METIS:
        return _read_metis(stream)
    return _read_edge_list(stream, fmt)


def _read_edge_list(stream: TextIO, fmt: GraphFormat) -> Graph:
    token_pairs: List[Tuple[str, str]] = []
    extra_columns = 0
    for line_number, raw in enumerate(stream, 1):
        line = raw.strip()
        if not line or line.startswith(EDGE_COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) < 2:
            raise GraphParseError(line_number, f"expected two endpoints, found {len(tokens)} token(s)", line)
        if len(tokens) > 2:
            extra_columns += 1
        token_pairs.append((tokens[0], tokens[1]))

    if extra_columns:
        log_diagnostic("read_graph", f"ignored extra columns on {extra_columns} line(s)")

    labels, index = _dense_labels(token for pair in token_pairs for token in pair)
    edges = [(index[u], index[v]) for u, v in token_pairs]
    log_diagnostic("read_graph", f"{fmt.value}: {len(labels)} labels remapped, {len(edges)} edge lines")
    return build_graph(len(labels), edges, labels)


def _dense_labels(tokens: Iterable[str]) -> Tuple[List[str], Dict[str, int]]:
    """
    Assign dense ids to label tokens.

    Canonical non-negative integers ("0", "17", never "01" or "+1") are
    numbered in ascending numeric order so files that already use 0..n-1 read
    back unchanged; anything else keeps first-appearance order, one vertex per
    distinct token.
    """
    seen: Dict[str, None] = {}
    for token in tokens:
        seen.setdefault(token, None)
    ordered = list(seen)

    if ordered and all(_is_canonical_int(token) for token in ordered):
        ordered.sort(key=int)
    return ordered, {token: position for position, token in enumerate(ordered)}


def _is_canonical_int(token: str) -> bool:
    return token.isascii() and token.isdigit() and str(int(token)) == token


def _read_metis(stream: TextIO) -> Graph:
    header = None
    header_line = 0
    vertex_lines: List[Tuple[int, str]] = []
    last_line = 0

    for line_number, raw in enumerate(stream, 1):
        last_line = line_number
        line = raw.strip()
        if line.startswith(METIS_COMMENT_PREFIX):
            continue
        if header is None:
            if not line:
                continue
            header, header_line = line, line_number
            continue
        vertex_lines.append((line_number, line))

    if header is None:
        raise GraphParseError(max(last_line, 1), "missing METIS header 'n m [fmt]'")

    fields = header.split()
    if len(fields) < 2:
        raise GraphParseError(header_line, "METIS header needs at least 'n m'", header)
    try:
        n, declared_m = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphParseError(header_line, "non-integer token in METIS header", header) from None
    if n < 0 or declared_m < 0:
        raise GraphParseError(header_line, "negative count in METIS header", header)
    if len(fields) >= 3 and fields[2].strip("0"):
        raise GraphParseError(header_line, f"weighted METIS format flag '{fields[2]}' is not supported", header)

    # Blank vertex lines are meaningful (isolated vertices); only trailing ones beyond n are ignored
    while len(vertex_lines) > n and not vertex_lines[-1][1]:
        vertex_lines.pop()
    if len(vertex_lines) > n:
        line_number, line = vertex_lines[n]
        raise GraphParseError(line_number, f"more adjacency lines than the {n} vertices declared", line)
    if len(vertex_lines) < n:
        raise GraphParseError(last_line + 1, f"truncated: expected {n} adjacency lines, found {len(vertex_lines)}")

    edges: List[Tuple[int, int]] = []
    for vertex, (line_number, line) in enumerate(vertex_lines):
        for token in line.split():
            try:
                neighbor = int(token)
            except ValueError:
                raise GraphParseError(line_number, f"non-integer token '{token}'", line) from None
            if neighbor < 1 or neighbor > n:
                raise GraphParseError(line_number, f"neighbor id {neighbor} outside 1..{n}", line)
            edges.append((vertex, neighbor - 1))

    g = build_graph(n, edges)
    if g.m != declared_m:
        log_diagnostic("read_graph", f"metis header declares {declared_m} edges, found {g.m}")
    return g


def write_graph(g: Graph, stream: TextIO, fmt: GraphFormat) -> None:
    """
    Write g so that read_graph gives the same graph back.

    Edge lists emit each unordered edge once with ascending endpoints, lines
    sorted; vertices are written by dense id. Isolated vertices survive only in METIS.
    """
    if fmt == GraphFormat.METIS:
        stream.write(f"{g.n} {g.m}\n")
        for v in range(g.n):
            stream.write(" ".join(str(u + 1) for u in g.neighbor_lists[v]))
            stream.write("\n")
        return

    if fmt == GraphFormat.SNAP_EDGE_LIST:
        stream.write(f"# Nodes: {g.n} Edges: {g.m}\n")
    for u, v in g.edge_list():
        stream.write(f"{u} {v}\n")


def read_graph_file(path, fmt: GraphFormat) -> Graph:
    """Open and read a graph file."""
    path = Path(path)
    if not path.exists():
        raise InputError(f"graph file not found: {path}")
    with open(path, 'r', encoding='utf-8') as f:
        g = read_graph(f, fmt)
    logger.info(f"Loaded {path.name}: n={g.n}, m={g.m}")
    return g


def write_graph_file(g: Graph, path, fmt: GraphFormat) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        write_graph(g, f, fmt)
    logger.info(f"Wrote {fmt.value} graph to {path}")


def write_vertex_set(g: Graph, vertices: Iterable[int], stream: TextIO) -> None:
    """One original label per line, in id order."""
    for v in sorted(vertices):
        stream.write(f"{g.label_of(v)}\n")


def read_vertex_set(g: Graph, stream: TextIO) -> VertexSet:
    """Read a vertex-set file written by write_vertex_set (labels, one per line)."""
    if g.labels is None:
        index = {str(v): v for v in range(g.n)}
    else:
        index = {label: v for v, label in enumerate(g.labels)}
    members = set()
    for line_number, raw in enumerate(stream, 1):
        token = raw.strip()
        if not token or token.startswith(EDGE_COMMENT_PREFIXES):
            continue
        if token not in index:
            raise GraphParseError(line_number, f"unknown vertex label '{token}'", token)
        members.add(index[token])
    return frozenset(members)
