import io

import pytest

from core.errors import GraphParseError, InputError
from core.generators import queens
from core.graph import build_graph
from core.ingest import (
    read_graph, read_graph_file, read_vertex_set, write_graph, write_graph_file, write_vertex_set
)
from core.models import GraphFormat


def _read(text, fmt=GraphFormat.EDGE_LIST):
    return read_graph(io.StringIO(text), fmt)


def test_edge_list_path():
    g = _read("0 1\n1 2")
    assert (g.n, g.m) == (3, 2)
    assert g.edge_list() == [(0, 1), (1, 2)]


def test_edge_list_comments_and_extra_columns():
    g = _read("# header\n% other\n\n0 1 7.5\n1 2\n")
    assert (g.n, g.m) == (3, 2)


def test_edge_list_numeric_labels_sort_by_value():
    g = _read("10 2\n2 7\n")
    assert g.labels == ("2", "7", "10")
    assert g.edge_list() == [(0, 1), (0, 2)]


def test_edge_list_string_labels_keep_first_appearance():
    g = _read("bob alice\nalice carol\n")
    assert g.labels == ("bob", "alice", "carol")
    assert g.label_of(2) == "carol"
    assert g.m == 2


def test_edge_list_zero_padded_labels_stay_distinct():
    g = _read("01 1\n1 2\n")
    assert (g.n, g.m) == (3, 2)
    assert g.labels == ("01", "1", "2")
    assert g.stats.self_loops == 0


def test_edge_list_non_ascii_digit_labels():
    g = _read("² 1\n")
    assert (g.n, g.m) == (2, 1)
    assert g.labels == ("²", "1")


def test_edge_list_single_token_line_reports_line_number():
    with pytest.raises(GraphParseError) as excinfo:
        _read("0 1\n# note\n2\n")
    assert excinfo.value.line_number == 3
    assert str(excinfo.value).startswith("line 3:")


def test_snap_edge_list_with_header():
    text = "# Directed graph\n# Nodes: 4 Edges: 3\n# FromNodeId\tToNodeId\n1\t2\n2\t3\n3\t4\n2\t1\n"
    g = _read(text, GraphFormat.SNAP_EDGE_LIST)
    assert (g.n, g.m) == (4, 3)
    assert g.stats.duplicates == 1


def test_metis_path():
    g = _read("3 2\n2\n1 3\n2\n", GraphFormat.METIS)
    assert (g.n, g.m) == (3, 2)
    assert g.edge_list() == [(0, 1), (1, 2)]


def test_metis_isolated_vertices_and_comments():
    g = _read("% a comment\n4 1\n2\n1\n\n\n", GraphFormat.METIS)
    assert (g.n, g.m) == (4, 1)
    assert g.degree(3) == 0


@pytest.mark.parametrize("text, line", [
    ("3 2\n2\n1 x\n2\n", 3),
    ("3 2\n2\n1 4\n2\n", 3),
    ("3 2 011\n2\n1 3\n2\n", 1),
    ("three 2\n", 1),
    ("3\n", 1),
    ("2 1\n2\n1\n1\n", 4),
])
def test_metis_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as excinfo:
        _read(text, GraphFormat.METIS)
    assert excinfo.value.line_number == line


def test_metis_truncated():
    with pytest.raises(GraphParseError, match="truncated"):
        _read("3 2\n2\n", GraphFormat.METIS)


def test_write_triangle_edge_list():
    g = build_graph(3, [(2, 1), (0, 2), (1, 0)])
    out = io.StringIO()
    write_graph(g, out, GraphFormat.EDGE_LIST)
    assert out.getvalue() == "0 1\n0 2\n1 2\n"


def test_write_single_vertex_metis():
    out = io.StringIO()
    write_graph(build_graph(1, []), out, GraphFormat.METIS)
    assert out.getvalue() == "1 0\n\n"


@pytest.mark.parametrize("fmt", list(GraphFormat))
def test_queens_survives_every_format(fmt):
    g = queens(8)
    out = io.StringIO()
    write_graph(g, out, fmt)
    assert read_graph(io.StringIO(out.getvalue()), fmt) == g


def test_files_and_vertex_sets(tmp_path):
    g = _read("a b\nb c\nc d\n")
    path = tmp_path / "p4.el"
    write_graph_file(build_graph(4, g.edge_list()), path, GraphFormat.EDGE_LIST)
    assert read_graph_file(path, GraphFormat.EDGE_LIST).m == 3

    out = io.StringIO()
    write_vertex_set(g, {1, 2}, out)
    assert out.getvalue() == "b\nc\n"
    assert read_vertex_set(g, io.StringIO(out.getvalue())) == frozenset({1, 2})


def test_unknown_label_in_vertex_set():
    g = _read("a b\n")
    with pytest.raises(GraphParseError, match="unknown vertex label"):
        read_vertex_set(g, io.StringIO("a\nz\n"))


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="not found"):
        read_graph_file(tmp_path / "nope.el", GraphFormat.EDGE_LIST)
