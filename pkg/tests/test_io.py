import pytest

from expanders.graph import Graph
from expanders.io import (
    GraphFormatError,
    graph_hash,
    parse_graph_text,
    serialize_graph,
    write_dot,
)
from fixtures import cycle_graph


def test_parse_simple_path():
    g = parse_graph_text("0 1\n1 2\n")
    assert g.n == 3
    assert g.edges == ((0, 1), (1, 2))


def test_parse_collapses_duplicates():
    g = parse_graph_text("0 1\n1 0\n")
    assert g.num_edges == 1


def test_parse_rejects_self_loop_with_line():
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_graph_text("0 0\n")


def test_parse_header_allows_isolated_vertices():
    g = parse_graph_text("# n=5\n0 1\n")
    assert g.n == 5
    assert g.deg == (1, 1, 0, 0, 0)


def test_parse_rejects_vertex_beyond_header():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse_graph_text("# n=2\n0 5\n")


def test_parse_rejects_garbage():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph_text("0 1\n1 2\nnot an edge\n")


def test_round_trip_identity():
    g = cycle_graph(9)
    assert parse_graph_text(serialize_graph(g)) == g


def test_graph_hash_is_order_independent_and_sensitive():
    g1 = Graph(4, [(0, 1), (2, 3)])
    g2 = Graph(4, [(3, 2), (1, 0)])
    g3 = Graph(4, [(0, 1), (1, 3)])
    assert graph_hash(g1) == graph_hash(g2)
    assert graph_hash(g1) != graph_hash(g3)
    assert len(graph_hash(g1)) == 16


def test_write_dot_highlights():
    g = cycle_graph(4)
    dot = write_dot(g, highlight_edges=[(1, 0)], fill_vertices=[2])
    assert "0 -- 1 [color=red" in dot
    assert '2 [style=filled, fillcolor="gray80"]' in dot
