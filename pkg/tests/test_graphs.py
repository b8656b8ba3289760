import pytest
from hypothesis import given

from conftest import edge_colored_graphs, oriented_graphs
from ectarget.graphs import (
    EdgeColoredGraph,
    Graph,
    GraphFormatError,
    Homomorphism,
    OrientedGraph,
    VertexColoring,
    induced_subgraph,
    parse_coloring,
    parse_edge_colored,
    parse_graph,
    parse_homomorphism,
    parse_oriented,
    serialize,
    serialize_coloring,
    serialize_graph,
    serialize_homomorphism,
    serialize_oriented,
)
from helpers import clique, path


TRIANGLE_TEXT = "3 3 2\n0 1 1\n1 2 2\n0 2 1"


def test_parse_triangle():
    ecg = parse_edge_colored(TRIANGLE_TEXT)
    assert ecg.graph.n == 3
    assert ecg.k == 2
    assert ecg.color == {(0, 1): 1, (0, 2): 1, (1, 2): 2}


def test_parse_single_vertex_no_edges():
    ecg = parse_edge_colored("1 0 2")
    assert ecg.graph.n == 1
    assert ecg.graph.m == 0
    assert ecg.k == 2


def test_parse_rejects_loop():
    with pytest.raises(GraphFormatError, match="loop"):
        parse_edge_colored("2 1 2\n0 0 1")


def test_parse_rejects_duplicate_edge():
    with pytest.raises(GraphFormatError, match="duplicate"):
        parse_edge_colored("3 2 2\n0 1 1\n1 0 2")


def test_parse_rejects_color_out_of_range():
    with pytest.raises(GraphFormatError, match="color"):
        parse_edge_colored("2 1 2\n0 1 3")
    with pytest.raises(GraphFormatError, match="color"):
        parse_edge_colored("2 1 2\n0 1 0")


def test_parse_rejects_bad_vertex_id():
    with pytest.raises(GraphFormatError, match="endpoint"):
        parse_edge_colored("2 1 2\n0 2 1")


def test_parse_rejects_malformed_header():
    for text in ["", "2 1", "a b c", "0 0 2", "2 -1 2", "3 1 2\n0 1 1\n0 2 1"]:
        with pytest.raises(GraphFormatError):
            parse_edge_colored(text)


def test_parse_rejects_k1_for_edge_colored():
    with pytest.raises(GraphFormatError, match="k >= 2"):
        parse_edge_colored("2 1 1\n0 1 1")


def test_parse_graph_requires_k1():
    with pytest.raises(GraphFormatError, match="k = 1"):
        parse_graph("2 1 2\n0 1 1")
    g = parse_graph("3 2 1\n0 1 1\n# a comment\n1 2 1")
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_comments_and_blank_lines_are_skipped():
    text = "# triangle\n\n3 3 2\n0 1 1\n\n# middle\n1 2 2\n0 2 1\n"
    assert parse_edge_colored(text) == parse_edge_colored(TRIANGLE_TEXT)


def test_serialize_round_trip_triangle():
    ecg = parse_edge_colored(TRIANGLE_TEXT)
    text = serialize(ecg)
    assert text == "3 3 2\n0 1 1\n0 2 1\n1 2 2\n"
    assert parse_edge_colored(text) == ecg


def test_serialize_single_edge_large_palette():
    ecg = EdgeColoredGraph(Graph(2, [(0, 1)]), 5, {(0, 1): 4})
    assert serialize(ecg) == "2 1 5\n0 1 4\n"


def test_graph_rejects_zero_vertices():
    with pytest.raises(ValueError):
        Graph(0)


def test_graph_rejects_loops_and_bad_ids():
    with pytest.raises(ValueError, match="loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="endpoint"):
        Graph(3, [(0, 3)])


def test_edge_colored_graph_validation():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="k >= 2"):
        EdgeColoredGraph(g, 1, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(ValueError, match="cover exactly"):
        EdgeColoredGraph(g, 2, {(0, 1): 1})
    with pytest.raises(ValueError, match="outside"):
        EdgeColoredGraph(g, 2, {(0, 1): 1, (1, 2): 3})


def test_oriented_graph_validation():
    g = Graph(2, [(0, 1)])
    og = OrientedGraph(g, {(0, 1): (1, 0)})
    assert og.parents(0) == (1,)
    assert og.in_degree(1) == 0
    with pytest.raises(ValueError, match="does not match"):
        OrientedGraph(g, {(0, 1): (0, 0)})
    with pytest.raises(ValueError, match="cover exactly"):
        OrientedGraph(g, {})


def test_vertex_coloring_validation():
    with pytest.raises(ValueError):
        VertexColoring(0, [])
    with pytest.raises(ValueError, match="outside"):
        VertexColoring(2, [1, 3])
    col = VertexColoring(2, [1, 2, 1])
    assert col[2] == 1 and len(col) == 3


def test_induced_subgraph_clique_restriction():
    assert induced_subgraph(clique(4), {0, 1, 2}) == clique(3)


def test_induced_subgraph_identity():
    g = path(4)
    assert induced_subgraph(g, range(4)) == g


def test_induced_subgraph_nonadjacent_pair():
    g = induced_subgraph(path(3), {0, 2})
    assert g.n == 2 and g.m == 0


def test_induced_subgraph_errors():
    with pytest.raises(ValueError, match="nonempty"):
        induced_subgraph(path(3), set())
    with pytest.raises(ValueError, match="outside"):
        induced_subgraph(path(3), {0, 5})


def test_induced_subgraph_reindexes_by_sorted_id():
    g = Graph(5, [(1, 3), (3, 4)])
    sub = induced_subgraph(g, {4, 3, 1})
    # provenance: new 0 -> 1, new 1 -> 3, new 2 -> 4
    assert sub == Graph(3, [(0, 1), (1, 2)])


@given(edge_colored_graphs())
def test_round_trip_any_edge_colored_graph(ecg):
    assert parse_edge_colored(serialize(ecg)) == ecg


@given(edge_colored_graphs())
def test_plain_round_trip(ecg):
    g = ecg.graph
    assert parse_graph(serialize_graph(g)) == g


@given(oriented_graphs())
def test_oriented_round_trip(og):
    assert parse_oriented(serialize_oriented(og)) == og


def test_oriented_parse_direction_flags():
    og = parse_oriented("3 2 1\n0 1 1 >\n1 2 1 <")
    assert og.direction == {(0, 1): (0, 1), (1, 2): (2, 1)}
    with pytest.raises(GraphFormatError, match="flag"):
        parse_oriented("2 1 1\n0 1 1 x")


def test_coloring_round_trip():
    col = VertexColoring(3, [1, 3, 2, 1])
    assert parse_coloring(serialize_coloring(col)) == col
    with pytest.raises(GraphFormatError):
        parse_coloring("palette 2\n0 1\n0 2")


def test_homomorphism_round_trip():
    hom = Homomorphism([2, 0, 1])
    assert parse_homomorphism(serialize_homomorphism(hom)) == hom
    with pytest.raises(GraphFormatError):
        parse_homomorphism("0 1\n2 0")


def test_transpose_flips_every_edge():
    og = parse_oriented("3 2 1\n0 1 1 >\n1 2 1 <")
    back = og.transpose()
    assert back.direction == {(0, 1): (1, 0), (1, 2): (1, 2)}
    assert back.transpose() == og
