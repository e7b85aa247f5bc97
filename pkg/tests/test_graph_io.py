import pytest
from hypothesis import given

from chibound.errors import GraphError
from chibound.graph import (Graph, bfs_layers, build_graph, cartesian_product, complete, component_masks,
                            connected_components, cycle, distance_layers, grotzsch, named_graph, prism)
from chibound.io import (format_dimacs, format_edge_list, parse_dimacs, parse_edge_list, read_graph,
                         write_graph)

from conftest import graphs


def test_named_graph_sizes():
    assert (grotzsch().n, grotzsch().m) == (11, 20)
    assert named_graph("bull").m == 5
    assert named_graph("diamond").m == 5
    assert named_graph("paw").m == 4
    assert named_graph("cycle(5)") == named_graph("cycle", 5) == cycle(5)
    assert prism(4).n == 8 and prism(4).m == 2 * 6 + 4
    assert named_graph("complete_bipartite(3, 3)").m == 9


def test_grotzsch_is_four_regular_outside_hub():
    G = grotzsch()
    assert G.degree(10) == 5
    assert sorted(G.degree(v) for v in range(10)) == [3] * 5 + [4] * 5


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_graph_is_immutable_and_validates():
    G = cycle(4)
    with pytest.raises(AttributeError):
        G.n = 5
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])


def test_build_graph_dedups():
    assert build_graph(3, [(0, 1), (1, 0), (0, 1)]).m == 1


def test_induced_subgraph_and_labels():
    H, labels = cycle(6).induced_subgraph([0, 1, 2, 4])
    assert labels == (0, 1, 2, 4)
    assert H.edges() == [(0, 1), (1, 2)]


def test_complement_of_c5_is_c5():
    C = cycle(5).complement()
    assert C.m == 5 and all(C.degree(v) == 2 for v in range(5))


def test_cartesian_product_shapes():
    P = cartesian_product(complete(2), complete(3))
    assert P == prism(3)
    assert cartesian_product(cycle(4), complete(2)).m == 4 * 2 + 4


def test_components_and_layers():
    G = build_graph(6, [(0, 1), (1, 2), (3, 4)])
    assert connected_components(G) == [(0, 1, 2), (3, 4), (5,)]
    assert len(component_masks(G)) == 3
    assert distance_layers(G, 1) == [0b1, 0b10, 0b100]
    layers = bfs_layers(G, [0])
    assert layers[:3] == [0, 1, 2] and layers[3] == float("inf")


@given(graphs(max_n=9))
def test_edge_list_round_trip(G):
    assert parse_edge_list(format_edge_list(G)) == G


@given(graphs(max_n=9))
def test_dimacs_round_trip(G):
    assert parse_dimacs(format_dimacs(G)) == G


def test_file_round_trip_and_sniffing(tmp_path):
    G = grotzsch()
    for name in ("g.edges", "g.col"):
        write_graph(G, tmp_path / name)
        assert read_graph(tmp_path / name) == G
    assert (tmp_path / "g.col").read_text().startswith("p edge 11 20")


@pytest.mark.parametrize("text, where", [
    ("p edge 3 1\ne 1 4\n", ":2:5:"),
    ("p edge 3 1\ne 1 x\n", ":2:5:"),
    ("e 1 2\n", ":1:1:"),
    ("q 1\n", ":1:1:"),
])
def test_dimacs_errors_carry_position(text, where):
    with pytest.raises(GraphError, match=where):
        parse_dimacs(text, "f")


@pytest.mark.parametrize("text, where", [
    ("0 1\n1 1\n", ":2:1:"),
    ("0 1 2\n", ":1:1:"),
    ("# n 2\n0 5\n", ":2:3:"),
    ("0 a\n", ":1:3:"),
])
def test_edge_list_errors_carry_position(text, where):
    with pytest.raises(GraphError, match=where):
        parse_edge_list(text, "f")


def test_edge_list_header_keeps_isolated_vertices():
    assert parse_edge_list("# n 4\n0 1\n").n == 4
    assert parse_edge_list("0 1  # trailing comment\n").n == 2
