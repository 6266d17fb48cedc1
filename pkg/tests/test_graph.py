import networkx as nx
import numpy as np
import pytest

from conftest import random_graph, to_networkx
from turanlab.catalog import bowtie, clique, complete_multipartite, cycle, disjoint_union, empty, named_graph, path
from turanlab.errors import GraphError, GraphFormatError, UnsupportedSizeError
from turanlab.graph import (
    SmallGraph,
    automorphism_count,
    canonical_form,
    canonical_graph,
    contains_clique,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    graph_from_flag,
    is_isomorphic,
    iter_cliques,
    parse_edge_list,
)


def test_graph6_known_strings(k3, p3):
    assert graph6_encode(k3) == "Bw"
    assert graph6_encode(p3) == "Bg"
    assert graph6_encode(clique(1)) == "@"
    assert graph6_decode("Bw") == k3
    assert graph6_decode(">>graph6<<Bg") == p3


def test_graph6_matches_networkx(rng):
    for n in range(1, 11):
        g = random_graph(rng, n)
        expected = nx.to_graph6_bytes(to_networkx(g), nodes=range(n), header=False).decode().strip()
        assert graph6_encode(g) == expected
        assert graph6_decode(expected) == g


@pytest.mark.parametrize("text", ["", "B", "Bww", "Bx", "B!"])
def test_graph6_rejects_malformed_text(text):
    with pytest.raises(GraphFormatError):
        graph6_decode(text)


def test_graph6_error_carries_offset():
    with pytest.raises(GraphFormatError) as info:
        graph6_decode("C~!")
    assert info.value.offset == 2


def test_construction_errors():
    with pytest.raises(GraphError):
        graph_from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        graph_from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        graph_from_edges(65, [])
    with pytest.raises(GraphError):
        SmallGraph(2, (0b10, 0))


def test_basic_queries(p4):
    assert p4.edge_count == 3
    assert p4.degrees() == [1, 2, 2, 1]
    assert p4.neighbors(1) == [0, 2]
    assert p4.complement().edge_count == 3
    assert disjoint_union(clique(3), clique(2)).components() == [[0, 1, 2], [3, 4]]
    assert empty(3).isolated_count() == 3


def test_relabel_preserves_class(rng):
    for _ in range(30):
        g = random_graph(rng, 7)
        order = rng.permutation(7).tolist()
        assert canonical_form(g.relabel(order)) == canonical_form(g)
        assert canonical_graph(g.relabel(order)) == canonical_graph(g)


def test_canonical_form_agrees_with_networkx(rng):
    for _ in range(60):
        n = int(rng.integers(4, 8))
        g1, g2 = random_graph(rng, n), random_graph(rng, n)
        assert is_isomorphic(g1, g2) == nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def test_canonical_form_size_cap():
    with pytest.raises(UnsupportedSizeError):
        canonical_form(empty(11))


@pytest.mark.parametrize(
    "g, expected",
    [
        (path(4), 2),
        (clique(4), 24),
        (bowtie(), 8),
        (cycle(5), 10),
        (complete_multipartite([2, 3]), 12),
        (empty(4), 24),
        (disjoint_union(clique(3), clique(3)), 72),
    ],
)
def test_automorphism_count(g, expected):
    assert automorphism_count(g) == expected


def test_automorphism_count_petersen():
    petersen = graph_from_edges(10, nx.petersen_graph().edges())
    assert automorphism_count(petersen) == 120


def test_cliques():
    g = bowtie()
    assert sorted(iter_cliques(g, 3)) == [0b00111, 0b11001]
    assert contains_clique(g, 3)
    assert not contains_clique(g, 4)


def test_edge_list_format(p4):
    assert format_edge_list(p4) == "4; 0-1,1-2,2-3"
    assert parse_edge_list("4; 0-1, 1-2,2-3") == p4
    assert parse_edge_list("3;") == empty(3)


def test_edge_list_errors():
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list("4; 0-1,12")
    assert info.value.offset == 7
    with pytest.raises(GraphFormatError):
        parse_edge_list("0-1")


def test_flag_pictogram():
    union = graph_from_flag(5, "1--2,3--4,4--5,5--3")
    assert is_isomorphic(union, disjoint_union(clique(2), clique(3)))
    assert is_isomorphic(graph_from_flag(5, "1--2,2--3,1--3,1--4,1--5,4--5"), bowtie())


def test_named_graphs():
    assert named_graph("P4") == path(4)
    assert is_isomorphic(named_graph("K3+K1"), disjoint_union(clique(3), clique(1)))
    assert named_graph("K2,2,2").edge_count == 12
    assert named_graph("bowtie") == bowtie()
    with pytest.raises(GraphError):
        named_graph("Q7")


def test_adjacency_round_trip(rng):
    g = random_graph(rng, 9)
    adjacency = g.to_numpy()
    assert np.array_equal(adjacency, adjacency.T)
    assert int(adjacency.sum()) == 2 * g.edge_count
