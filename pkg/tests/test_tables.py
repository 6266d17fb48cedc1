import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from conftest import random_graph, to_networkx
from turanlab.catalog import clique, path
from turanlab.counting import count_copies, count_induced_copies
from turanlab.errors import GraphError, GraphFormatError, UnsupportedSizeError
from turanlab.graph import graph_from_flag, is_isomorphic
from turanlab.tables import build_type_table, parse_table, render_table, table_matrix

P5_TYPES = [
    "1--2,2--3,3--4,4--5",
    "1--2,2--3,3--4,4--5,1--5",
    "1--2,2--3,3--4,4--5,5--3",
    "1--2,2--3,3--4,4--1,1--5",
    "1--2,2--3,3--4,4--1,1--5,1--3",
    "1--2,2--3,3--4,4--1,1--5,2--4",
    "1--2,2--3,3--4,2--5,3--5",
    "1--2,2--3,3--4,4--5,5--1,2--5",
    "1--2,2--3,3--4,4--5,5--1,2--5,2--4",
    "1--2,2--3,3--4,4--5,1--5,1--3,2--5",
    "1--3,1--4,1--5,2--3,2--4,2--5",
    "1--2,1--3,1--4,1--5,2--3,2--4,2--5",
    "1--2,1--3,1--4,1--5,2--4,2--5,3--4,3--5",
    "1--2,1--3,2--3,1--4,1--5,4--5",
]
P5_COUNTS = [
    (3, 0, 0, 1),
    (5, 0, 0, 5),
    (4, 1, 0, 2),
    (4, 0, 0, 2),
    (4, 0, 0, 2),
    (5, 1, 0, 4),
    (3, 0, 0, 1),
    (6, 1, 0, 7),
    (7, 2, 1, 10),
    (8, 2, 0, 14),
    (6, 0, 0, 6),
    (6, 0, 0, 6),
    (10, 4, 2, 24),
    (5, 2, 1, 4),
]
P5_DENSE_TYPES = [
    "1--2,2--3,2--4,2--5,3--4,3--5,4--5",
    "1--2,2--3,2--4,2--5,3--4,3--5,4--5,1--5",
    "1--3,1--4,1--5,2--3,2--4,2--5,3--4,3--5,4--5",
    "1--2,1--3,1--4,1--5,2--3,2--4,2--5,3--4,3--5,4--5",
]
P5_DENSE_COUNTS = [(6, 1, 0, 6), (9, 3, 2, 18), (12, 6, 6, 36), (15, 10, 15, 60)]


def _monomorphism_copies(h, g):
    pattern = to_networkx(h)
    embeddings = sum(1 for _ in GraphMatcher(to_networkx(g), pattern).subgraph_monomorphisms_iter())
    symmetries = sum(1 for _ in GraphMatcher(pattern, pattern).isomorphisms_iter())
    return embeddings // symmetries


def _column_for(table, flag):
    target = graph_from_flag(table.order, flag)
    matches = [column for column in table.columns if is_isomorphic(column.type, target)]
    assert len(matches) == 1, flag
    return matches[0]


def _assert_columns(table, flags, expected):
    assert len(table.columns) == len(flags)
    for flag, counts in zip(flags, expected):
        column = _column_for(table, flag)
        assert (*column.gadget_counts, column.h_count) == counts, flag
    for column in table.columns:
        oracle = [_monomorphism_copies(b, column.type) for b in table.gadgets]
        assert column.gadget_counts == oracle
        assert column.h_count == _monomorphism_copies(table.h, column.type)


def test_p4_table(p4, p4_gadgets):
    table = build_type_table(p4, None, p4_gadgets)
    flags = [
        "1--2,2--3,3--4",
        "1--2,2--3,3--4,4--1",
        "1--2,2--4,4--1,2--3",
        "1--2,2--3,3--1,4--1,4--2",
        "1--2,1--3,1--4,2--3,2--4,3--4",
    ]
    expected = [(1, 0, 0, 1), (2, 0, 0, 4), (1, 1, 0, 2), (2, 2, 0, 6), (3, 4, 1, 12)]
    _assert_columns(table, flags, expected)


def test_p5_table_k4(p5, p5_gadgets):
    _assert_columns(build_type_table(p5, 4, p5_gadgets), P5_TYPES, P5_COUNTS)


def test_p5_table_k6(p5, p5_gadgets):
    table = build_type_table(p5, 6, p5_gadgets)
    _assert_columns(table, P5_TYPES + P5_DENSE_TYPES, P5_COUNTS + P5_DENSE_COUNTS)


def test_p5_table_k5_drops_the_clique(p5, p5_gadgets):
    table = build_type_table(p5, 5, p5_gadgets)
    _assert_columns(table, P5_TYPES + P5_DENSE_TYPES[:3], P5_COUNTS + P5_DENSE_COUNTS[:3])


def test_bowtie_table(the_bowtie, bowtie_gadgets):
    table = build_type_table(the_bowtie, 6, bowtie_gadgets)
    flags = [
        "1--2,2--3,1--3,1--4,1--5,4--5",
        "1--2,1--3,1--4,1--5,2--3,3--4,4--5",
        "1--2,1--3,1--4,1--5,2--4,2--5,3--4,3--5",
        "1--2,1--3,2--3,2--4,2--5,3--4,3--5,4--5",
        "1--2,1--3,1--4,2--3,2--4,2--5,3--4,3--5,4--5",
        "1--2,1--3,1--4,1--5,2--3,2--4,2--5,3--4,3--5,4--5",
    ]
    # (K2 u K3, K4 u K1, K5, bowtie)
    expected = [(2, 0, 0, 1), (2, 0, 0, 1), (4, 0, 0, 2), (3, 1, 0, 2), (6, 2, 0, 6), (10, 5, 1, 15)]
    _assert_columns(table, flags, expected)


def test_table_matrix_shape(p5, p5_gadgets):
    table = build_type_table(p5, 4, p5_gadgets)
    counts, h_row = table_matrix(table)
    assert counts.shape == (3, 14)
    assert h_row.shape == (14,)
    assert int(h_row.sum()) == sum(c for *_, c in P5_COUNTS)


def test_columns_reconstruct_host_counts(rng, p4):
    table = build_type_table(p4, None, [])
    for _ in range(15):
        g = random_graph(rng, int(rng.integers(4, 9)), 0.5)
        total = sum(count_induced_copies(column.type, g) * column.h_count for column in table.columns)
        assert total == count_copies(p4, g)


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_render_parse_round_trip(p5, p5_gadgets, fmt):
    table = build_type_table(p5, 4, p5_gadgets)
    text = render_table(table, fmt)
    assert parse_table(text, fmt) == table


def test_csv_layout(p4, p4_gadgets):
    lines = render_table(build_type_table(p4, None, p4_gadgets), "csv").splitlines()
    assert lines[0] == "#k,unbounded"
    assert lines[1].startswith("row,")
    assert lines[2].startswith("H:C")
    assert len(lines) == 6


def test_parse_rejects_garbage():
    with pytest.raises(GraphFormatError):
        parse_table("row,Bw\n", "csv")
    with pytest.raises(GraphFormatError):
        parse_table("#k,3\nrow,Bw\nX:Bw,1\n", "csv")


def test_size_limits(p4):
    with pytest.raises(UnsupportedSizeError):
        build_type_table(p4, None, [], max_order=9)
    with pytest.raises(UnsupportedSizeError):
        build_type_table(path(6), None, [], max_order=5)
    with pytest.raises(GraphError):
        build_type_table(p4, None, [clique(5)])


def test_gadgets_are_padded(p4):
    table = build_type_table(p4, None, [clique(2)])
    assert table.gadgets[0].n == 4
    assert table_matrix(table)[0][0].tolist() == [column.type.edge_count for column in table.columns]
