import pytest
from pydantic import ValidationError

from turanlab.catalog import bowtie, path
from turanlab.config import Settings
from turanlab.enumeration import enumerate_graphs
from turanlab.errors import GraphFormatError
from turanlab.graph import canonical_code
from turanlab.utils import graph6_lines, load_graph, load_graphs, parallel_map, parse_graph


def test_parallel_map_keeps_order():
    items = list(range(-300, 0))
    assert parallel_map(abs, items, threads=2) == [abs(i) for i in items]
    assert parallel_map(abs, items, threads=1) == [abs(i) for i in items]


def test_parallel_canonical_codes_match_serial():
    graphs = enumerate_graphs(7)
    assert parallel_map(canonical_code, graphs, threads=2) == [canonical_code(g) for g in graphs]


def test_parse_graph_dispatch():
    assert parse_graph("P4") == path(4)
    assert parse_graph("Bg") == path(3)
    assert parse_graph("3; 0-1,1-2") == path(3)
    assert parse_graph(" bowtie ") == bowtie()


def test_graph6_lines():
    assert graph6_lines("# header\n\nBw\n  Bg  \n") == ["Bw", "Bg"]


def test_load_graphs_from_file(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text("Bw\nBg\n", encoding="utf-8")
    assert len(load_graphs(str(source))) == 2
    with pytest.raises(GraphFormatError):
        load_graph(str(source))
    assert load_graph("K3").edge_count == 3


def test_settings_validation(monkeypatch):
    assert Settings(threads=0).threads == 1
    with pytest.raises(ValidationError):
        Settings(table_max_order=9)
    monkeypatch.setenv("TURANLAB_TABLE_MAX_ORDER", "5")
    assert Settings().table_max_order == 5
