import networkx as nx
import numpy as np
import pytest

from turanlab.catalog import bowtie, clique, cycle, disjoint_union, matching, path
from turanlab.graph import SmallGraph, graph_from_edges
from turanlab.registry import GoodnessRegistry


def random_graph(rng: np.random.Generator, n: int, density: float = 0.5) -> SmallGraph:
    upper = np.triu(rng.random((n, n)) < density, 1)
    rows, cols = np.nonzero(upper)
    return graph_from_edges(n, zip(rows.tolist(), cols.tolist()))


def to_networkx(g: SmallGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


@pytest.fixture
def rng():
    return np.random.default_rng(20210607)


@pytest.fixture
def fresh_registry():
    return GoodnessRegistry()


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def p5():
    return path(5)


@pytest.fixture
def k3():
    return clique(3)


@pytest.fixture
def k4():
    return clique(4)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def the_bowtie():
    return bowtie()


@pytest.fixture
def p4_gadgets():
    """M2, K3 u K1, K4."""
    return [matching(2), disjoint_union(clique(3), clique(1)), clique(4)]


@pytest.fixture
def p5_gadgets():
    """M2 u K1, K2 u K3, bowtie."""
    return [disjoint_union(matching(2), clique(1)), disjoint_union(clique(2), clique(3)), bowtie()]


@pytest.fixture
def bowtie_gadgets():
    """K2 u K3, K4 u K1, K5."""
    return [disjoint_union(clique(2), clique(3)), disjoint_union(clique(4), clique(1)), clique(5)]
