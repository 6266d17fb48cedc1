"""Named small graphs used as patterns, gadgets and registry seeds."""

import re
from itertools import combinations
from typing import Callable, Sequence

from turanlab.errors import GraphError
from turanlab.graph import SmallGraph, graph_from_edges


def empty(n: int) -> SmallGraph:
    return graph_from_edges(n, [])


def clique(r: int) -> SmallGraph:
    return graph_from_edges(r, combinations(range(r), 2))


def path(l: int) -> SmallGraph:
    """Path on l vertices (l - 1 edges)."""
    return graph_from_edges(l, [(i, i + 1) for i in range(l - 1)])


def cycle(l: int) -> SmallGraph:
    if l < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {l}")
    return graph_from_edges(l, [(i, (i + 1) % l) for i in range(l)])


def matching(l: int) -> SmallGraph:
    """M_l: l disjoint edges on 2l vertices."""
    return graph_from_edges(2 * l, [(2 * i, 2 * i + 1) for i in range(l)])


def star(leaves: int) -> SmallGraph:
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_multipartite(sizes: Sequence[int]) -> SmallGraph:
    """Complete multipartite graph, vertices grouped by part in the given order."""
    labels = [part for part, size in enumerate(sizes) for _ in range(size)]
    edges = [(u, v) for u, v in combinations(range(len(labels)), 2) if labels[u] != labels[v]]
    return graph_from_edges(len(labels), edges)


def disjoint_union(*graphs: SmallGraph) -> SmallGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return graph_from_edges(offset, edges)


def pad(g: SmallGraph, m: int) -> SmallGraph:
    """Add isolated vertices until g has m vertices."""
    if g.n > m:
        raise GraphError(f"cannot pad a {g.n}-vertex graph down to {m} vertices")
    return SmallGraph(m, g.masks + (0,) * (m - g.n))


def core(g: SmallGraph) -> SmallGraph:
    """g with its isolated vertices removed."""
    return g.induced([v for v in range(g.n) if g.masks[v]])


def paw() -> SmallGraph:
    return graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def diamond() -> SmallGraph:
    return complete_multipartite([1, 1, 2])


def bowtie() -> SmallGraph:
    """Two triangles sharing vertex 0."""
    return graph_from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


_FIXED: dict[str, Callable[[], SmallGraph]] = {
    "paw": paw,
    "diamond": diamond,
    "bowtie": bowtie,
}

_FAMILIES: dict[str, Callable[[int], SmallGraph]] = {
    "P": path,
    "C": cycle,
    "K": clique,
    "M": matching,
    "E": empty,
    "S": star,
}


def named_graph(name: str) -> SmallGraph:
    """Resolve names such as "P4", "C6", "M2", "K3+K2", "K4+K1" or "K2,2,2"."""
    name = name.strip()
    if "+" in name:
        return disjoint_union(*(named_graph(part) for part in name.split("+")))
    if name in _FIXED:
        return _FIXED[name]()
    parts = re.fullmatch(r"K(\d+(?:,\d+)+)", name)
    if parts:
        return complete_multipartite([int(size) for size in parts.group(1).split(",")])
    family = re.fullmatch(r"([PCKMES])(\d+)", name)
    if family:
        return _FAMILIES[family.group(1)](int(family.group(2)))
    raise GraphError(f"unknown graph name '{name}'")
