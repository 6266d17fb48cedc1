"""Isomorph-free generation of small graphs, optionally K_k-free, containing a pattern, or edge-maximal."""

import logging
from functools import lru_cache, partial
from itertools import combinations
from typing import Optional

from turanlab.catalog import pad
from turanlab.config import (
    ENUMERATION_DEFAULT_ORDER,
    ENUMERATION_MAX_ORDER,
    EXTREMAL_MAX_ORDER,
)
from turanlab.counting import count_injective_homs
from turanlab.errors import GraphError, TuranLabError, UnsupportedSizeError
from turanlab.graph import SmallGraph, canonical_code, canonical_graph, contains_clique, iter_cliques
from turanlab.utils import parallel_map

logger = logging.getLogger(__name__)


def _check_order(m: int, cap: int = ENUMERATION_MAX_ORDER) -> None:
    if m < 0:
        raise TuranLabError(f"vertex count must be nonnegative, got {m}")
    if m > cap:
        raise UnsupportedSizeError(f"exhaustive enumeration supports at most {cap} vertices, got {m}")
    if m > ENUMERATION_DEFAULT_ORDER:
        logger.warning(f"Enumerating {m}-vertex graphs; this can take hours")


def _check_k(k: Optional[int]) -> None:
    if k is not None and k < 2:
        raise TuranLabError(f"forbidden clique size must be at least 2, got {k}")


def stream_order(graphs) -> list[SmallGraph]:
    """Canonical representatives sorted by (edge count, canonical code)."""
    return sorted((canonical_graph(g) for g in graphs), key=lambda g: (g.edge_count, canonical_code(g)))


def _attach(parent: SmallGraph, neighbourhood: int) -> SmallGraph:
    n = parent.n
    masks = [mask | (neighbourhood >> v & 1) << n for v, mask in enumerate(parent.masks)]
    masks.append(neighbourhood)
    return SmallGraph(n + 1, tuple(masks))


def _blocked(parent: SmallGraph, neighbourhood: int, k: int) -> bool:
    """Every old vertex outside the neighbourhood would close a K_k if joined to the new vertex."""
    for u in range(parent.n):
        if not neighbourhood >> u & 1:
            if next(iter_cliques(parent, k - 2, within=parent.masks[u] & neighbourhood), None) is None:
                return False
    return True


def _extensions(parent: SmallGraph, k: Optional[int], maximal: bool = False) -> dict[bytes, SmallGraph]:
    """One-vertex extensions of parent where the new vertex has minimum degree."""
    n = parent.n
    degrees = parent.degrees()
    smallest = min(degrees, default=0)
    found: dict[bytes, SmallGraph] = {}
    for neighbourhood in range(1 << n):
        d = neighbourhood.bit_count()
        if d > smallest + 1:
            continue
        if any(degrees[v] + (neighbourhood >> v & 1) < d for v in range(n)):
            continue
        if k is not None and next(iter_cliques(parent, k - 1, within=neighbourhood), None) is not None:
            continue
        if maximal and not _blocked(parent, neighbourhood, k):
            continue
        child = _attach(parent, neighbourhood)
        if maximal and not is_maximal_kfree(child, k):
            continue
        found.setdefault(canonical_code(child), child)
    return found


def _merge(parts: list[dict[bytes, SmallGraph]]) -> list[SmallGraph]:
    merged: dict[bytes, SmallGraph] = {}
    for part in parts:
        for code, graph in part.items():
            merged.setdefault(code, graph)
    return stream_order(merged.values())


@lru_cache(maxsize=None)
def _kfree_classes(n: int, k: Optional[int]) -> tuple[SmallGraph, ...]:
    if n == 0:
        return (SmallGraph(0, ()),)
    parents = _kfree_classes(n - 1, k)
    classes = _merge(parallel_map(partial(_extensions, k=k), parents))
    logger.info(f"Generated {len(classes)} classes on {n} vertices (forbidden clique: {k or 'none'})")
    return tuple(classes)


def enumerate_graphs(m: int) -> list[SmallGraph]:
    """Every isomorphism class on m vertices, exactly once, in stream order."""
    _check_order(m)
    return list(_kfree_classes(m, None))


def enumerate_kfree(n: int, k: Optional[int]) -> list[SmallGraph]:
    """K_k-free classes on n vertices; k None means no clique filter."""
    _check_order(n)
    _check_k(k)
    return list(_kfree_classes(n, k))


def enumerate_types(m: int, k: Optional[int], h: SmallGraph) -> list[SmallGraph]:
    """K_k-free classes on m vertices containing a copy of h (padded to m vertices)."""
    if h.n > m:
        raise GraphError(f"pattern has {h.n} vertices, more than the type order {m}")
    pattern = pad(h, m)
    return [t for t in enumerate_kfree(m, k) if count_injective_homs(pattern, t) > 0]


def is_maximal_kfree(g: SmallGraph, k: int) -> bool:
    """K_k-free and no edge can be added without creating K_k."""
    if contains_clique(g, k):
        return False
    for u, v in combinations(range(g.n), 2):
        if g.has_edge(u, v):
            continue
        common = g.masks[u] & g.masks[v]
        if next(iter_cliques(g, k - 2, within=common), None) is None:
            return False
    return True


@lru_cache(maxsize=None)
def _maximal_classes(n: int, k: int) -> tuple[SmallGraph, ...]:
    if n == 0:
        return (SmallGraph(0, ()),)
    parents = _kfree_classes(n - 1, k)
    classes = _merge(parallel_map(partial(_extensions, k=k, maximal=True), parents))
    logger.info(f"Generated {len(classes)} edge-maximal K_{k}-free classes on {n} vertices")
    return tuple(classes)


def enumerate_kfree_maximal(n: int, k: int) -> list[SmallGraph]:
    """Edge-maximal K_k-free classes on n vertices."""
    _check_order(n, EXTREMAL_MAX_ORDER)
    _check_k(k)
    if k is None:
        raise TuranLabError("edge-maximal enumeration needs a forbidden clique size")
    return list(_maximal_classes(n, k))


def enumerate_graphs_exhaustive(m: int, k: Optional[int] = None) -> list[SmallGraph]:
    """Filter-after-generate over all labeled graphs; an independent check for m <= 6."""
    if m > 6:
        raise UnsupportedSizeError(f"labeled exhaustive generation is limited to 6 vertices, got {m}")
    pairs = list(combinations(range(m), 2))
    classes: dict[bytes, SmallGraph] = {}
    for selection in range(1 << len(pairs)):
        masks = [0] * m
        for i, (u, v) in enumerate(pairs):
            if selection >> i & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        g = SmallGraph(m, tuple(masks))
        if k is not None and contains_clique(g, k):
            continue
        classes.setdefault(canonical_code(g), g)
    return stream_order(classes.values())
