"""Exact copy counting: embeddings, copies, induced copies, disjoint pairs and split copies."""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from math import perm
from typing import Iterable, Iterator

from turanlab.errors import InvalidPairError, TuranLabError
from turanlab.graph import (
    SmallGraph,
    automorphism_order,
    canonical_code,
    is_clique_set,
    iter_cliques,
    mask_vertices,
    vertex_mask,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitPattern:
    """A host graph whose vertex set splits into a clique K_l (left) and a clique K_m (right)."""

    host: SmallGraph
    left_part: frozenset
    right_part: frozenset

    def __post_init__(self):
        left, right = self.left_part, self.right_part
        if left & right:
            raise InvalidPairError("left and right parts overlap")
        if left | right != frozenset(range(self.host.n)):
            raise InvalidPairError("left and right parts must cover the host")
        if not left or not right:
            raise InvalidPairError("both parts of a split pattern must be nonempty")
        for part in (left, right):
            if not is_clique_set(self.host, vertex_mask(part)):
                raise InvalidPairError(f"part {sorted(part)} does not induce a clique")

    @classmethod
    def of(cls, host: SmallGraph, left: Iterable[int]) -> "SplitPattern":
        left = frozenset(left)
        return cls(host, left, frozenset(range(host.n)) - left)

    @property
    def l(self) -> int:
        return len(self.left_part)

    @property
    def m(self) -> int:
        return len(self.right_part)


def _search_order(h: SmallGraph) -> list[int]:
    """Non-isolated vertices, each next vertex the one with most already-placed neighbours."""
    pending = [v for v in range(h.n) if h.masks[v]]
    order: list[int] = []
    placed = 0
    while pending:
        best = max(pending, key=lambda v: ((h.masks[v] & placed).bit_count(), h.degree(v), -v))
        pending.remove(best)
        order.append(best)
        placed |= 1 << best
    return order


def _back_links(h: SmallGraph, order: list[int]) -> list[list[int]]:
    position = {v: i for i, v in enumerate(order)}
    return [
        [position[u] for u in mask_vertices(h.masks[v]) if position.get(u, len(order)) < i]
        for i, v in enumerate(order)
    ]


def count_injective_homs(h: SmallGraph, g: SmallGraph) -> int:
    """Injective vertex maps V(h) -> V(g) sending every edge of h to an edge of g."""
    if h.n > g.n:
        return 0
    order = _search_order(h)
    back = _back_links(h, order)
    isolated = h.n - len(order)
    full = (1 << g.n) - 1
    images = [0] * len(order)
    last = len(order) - 1

    def extend(i: int, used: int) -> int:
        candidates = full & ~used
        for j in back[i]:
            candidates &= g.masks[images[j]]
        if i == last:
            return candidates.bit_count()
        total = 0
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            images[i] = low.bit_length() - 1
            total += extend(i + 1, used | low)
        return total

    embedded = extend(0, 0) if order else 1
    return embedded * perm(g.n - len(order), isolated)


def iter_embeddings(h: SmallGraph, g: SmallGraph) -> Iterator[tuple[int, ...]]:
    """Every injective edge-preserving map, as the tuple of images of h's vertices."""
    if h.n > g.n:
        return
    order = _search_order(h)
    order += [v for v in range(h.n) if not h.masks[v]]
    back = _back_links(h, order)
    full = (1 << g.n) - 1
    images = [0] * h.n

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(images)
            return
        candidates = full & ~used
        for j in back[i]:
            candidates &= g.masks[images[order[j]]]
        for w in mask_vertices(candidates):
            images[order[i]] = w
            yield from extend(i + 1, used | 1 << w)

    yield from extend(0, 0)


def distinct_copies(h: SmallGraph, g: SmallGraph) -> set[tuple[int, frozenset]]:
    """Copies of h in g as (vertex mask, edge set) pairs."""
    edges = h.edges()
    copies = set()
    for images in iter_embeddings(h, g):
        image_edges = frozenset(
            (min(images[u], images[v]), max(images[u], images[v])) for u, v in edges
        )
        copies.add((vertex_mask(images), image_edges))
    return copies


def count_copies(h: SmallGraph, g: SmallGraph) -> int:
    """N(h, g): number of (not necessarily induced) subgraphs of g isomorphic to h."""
    return count_injective_homs(h, g) // automorphism_order(h)


def count_induced_copies(h: SmallGraph, g: SmallGraph) -> int:
    """Number of vertex subsets S of g with g[S] isomorphic to h."""
    if h.n > g.n:
        return 0
    target = canonical_code(h)
    edge_total = h.edge_count
    count = 0
    for subset in combinations(range(g.n), h.n):
        sub = g.induced(subset)
        if sub.edge_count == edge_total and canonical_code(sub) == target:
            count += 1
    return count


def count_disjoint_pairs(g1: SmallGraph, g2: SmallGraph, g: SmallGraph) -> int:
    """|S_{g1,g2}(g)|: ordered pairs of vertex-disjoint copies of g1 and g2 in g."""
    second = Counter(mask for mask, _ in distinct_copies(g2, g))
    total = 0
    for mask, _ in distinct_copies(g1, g):
        total += sum(count for other, count in second.items() if not mask & other)
    return total


def iter_clique_pairs(l: int, m: int, g: SmallGraph) -> Iterator[tuple[int, int]]:
    """Ordered pairs of disjoint (K_l, K_m) vertex masks of g."""
    rights = list(iter_cliques(g, m))
    for left in iter_cliques(g, l):
        for right in rights:
            if not left & right:
                yield left, right


def count_split_copies(
    split: SplitPattern,
    pair: tuple[Iterable[int], Iterable[int]],
    g: SmallGraph,
) -> int:
    """f_g(H, (S1, S2)): copies of the host in g[S1 u S2] with the left part on S1 and the right on S2."""
    first, second = (sorted(set(part)) for part in pair)
    if len(first) != split.l or len(second) != split.m:
        raise InvalidPairError(f"pair sizes ({len(first)}, {len(second)}) != ({split.l}, {split.m})")
    if set(first) & set(second):
        raise InvalidPairError("pair parts overlap")
    if any(v < 0 or v >= g.n for v in first + second):
        raise InvalidPairError("pair vertex outside the graph")
    for part in (first, second):
        if not is_clique_set(g, vertex_mask(part)):
            raise InvalidPairError(f"vertices {part} do not induce a clique")

    left = sorted(split.left_part)
    right = sorted(split.right_part)
    edges = split.host.edges()
    images = set()
    for left_image in permutations(first):
        for right_image in permutations(second):
            mapping = dict(zip(left, left_image))
            mapping.update(zip(right, right_image))
            if all(g.has_edge(mapping[u], mapping[v]) for u, v in edges):
                images.add(frozenset(
                    (min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in edges
                ))
    return len(images)


def split_multiplicity(split: SplitPattern) -> int:
    """a: how often one copy of the host is counted by the split-copy sum."""
    return sum(
        count_split_copies(split, (mask_vertices(left), mask_vertices(right)), split.host)
        for left, right in iter_clique_pairs(split.l, split.m, split.host)
    )


def split_copy_sum(split: SplitPattern, g: SmallGraph) -> int:
    """Sum of f_g over all pairs in S_{l,m}(g)."""
    return sum(
        count_split_copies(split, (mask_vertices(left), mask_vertices(right)), g)
        for left, right in iter_clique_pairs(split.l, split.m, g)
    )


def count_via_splits(split: SplitPattern, g: SmallGraph) -> int:
    """N(host, g) evaluated as (1/a) * sum of split copies."""
    quotient, remainder = divmod(split_copy_sum(split, g), split_multiplicity(split))
    if remainder:
        raise TuranLabError("split-copy sum is not divisible by the split multiplicity")
    return quotient
