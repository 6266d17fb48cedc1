"""Complete multipartite and Turan graphs, counted symbolically from their part sizes."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb, perm
from typing import Callable, Iterable, Iterator, Optional

from turanlab.catalog import clique, complete_multipartite
from turanlab.config import MAX_VERTICES, MULTIPARTITE_TYPES_MAX_ORDER
from turanlab.errors import (
    BalancingError,
    GraphFormatError,
    InvalidTypeError,
    TuranLabError,
    UnsupportedSizeError,
)
from turanlab.graph import SmallGraph, automorphism_order, canonical_code, canonical_graph
from turanlab.models import BalancingWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartVector:
    """Part sizes n_1 >= ... >= n_r >= 1 of a complete multipartite graph."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(size < 1 for size in self.sizes):
            raise TuranLabError(f"part sizes must be positive: {self.sizes}")
        if list(self.sizes) != sorted(self.sizes, reverse=True):
            raise TuranLabError(f"part sizes must be non-increasing: {self.sizes}")

    @classmethod
    def of(cls, sizes: Iterable[int]) -> "PartVector":
        """Canonicalize: drop empty parts and sort non-increasing."""
        sizes = list(sizes)
        if any(size < 0 for size in sizes):
            raise TuranLabError(f"negative part size in {sizes}")
        return cls(tuple(sorted((size for size in sizes if size), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "PartVector":
        """Parse the literal syntax "3,2,2"."""
        try:
            return cls.of(int(item) for item in text.split(",") if item.strip())
        except ValueError:
            raise GraphFormatError(f"invalid part vector '{text}'")

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def r(self) -> int:
        return len(self.sizes)

    def __str__(self) -> str:
        return ",".join(map(str, self.sizes))


def turan_parts(r: int, n: int) -> PartVector:
    """Part sizes of T_r(n); empty parts are dropped when n < r."""
    if r <= 0:
        raise TuranLabError(f"number of parts must be positive, got {r}")
    if n < 0:
        raise TuranLabError(f"vertex count must be nonnegative, got {n}")
    q, rest = divmod(n, r)
    return PartVector.of([q + 1] * rest + [q] * (r - rest))


def realize_multipartite(p: PartVector) -> SmallGraph:
    if p.total > MAX_VERTICES:
        raise UnsupportedSizeError(f"cannot realize {p.total} vertices (limit {MAX_VERTICES})")
    return complete_multipartite(p.sizes)


def multipartite_parts(g: SmallGraph) -> Optional[tuple[int, ...]]:
    """Part sizes (non-increasing) if g is complete multipartite, else None."""
    complement = g.complement()
    sizes = []
    for component in complement.components():
        if not complement.induced(component).is_complete():
            return None
        sizes.append(len(component))
    return tuple(sorted(sizes, reverse=True))


def _independent_partitions(h: SmallGraph, limit: int) -> Iterator[list[int]]:
    """Block sizes of every partition of V(h) into at most `limit` independent sets."""
    blocks: list[int] = []

    def assign(v: int) -> Iterator[list[int]]:
        if v == h.n:
            yield [block.bit_count() for block in blocks]
            return
        for i, block in enumerate(blocks):
            if not block & h.masks[v]:
                blocks[i] |= 1 << v
                yield from assign(v + 1)
                blocks[i] &= ~(1 << v)
        if len(blocks) < limit:
            blocks.append(1 << v)
            yield from assign(v + 1)
            blocks.pop()

    yield from assign(0)


def _injective_weight(blocks: tuple[int, ...], sizes: tuple[int, ...], weight: Callable[[int, int], int]) -> int:
    """Sum over injective maps blocks -> parts of the product of weight(part size, block size)."""
    full = (1 << len(blocks)) - 1
    table = {0: 1}
    for size in sizes:
        step = dict(table)
        for assigned, value in table.items():
            for i, block in enumerate(blocks):
                if not assigned >> i & 1:
                    key = assigned | 1 << i
                    step[key] = step.get(key, 0) + value * weight(size, block)
        table = step
    return table.get(full, 0)


@lru_cache(maxsize=1 << 12)
def _partition_profile(h: SmallGraph, limit: int) -> dict[tuple[int, ...], int]:
    profile: dict[tuple[int, ...], int] = {}
    for blocks in _independent_partitions(h, limit):
        key = tuple(sorted(blocks, reverse=True))
        profile[key] = profile.get(key, 0) + 1
    return profile


def count_copies_in_multipartite(h: SmallGraph, p: PartVector) -> int:
    """Exact N(h, K(p)) from falling factorials over independent-set partitions of h."""
    if h.n > p.total:
        return 0
    total = 0
    for blocks, multiplicity in _partition_profile(h, p.r).items():
        total += multiplicity * _injective_weight(blocks, p.sizes, perm)
    return total // automorphism_order(h)


def _integer_partitions(m: int, limit: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    if limit == 0:
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _integer_partitions(m - first, limit - 1, first):
            yield (first,) + rest


def multipartite_types(m: int, rmax: int) -> list[SmallGraph]:
    """One canonical complete multipartite graph per partition of m into at most rmax parts."""
    if m > MULTIPARTITE_TYPES_MAX_ORDER:
        raise UnsupportedSizeError(
            f"multipartite types support at most {MULTIPARTITE_TYPES_MAX_ORDER} vertices, got {m}"
        )
    types = [canonical_graph(complete_multipartite(sizes)) for sizes in _integer_partitions(m, rmax)]
    return sorted(types, key=lambda t: (t.edge_count, canonical_code(t)))


def induced_type_count(t: SmallGraph, p: PartVector) -> int:
    """Number of |V(t)|-subsets of K(p) inducing a copy of the complete multipartite graph t."""
    parts = multipartite_parts(t)
    if parts is None:
        raise InvalidTypeError("type graph is not complete multipartite")
    symmetry = 1
    for size in set(parts):
        symmetry *= perm(parts.count(size))
    return _injective_weight(parts, p.sizes, comb) // symmetry


def zykov_bound(n: int, r: int, k: int) -> int:
    """The bound C(k-1, r) * ceil(n / (k-1))^r on copies of K_r in K_k-free graphs."""
    if r < 1 or r >= k:
        raise TuranLabError(f"need 1 <= r <= k - 1, got r={r}, k={k}")
    return comb(k - 1, r) * (-(-n // (k - 1))) ** r


def balancing_compare(h: SmallGraph, p: PartVector, i: int, j: int) -> BalancingWitness:
    """Copies of h before and after moving one vertex from part j to part i."""
    sizes = list(p.sizes)
    if not (0 <= i < len(sizes) and 0 <= j < len(sizes)) or i == j:
        raise BalancingError(f"invalid part indices ({i}, {j}) for {p}")
    if sizes[j] < sizes[i] + 2:
        raise BalancingError(f"moving a vertex from part {j} to part {i} of {p} does not balance")
    sizes[j] -= 1
    sizes[i] += 1
    moved = PartVector.of(sizes)
    witness = BalancingWitness(
        parts_before=list(p.sizes),
        parts_after=list(moved.sizes),
        before=count_copies_in_multipartite(h, p),
        after=count_copies_in_multipartite(h, moved),
    )
    logger.debug(f"Balancing {p} -> {moved}: {witness.before} -> {witness.after}")
    return witness


def disjoint_clique_union_bound(l: int, m: int, n: int, k: int) -> int:
    """N(K_l, T_{k-1}(n)) * N(K_m, T_{k-1}(n - l)), the leading term for K_l u K_m."""
    if n < l:
        return 0
    return (
        count_copies_in_multipartite(clique(l), turan_parts(k - 1, n))
        * count_copies_in_multipartite(clique(m), turan_parts(k - 1, n - l))
    )
