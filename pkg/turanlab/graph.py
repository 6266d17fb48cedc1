"""Small simple graphs: bitmask representation, canonical labeling and interchange formats."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from turanlab.config import CANONICAL_MAX_ORDER, GRAPH6_MAX_VERTICES, MAX_VERTICES
from turanlab.errors import GraphError, GraphFormatError, UnsupportedSizeError

logger = logging.getLogger(__name__)

CanonicalCode = bytes

_GRAPH6_WEIGHTS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)


@dataclass(frozen=True)
class SmallGraph:
    """Labeled simple graph on at most 64 vertices, one neighbour mask per vertex."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.masks):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the vertex range")
            if mask >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(mask):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"adjacency of {u} and {v} is not symmetric")

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.masks) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.masks]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.masks[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.masks[v]) if u < v]

    def isolated_count(self) -> int:
        return sum(1 for mask in self.masks if mask == 0)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def induced(self, vertices: Sequence[int]) -> "SmallGraph":
        """Subgraph induced on `vertices`, relabeled 0..len-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        masks = []
        for v in vertices:
            mask = 0
            for u in _bits(self.masks[v]):
                if u in index:
                    mask |= 1 << index[u]
            masks.append(mask)
        return SmallGraph(len(vertices), tuple(masks))

    def relabel(self, order: Sequence[int]) -> "SmallGraph":
        """Graph whose vertex i is the old vertex order[i]."""
        if sorted(order) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return self.induced(order)

    def without_vertex(self, v: int) -> "SmallGraph":
        return self.induced([u for u in range(self.n) if u != v])

    def with_edge(self, u: int, v: int) -> "SmallGraph":
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        masks = list(self.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return SmallGraph(self.n, tuple(masks))

    def complement(self) -> "SmallGraph":
        full = (1 << self.n) - 1
        return SmallGraph(self.n, tuple(full & ~mask & ~(1 << v) for v, mask in enumerate(self.masks)))

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = 0
        result = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            component = 1 << start
            frontier = component
            while frontier:
                reach = 0
                for v in _bits(frontier):
                    reach |= self.masks[v]
                frontier = reach & ~component
                component |= frontier
            seen |= component
            result.append(list(_bits(component)))
        return result

    def to_numpy(self) -> np.ndarray:
        adjacency = np.zeros((self.n, self.n), dtype=np.uint8)
        for u, v in self.edges():
            adjacency[u, v] = adjacency[v, u] = 1
        return adjacency

    def __str__(self) -> str:
        return format_edge_list(self)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> list[int]:
    return list(_bits(mask))


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
    """Graph on vertices 0..n-1 with exactly the given edges; other vertices stay isolated."""
    if n > MAX_VERTICES or n < 0:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    masks = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} has an endpoint outside [0, {n})")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return SmallGraph(n, tuple(masks))


def graph_from_adjacency(adjacency: np.ndarray) -> SmallGraph:
    adjacency = np.asarray(adjacency)
    n = adjacency.shape[0]
    rows, cols = np.nonzero(np.triu(adjacency, 1))
    return graph_from_edges(n, zip(rows.tolist(), cols.tolist()))


def graph_from_flag(n: int, text: str) -> SmallGraph:
    """Parse a 1-indexed pictogram edge list such as "1--2,2--3"."""
    edges = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        left, _, right = item.partition("--")
        try:
            edges.append((int(left) - 1, int(right) - 1))
        except ValueError:
            raise GraphFormatError(f"malformed pictogram edge '{item}'")
    return graph_from_edges(n, edges)


def iter_cliques(g: SmallGraph, r: int, within: Optional[int] = None) -> Iterator[int]:
    """Vertex masks of all r-cliques of g (optionally inside the vertex mask `within`)."""
    candidates = (1 << g.n) - 1 if within is None else within

    def extend(chosen: int, pool: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        while pool and pool.bit_count() >= need:
            low = pool & -pool
            v = low.bit_length() - 1
            pool ^= low
            yield from extend(chosen | low, pool & g.masks[v], need - 1)

    if r < 0:
        return
    yield from extend(0, candidates, r)


def contains_clique(g: SmallGraph, r: int) -> bool:
    """True iff g has r pairwise adjacent vertices."""
    if r <= 0:
        return True
    return next(iter_cliques(g, r), None) is not None


def is_clique_set(g: SmallGraph, mask: int) -> bool:
    return all((g.masks[v] | (1 << v)) & mask == mask for v in _bits(mask))


def _rank(values: list) -> list[int]:
    index = {value: i for i, value in enumerate(sorted(set(values)))}
    return [index[value] for value in values]


def refined_colors(g: SmallGraph) -> list[int]:
    """Degree-seeded colour refinement; colours are ranks of sorted signatures, so relabeling-invariant."""
    colors = _rank(g.degrees())
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.masks[v]))))
            for v in range(g.n)
        ]
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colors)):
            return refined
        colors = refined


def _are_twins(g: SmallGraph, u: int, v: int) -> bool:
    return g.masks[u] & ~(1 << v) == g.masks[v] & ~(1 << u)


def _column(g: SmallGraph, v: int, order: list[int]) -> int:
    value = 0
    for u in order:
        value = value << 1 | (g.masks[v] >> u & 1)
    return value


@lru_cache(maxsize=1 << 16)
def _canonical_search(g: SmallGraph) -> tuple[bytes, tuple[int, ...]]:
    n = g.n
    if n == 0:
        return bytes([0]), ()
    colors = refined_colors(g)
    slots = sorted(colors)
    best: list[Optional[tuple[int, ...]]] = [None]
    best_order: list[tuple[int, ...]] = [()]
    order: list[int] = []
    columns: list[int] = []

    def extend(used: int) -> None:
        i = len(order)
        if i == n:
            current = tuple(columns)
            if best[0] is None or current < best[0]:
                best[0] = current
                best_order[0] = tuple(order)
            return
        keyed = [
            (_column(g, v, order), v)
            for v in range(n)
            if not used >> v & 1 and colors[v] == slots[i]
        ]
        low = min(key for key, _ in keyed)
        if best[0] is not None and tuple(columns) + (low,) > best[0][: i + 1]:
            return
        chosen: list[int] = []
        for key, v in keyed:
            if key == low and not any(_are_twins(g, v, w) for w in chosen):
                chosen.append(v)
        for v in chosen:
            order.append(v)
            columns.append(low)
            extend(used | 1 << v)
            order.pop()
            columns.pop()

    extend(0)
    bits = []
    for i, column in enumerate(best[0]):
        bits.extend((column >> (i - 1 - j)) & 1 for j in range(i))
    packed = np.packbits(np.array(bits, dtype=np.uint8)).tobytes() if bits else b""
    return bytes([n]) + packed, best_order[0]


def canonical_code(g: SmallGraph) -> CanonicalCode:
    """Canonical code without the size guard; exact at any size, fast for small graphs."""
    return _canonical_search(g)[0]


def canonical_form(g: SmallGraph) -> CanonicalCode:
    """Code equal for two graphs exactly when they are isomorphic."""
    if g.n > CANONICAL_MAX_ORDER:
        raise UnsupportedSizeError(
            f"canonical form supports at most {CANONICAL_MAX_ORDER} vertices, got {g.n}"
        )
    return canonical_code(g)


def canonical_graph(g: SmallGraph) -> SmallGraph:
    """Canonically relabeled representative of the isomorphism class of g."""
    return g.relabel(_canonical_search(g)[1])


def is_isomorphic(g1: SmallGraph, g2: SmallGraph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_code(g1) == canonical_code(g2)


def _extends_to_automorphism(g: SmallGraph, colors: list[int], fixed: dict[int, int]) -> bool:
    pending = [v for v in range(g.n) if v not in fixed]
    mapping = dict(fixed)
    used = vertex_mask(mapping.values())

    def consistent(v: int, w: int) -> bool:
        return all((g.masks[v] >> a & 1) == (g.masks[w] >> b & 1) for a, b in mapping.items())

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(pending):
            return True
        v = pending[i]
        for w in range(g.n):
            if used >> w & 1 or colors[w] != colors[v] or not consistent(v, w):
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(i + 1):
                return True
            used &= ~(1 << w)
            del mapping[v]
        return False

    if not all(consistent(a, b) for a, b in fixed.items()):
        return False
    return extend(0)


@lru_cache(maxsize=1 << 14)
def automorphism_order(g: SmallGraph) -> int:
    """|Aut(g)| by orbit-stabilizer along the chain of pointwise stabilizers, no size guard."""
    colors = refined_colors(g)
    fixed: dict[int, int] = {}
    order = 1
    for v in range(g.n):
        orbit = 1
        for w in range(g.n):
            if w == v or w in fixed or colors[w] != colors[v]:
                continue
            if _are_twins(g, v, w) or _extends_to_automorphism(g, colors, {**fixed, v: w}):
                orbit += 1
        order *= orbit
        fixed[v] = v
    return order


def automorphism_count(g: SmallGraph) -> int:
    """Order of the automorphism group of g."""
    if g.n > CANONICAL_MAX_ORDER:
        raise UnsupportedSizeError(
            f"automorphism counting supports at most {CANONICAL_MAX_ORDER} vertices, got {g.n}"
        )
    return automorphism_order(g)


def graph6_encode(g: SmallGraph) -> str:
    """Short-form graph6, column-major upper triangle, no header."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form holds at most {GRAPH6_MAX_VERTICES} vertices")
    bits = g.to_numpy()[np.tril_indices(g.n, -1)].astype(np.int64)
    bits = np.concatenate([bits, np.zeros((-len(bits)) % 6, dtype=np.int64)])
    payload = bits.reshape(-1, 6) @ _GRAPH6_WEIGHTS + 63
    return chr(63 + g.n) + "".join(chr(value) for value in payload.tolist())


def graph6_decode(text: str) -> SmallGraph:
    """Parse short-form graph6 text (an optional >>graph6<< header is skipped)."""
    text = text.strip()
    shift = 0
    if text.startswith(">>graph6<<"):
        shift = len(">>graph6<<")
        text = text[shift:]
    if not text:
        raise GraphFormatError("empty graph6 text", shift)
    for offset, char in enumerate(text):
        if not 63 <= ord(char) <= 126:
            raise GraphFormatError(f"invalid graph6 character {char!r}", shift + offset)
    n = ord(text[0]) - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", shift)
    pair_count = n * (n - 1) // 2
    expected = (pair_count + 5) // 6
    if len(text) - 1 != expected:
        raise GraphFormatError(
            f"graph6 payload for n={n} needs {expected} bytes, got {len(text) - 1}",
            shift + 1 + min(len(text) - 1, expected),
        )
    values = np.frombuffer(text[1:].encode("ascii"), dtype=np.uint8) - 63
    bits = np.unpackbits(values[:, None], axis=1)[:, 2:].ravel()
    if bits[pair_count:].any():
        raise GraphFormatError("nonzero padding bits in graph6 payload", shift + len(text) - 1)
    adjacency = np.zeros((n, n), dtype=np.uint8)
    adjacency[np.tril_indices(n, -1)] = bits[:pair_count]
    return graph_from_adjacency(adjacency | adjacency.T)


def format_edge_list(g: SmallGraph) -> str:
    return f"{g.n}; " + ",".join(f"{u}-{v}" for u, v in g.edges()) if g.edge_count else f"{g.n};"


def parse_edge_list(text: str) -> SmallGraph:
    """Parse the plain edge-list format "n; u-v,u-v,...". Offsets are character positions."""
    head, sep, body = text.partition(";")
    if not sep:
        raise GraphFormatError("edge list must start with 'n;'", len(text))
    try:
        n = int(head)
    except ValueError:
        raise GraphFormatError(f"invalid vertex count '{head.strip()}'", 0)
    edges = []
    position = len(head) + 1
    for item in body.split(","):
        stripped = item.strip()
        if stripped:
            left, dash, right = stripped.partition("-")
            try:
                if not dash:
                    raise ValueError(stripped)
                edges.append((int(left), int(right)))
            except ValueError:
                raise GraphFormatError(f"malformed edge '{stripped}'", position + item.find(stripped))
        position += len(item) + 1
    return graph_from_edges(n, edges)
