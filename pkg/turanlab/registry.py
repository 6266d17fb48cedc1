"""Registry of known k-Turan-good graphs, with the theorem family each fact comes from."""

import json
import logging
import threading
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

from turanlab.catalog import bowtie, path
from turanlab.config import MAX_VERTICES
from turanlab.errors import GoodnessError, GraphFormatError, TuranLabError, UnsupportedSizeError
from turanlab.graph import (
    SmallGraph,
    canonical_code,
    canonical_graph,
    contains_clique,
    graph_from_edges,
    is_clique_set,
    vertex_mask,
)
from turanlab.models import GoodnessEntry, KCondition, Provenance
from turanlab.multipartite import multipartite_parts

logger = logging.getLogger(__name__)


def _key(h: SmallGraph) -> str:
    return canonical_code(h).hex()


def _is_path(h: SmallGraph) -> bool:
    return h.n >= 2 and h.edge_count == h.n - 1 and max(h.degrees()) <= 2 and len(h.components()) == 1


def _is_even_cycle(h: SmallGraph) -> bool:
    return h.n >= 4 and h.n % 2 == 0 and all(d == 2 for d in h.degrees()) and len(h.components()) == 1


class GoodnessRegistry:
    """Structural recognizers first, then fixed and constructed entries, then user axioms."""

    def __init__(self, seed: bool = True):
        self._lock = threading.Lock()
        self._fixed: dict[str, list[GoodnessEntry]] = {}
        self._axioms: dict[str, list[GoodnessEntry]] = {}
        if seed:
            self._seed()

    def _seed(self) -> None:
        seeds = [
            (path(3), KCondition.at_least(3), Provenance.CLIQUE_PLUS_VERTEX, "P3"),
            (path(4), KCondition.at_least(5), Provenance.PATH_P4, "P4 via the M2, K3+K1, K4 certificate"),
            (path(5), KCondition.at_least(4), Provenance.PATH_P5, "P5"),
            (bowtie(), KCondition.at_least(4), Provenance.BOWTIE, "two triangles sharing a vertex"),
        ]
        for h, condition, provenance, note in seeds:
            self._store(self._fixed, self.entry(h, condition, provenance, note))

    @staticmethod
    def entry(
        h: SmallGraph,
        condition: KCondition,
        provenance: Provenance,
        note: Optional[str] = None,
        parent: Optional[str] = None,
    ) -> GoodnessEntry:
        return GoodnessEntry(
            canonical=_key(h),
            graph=canonical_graph(h),
            k_condition=condition,
            provenance=provenance,
            note=note,
            parent=parent,
        )

    def _store(self, table: dict[str, list[GoodnessEntry]], entry: GoodnessEntry) -> GoodnessEntry:
        with self._lock:
            bucket = table.setdefault(entry.canonical, [])
            for existing in bucket:
                if existing.k_condition == entry.k_condition and existing.provenance == entry.provenance:
                    return existing
            bucket.append(entry)
            return entry

    def _clique(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        if h.n >= 1 and h.is_complete() and h.n <= k - 1:
            return self.entry(h, KCondition.at_least(max(3, h.n + 1)), Provenance.ZYKOV, f"K{h.n}")
        return None

    def _clique_union(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        components = h.components()
        if not all(h.induced(component).is_complete() for component in components):
            return None
        largest = max((len(component) for component in components), default=0)
        if largest >= k:
            return None
        condition = KCondition.at_least(max(3, largest + 1))
        if components and all(len(component) == 2 for component in components):
            return self.entry(h, condition, Provenance.MATCHING, f"M{len(components)}")
        return self.entry(h, condition, Provenance.CLIQUE_UNION)

    def _clique_plus_vertex(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        if h.n < 2 or h.is_complete():
            return None
        for v in range(h.n):
            if h.without_vertex(v).is_complete() and h.n <= k:
                return self.entry(
                    h, KCondition.at_least(max(3, h.n)), Provenance.CLIQUE_PLUS_VERTEX, f"K{h.n - 1} plus vertex {v}"
                )
        return None

    def _clique_plus_edge(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        if h.n != k or h.is_complete():
            return None
        for b1, b2 in h.edges():
            rest = [v for v in range(h.n) if v not in (b1, b2)]
            if h.induced(rest).is_complete():
                return self.entry(
                    h, KCondition.exactly(k), Provenance.CLIQUE_PLUS_EDGE, f"edge {b1}-{b2} plus K{k - 2}"
                )
        return None

    def _balanced_multipartite(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        parts = multipartite_parts(h)
        if parts and len(parts) == k - 1 and parts[0] - parts[-1] <= 1:
            return self.entry(h, KCondition.exactly(k), Provenance.GPS, f"T{k - 1}({h.n})")
        return None

    def _fixed_entry(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        for entry in self._fixed.get(_key(h), []):
            if entry.k_condition.holds(k):
                return entry
        if k == 3:
            if _is_path(h):
                return self.entry(h, KCondition.exactly(3), Provenance.GPS, f"P{h.n}")
            if _is_even_cycle(h):
                return self.entry(h, KCondition.exactly(3), Provenance.GPS, f"C{h.n}")
            if multipartite_parts(h) == (3, 2):
                return self.entry(h, KCondition.exactly(3), Provenance.GPS, "K2,3")
        return None

    def _axiom_entry(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        for entry in self._axioms.get(_key(h), []):
            if entry.k_condition.holds(k):
                return entry
        return None

    def is_known_good(self, h: SmallGraph, k: int) -> Optional[GoodnessEntry]:
        """First matching goodness fact for (h, k), or None when unknown."""
        if k < 3:
            raise TuranLabError(f"k must be at least 3, got {k}")
        if contains_clique(h, k):
            return None
        recognizers: list[Callable[[SmallGraph, int], Optional[GoodnessEntry]]] = [
            self._clique,
            self._clique_union,
            self._clique_plus_vertex,
            self._clique_plus_edge,
            self._balanced_multipartite,
            self._fixed_entry,
            self._axiom_entry,
        ]
        for recognizer in recognizers:
            entry = recognizer(h, k)
            if entry is not None:
                logger.debug(f"{entry.canonical} is {k}-good by {entry.provenance.value}")
                return entry
        return None

    def extend_by_attachment(
        self,
        h: SmallGraph,
        x: Iterable[int],
        join_pattern: Iterable[tuple[int, int]],
        k: int,
        note: Optional[str] = None,
    ) -> tuple[SmallGraph, GoodnessEntry]:
        """
        Add a disjoint K_{k-1} to h and join clique vertices x of h to it by the given edges.

        Args:
            h: A graph already known to be k-good
            x: Vertex set of a complete subgraph of h
            join_pattern: Pairs (vertex of x, index 0..k-2 of the new clique vertex)
            k: Forbidden clique size

        Returns:
            The constructed graph and its registered entry
        """
        base = self.is_known_good(h, k)
        if base is None:
            raise GoodnessError(f"graph is not known to be {k}-Turan-good")
        x = sorted(set(x))
        if any(not 0 <= v < h.n for v in x) or not is_clique_set(h, vertex_mask(x)):
            raise GoodnessError(f"attachment set {x} is not a clique of the graph")
        if h.n + k - 1 > MAX_VERTICES:
            raise UnsupportedSizeError(f"attachment result would exceed {MAX_VERTICES} vertices")
        clique_vertices = list(range(h.n, h.n + k - 1))
        edges = list(h.edges())
        edges += [(a, b) for i, a in enumerate(clique_vertices) for b in clique_vertices[i + 1:]]
        for v, index in join_pattern:
            if v not in x:
                raise GoodnessError(f"join edge starts at {v}, which is not in the attachment set")
            if not 0 <= index < k - 1:
                raise GoodnessError(f"join edge targets clique vertex {index}, outside 0..{k - 2}")
            edges.append((v, clique_vertices[index]))
        result = graph_from_edges(h.n + k - 1, edges)
        if contains_clique(result, k):
            raise GoodnessError(f"attachment creates a K{k}")
        entry = self._store(
            self._fixed,
            self.entry(result, KCondition.exactly(k), Provenance.ATTACHMENT, note, parent=base.canonical),
        )
        logger.info(f"Registered attachment {entry.canonical} for k={k} (parent {base.canonical})")
        return result, entry

    def register_axiom(
        self,
        h: SmallGraph,
        k_condition: Union[KCondition, str],
        note: str = "",
    ) -> GoodnessEntry:
        """Store a goodness fact taken on trust; it is echoed in every certificate that uses it."""
        if isinstance(k_condition, str):
            k_condition = KCondition.parse(k_condition)
        entry = self._store(self._axioms, self.entry(h, k_condition, Provenance.USER_AXIOM, note or None))
        logger.info(f"Registered axiom {entry.canonical} ({k_condition})")
        return entry

    def entries(self) -> list[GoodnessEntry]:
        """Stored entries (seeded, constructed and axioms) in a stable order."""
        with self._lock:
            stored = [entry for bucket in self._fixed.values() for entry in bucket]
            stored += [entry for bucket in self._axioms.values() for entry in bucket]
        return sorted(stored, key=lambda e: (e.graph.n, e.canonical, e.k_condition.min_k, e.provenance.value))

    def dump(self) -> str:
        """JSON lines, one GoodnessEntry per line."""
        return "".join(json.dumps(entry.model_dump(mode="json"), sort_keys=True) + "\n" for entry in self.entries())

    def load(self, text: str) -> int:
        """Merge entries from JSON lines; returns how many lines were read."""
        count = 0
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            entry = GoodnessEntry.model_validate_json(line)
            if _key(entry.graph) != entry.canonical:
                raise GraphFormatError(f"registry line {number}: canonical code does not match the graph")
            table = self._axioms if entry.provenance == Provenance.USER_AXIOM else self._fixed
            self._store(table, entry)
            count += 1
        logger.info(f"Loaded {count} registry entries")
        return count

    def dump_to(self, destination: Path) -> None:
        destination.write_text(self.dump(), encoding="utf-8")

    def load_from(self, source: Path) -> int:
        return self.load(source.read_text(encoding="utf-8"))


registry = GoodnessRegistry()
