"""Utility functions for turanlab."""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Optional, TypeVar

from turanlab.catalog import named_graph
from turanlab.config import PARALLEL_MIN_ITEMS, settings
from turanlab.errors import GraphError, GraphFormatError
from turanlab.graph import SmallGraph, graph6_decode, parse_edge_list

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> list[R]:
    """
    Map fn over items, in worker processes when the workload is large enough.

    Args:
        fn: A picklable (module-level) function
        items: Work items; results keep their order
        threads: Worker cap, defaults to settings.threads

    Returns:
        The list of results, identical at every parallelism level
    """
    items = list(items)
    workers = min(threads or settings.threads, len(items))
    if workers <= 1 or len(items) < PARALLEL_MIN_ITEMS:
        return [fn(item) for item in items]
    logger.debug(f"Mapping {len(items)} items over {workers} processes")
    chunksize = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items, chunksize=chunksize))


def graph6_lines(text: str) -> list[str]:
    """Non-empty lines, skipping '#' comments."""
    return [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]


def parse_graph(text: str) -> SmallGraph:
    """Parse one graph given as an edge list ("n; u-v"), a catalog name ("P4", "K3+K1") or graph6."""
    text = text.strip()
    if ";" in text:
        return parse_edge_list(text)
    try:
        return named_graph(text)
    except GraphError:
        pass
    return graph6_decode(text)


def load_graphs(argument: str) -> list[SmallGraph]:
    """Graphs from a file path (one per line, UTF-8) or from the argument text itself."""
    path = Path(argument)
    if path.is_file():
        lines = graph6_lines(path.read_text(encoding="utf-8"))
        logger.info(f"Read {len(lines)} graphs from {path}")
        return [parse_graph(line) for line in lines]
    return [parse_graph(argument)]


def load_graph(argument: str) -> SmallGraph:
    graphs = load_graphs(argument)
    if len(graphs) != 1:
        raise GraphFormatError(f"expected exactly one graph in '{argument}', found {len(graphs)}")
    return graphs[0]
