"""Induced-type tables: spanning counts of every gadget and of H on each K_k-free type containing H."""

import csv
import io
import json
import logging
from functools import partial
from typing import Literal, Optional, Sequence

import numpy as np

from turanlab.catalog import pad
from turanlab.config import TABLE_HARD_MAX_ORDER, settings
from turanlab.counting import count_copies
from turanlab.enumeration import enumerate_types
from turanlab.errors import GraphError, GraphFormatError, UnsupportedSizeError
from turanlab.graph import SmallGraph, graph6_decode, graph6_encode
from turanlab.models import TypeColumn, TypeTable
from turanlab.utils import parallel_map

logger = logging.getLogger(__name__)

TableFormat = Literal["csv", "json"]


def _table_column(t: SmallGraph, h: SmallGraph, gadgets: tuple[SmallGraph, ...]) -> TypeColumn:
    return TypeColumn(
        type=t,
        gadget_counts=[count_copies(b, t) for b in gadgets],
        h_count=count_copies(h, t),
    )


def build_type_table(
    h: SmallGraph,
    k: Optional[int],
    gadgets: Sequence[SmallGraph],
    max_order: Optional[int] = None,
) -> TypeTable:
    """
    Build the table of induced |V(h)|-vertex types containing h.

    Args:
        h: Target graph; its vertex count is the type order m
        k: Forbidden clique size, or None for no clique filter
        gadgets: Gadget graphs, padded with isolated vertices to m
        max_order: Size override for m (defaults to settings.table_max_order, at most 8)

    Returns:
        TypeTable whose columns follow the enumeration stream order
    """
    m = h.n
    limit = max_order if max_order is not None else settings.table_max_order
    if limit > TABLE_HARD_MAX_ORDER:
        raise UnsupportedSizeError(f"table order override may not exceed {TABLE_HARD_MAX_ORDER}")
    if m > limit:
        raise UnsupportedSizeError(f"type order {m} exceeds the table limit {limit}")
    for gadget in gadgets:
        if gadget.n > m:
            raise GraphError(f"gadget with {gadget.n} vertices does not fit in order {m}")
    padded = tuple(pad(gadget, m) for gadget in gadgets)
    types = enumerate_types(m, k, h)
    columns = parallel_map(partial(_table_column, h=h, gadgets=padded), types)
    logger.info(f"Built a {len(padded)} x {len(columns)} type table on {m} vertices (k={k or 'unbounded'})")
    return TypeTable(h=h, k=k, order=m, gadgets=list(padded), columns=columns)


def table_matrix(table: TypeTable) -> tuple[np.ndarray, np.ndarray]:
    """Gadget counts as a (gadgets x columns) matrix and the H row as a vector."""
    counts = np.array(
        [column.gadget_counts for column in table.columns], dtype=np.int64
    ).reshape(len(table.columns), len(table.gadgets))
    h_row = np.array([column.h_count for column in table.columns], dtype=np.int64)
    return counts.T, h_row


def render_table(table: TypeTable, fmt: TableFormat = "csv") -> str:
    """Serialize a table; columns are identified by the graph6 text of their type."""
    if fmt == "json":
        return json.dumps(table.model_dump(mode="json"), indent=2) + "\n"
    counts, h_row = table_matrix(table)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["#k", table.k if table.k is not None else "unbounded"])
    writer.writerow(["row"] + [graph6_encode(column.type) for column in table.columns])
    writer.writerow([f"H:{graph6_encode(table.h)}"] + h_row.tolist())
    for gadget, row in zip(table.gadgets, counts):
        writer.writerow([f"B:{graph6_encode(gadget)}"] + row.tolist())
    return buffer.getvalue()


def parse_table(text: str, fmt: TableFormat = "csv") -> TypeTable:
    """Inverse of render_table."""
    if fmt == "json":
        return TypeTable.model_validate_json(text)
    rows = list(csv.reader(io.StringIO(text)))
    if len(rows) < 3 or rows[0][:1] != ["#k"] or rows[1][:1] != ["row"]:
        raise GraphFormatError("table csv must start with the '#k', header and H rows")
    k = None if rows[0][1] == "unbounded" else int(rows[0][1])
    types = [graph6_decode(cell) for cell in rows[1][1:]]
    label, *h_counts = rows[2]
    if not label.startswith("H:"):
        raise GraphFormatError("third table row must be the H row")
    h = graph6_decode(label[2:])
    gadgets, gadget_rows = [], []
    for label, *counts in rows[3:]:
        if not label.startswith("B:"):
            raise GraphFormatError(f"unexpected table row label '{label}'")
        gadgets.append(graph6_decode(label[2:]))
        gadget_rows.append([int(count) for count in counts])
    columns = [
        TypeColumn(type=t, gadget_counts=[row[i] for row in gadget_rows], h_count=int(h_counts[i]))
        for i, t in enumerate(types)
    ]
    return TypeTable(h=h, k=k, order=h.n, gadgets=gadgets, columns=columns)
