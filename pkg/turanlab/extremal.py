"""Exhaustive ex(n, H, K_k) at desk scale, compared against the Turan graph."""

import logging
from functools import partial
from typing import Optional

from turanlab.config import EXTREMAL_FULL_MAX_ORDER, EXTREMAL_MAX_ORDER, settings
from turanlab.counting import count_copies
from turanlab.enumeration import enumerate_kfree, enumerate_kfree_maximal
from turanlab.errors import TuranLabError, UnsupportedSizeError
from turanlab.graph import SmallGraph, canonical_code
from turanlab.models import ExtremalReport
from turanlab.multipartite import count_copies_in_multipartite, realize_multipartite, turan_parts
from turanlab.utils import parallel_map

logger = logging.getLogger(__name__)


def _count_in(g: SmallGraph, h: SmallGraph) -> int:
    return count_copies(h, g)


def brute_force_ex(
    n: int,
    h: SmallGraph,
    k: int,
    maximal_only: Optional[bool] = None,
) -> ExtremalReport:
    """
    Maximum number of copies of h over n-vertex K_k-free graphs.

    Args:
        n: Host order (at most 9, or 8 when searching every class)
        h: Pattern graph
        k: Forbidden clique size, at least 2
        maximal_only: Search edge-maximal classes only (copy counts are monotone under adding edges);
            defaults to settings.extremal_maximal_only

    Returns:
        ExtremalReport listing every class attaining the maximum
    """
    if maximal_only is None:
        maximal_only = settings.extremal_maximal_only
    if k < 2:
        raise TuranLabError(f"forbidden clique size must be at least 2, got {k}")
    cap = EXTREMAL_MAX_ORDER if maximal_only else EXTREMAL_FULL_MAX_ORDER
    if n > cap:
        raise UnsupportedSizeError(
            f"extremal search over {'maximal' if maximal_only else 'all'} classes supports n <= {cap}, got {n}"
        )
    hosts = enumerate_kfree_maximal(n, k) if maximal_only else enumerate_kfree(n, k)
    counts = parallel_map(partial(_count_in, h=h), hosts)
    maximum = max(counts)
    extremal = [g for g, count in zip(hosts, counts) if count == maximum]

    parts = turan_parts(k - 1, n)
    turan_value = count_copies_in_multipartite(h, parts)
    turan_code = canonical_code(realize_multipartite(parts))
    turan_is_max = turan_value == maximum
    report = ExtremalReport(
        n=n,
        k=k,
        h=h,
        maximum=maximum,
        extremal_graphs=extremal,
        turan_value=turan_value,
        turan_is_max=turan_is_max,
        turan_is_unique_max=turan_is_max and len(extremal) == 1 and canonical_code(extremal[0]) == turan_code,
        search_space="maximal" if maximal_only else "all",
        classes_searched=len(hosts),
    )
    logger.info(
        f"ex({n}, H, K{k}) = {maximum} over {len(hosts)} classes; Turan graph gives {turan_value}, "
        f"{len(extremal)} extremal classes"
    )
    return report


def check_turan_good_at(
    n: int,
    h: SmallGraph,
    k: int,
    maximal_only: Optional[bool] = None,
) -> tuple[bool, ExtremalReport]:
    """Whether T_{k-1}(n) attains ex(n, h, K_k) at this single n."""
    report = brute_force_ex(n, h, k, maximal_only)
    return report.turan_is_max, report
