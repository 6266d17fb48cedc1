"""Linear certificates of Turan-goodness: verification, exact search and Turan-graph evaluation."""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Union

from turanlab.catalog import core, pad
from turanlab.config import TABLE_HARD_MAX_ORDER
from turanlab.counting import count_copies
from turanlab.enumeration import enumerate_kfree
from turanlab.errors import CertificateError, GraphError, ProvenanceError, SolverError
from turanlab.graph import SmallGraph, canonical_code, graph6_encode
from turanlab.models import (
    Certificate,
    CertificateIdentity,
    ColumnWeight,
    EqualityCheck,
    GoodnessEntry,
    InequalityCheck,
    InfeasibilityWitness,
    Provenance,
    Verdict,
    VerificationReport,
)
from turanlab.multipartite import count_copies_in_multipartite, multipartite_types, turan_parts
from turanlab.registry import GoodnessRegistry, registry as default_registry
from turanlab.solver import Constraint, lexicographic_minimum
from turanlab.tables import build_type_table, table_matrix

logger = logging.getLogger(__name__)


def gadget_entry(gadget: SmallGraph, k: int, registry: GoodnessRegistry) -> Optional[GoodnessEntry]:
    """Goodness of a padded gadget, falling back to its core (B u K1 inherits from B)."""
    entry = registry.is_known_good(gadget, k)
    if entry is None and gadget.isolated_count() and gadget.isolated_count() < gadget.n:
        entry = registry.is_known_good(core(gadget), k)
    return entry


def _require_good(gadgets: Sequence[SmallGraph], k: int, registry: GoodnessRegistry) -> list[GoodnessEntry]:
    entries = []
    for gadget in gadgets:
        entry = gadget_entry(gadget, k, registry)
        if entry is None:
            raise ProvenanceError(f"gadget {graph6_encode(gadget)} is not registered as {k}-Turan-good")
        entries.append(entry)
    return entries


def _padded(h: SmallGraph, gadgets: Sequence[SmallGraph]) -> list[SmallGraph]:
    for gadget in gadgets:
        if gadget.n > h.n:
            raise GraphError(f"gadget with {gadget.n} vertices is larger than the target ({h.n})")
    return [pad(gadget, h.n) for gadget in gadgets]


def _provenance_tags(entries: Sequence[GoodnessEntry]) -> list[str]:
    return [
        f"{entry.provenance.value}: {entry.note}" if entry.provenance == Provenance.USER_AXIOM and entry.note
        else entry.provenance.value
        for entry in entries
    ]


def verify_certificate(c: Certificate, registry: Optional[GoodnessRegistry] = None) -> VerificationReport:
    """
    Check a certificate exactly.

    Passes iff every gadget is registered k-good, h is dominated on every K_k-free type containing it,
    and both sides agree on every complete multipartite type with at most k-1 parts.
    """
    registry = registry or default_registry
    if len(c.coefficients) != len(c.gadgets):
        raise CertificateError(f"{len(c.coefficients)} coefficients for {len(c.gadgets)} gadgets")
    if any(coefficient < 0 for coefficient in c.coefficients):
        raise CertificateError("certificate coefficients must be nonnegative")
    gadgets = _padded(c.h, c.gadgets)
    entries = _require_good(gadgets, c.k, registry)

    table = build_type_table(c.h, c.k, gadgets, max_order=TABLE_HARD_MAX_ORDER)
    inequality_checks = []
    for column in table.columns:
        rhs = sum((coefficient * count for coefficient, count in zip(c.coefficients, column.gadget_counts)), Fraction(0))
        inequality_checks.append(
            InequalityCheck(type=column.type, lhs=column.h_count, rhs=rhs, margin=rhs - column.h_count)
        )

    equality_checks = []
    for p in multipartite_types(c.h.n, c.k - 1):
        lhs = count_copies(c.h, p)
        rhs = sum((coefficient * count_copies(b, p) for coefficient, b in zip(c.coefficients, gadgets)), Fraction(0))
        equality_checks.append(EqualityCheck(type=p, lhs=lhs, rhs=rhs, residual=rhs - lhs))

    failing = next((check.type for check in inequality_checks if check.margin < 0), None)
    if failing is None:
        failing = next((check.type for check in equality_checks if check.residual != 0), None)
    verdict = Verdict.PASS if failing is None else Verdict.FAIL
    for check in inequality_checks:
        logger.debug(f"Column {graph6_encode(check.type)}: margin {check.margin}")

    if verdict == Verdict.PASS:
        statement = (
            f"{graph6_encode(c.h)} is {c.k}-Turan-good, conditional on the goodness of "
            + ", ".join(f"{graph6_encode(b)} [{entry.provenance.value}]" for b, entry in zip(gadgets, entries))
        )
        if any(entry.provenance == Provenance.USER_AXIOM for entry in entries):
            logger.warning("Certificate verifies only conditionally on user axioms")
    else:
        statement = f"certificate fails at type {graph6_encode(failing)}"
    logger.info(f"Verification {verdict.value}: {statement}")
    return VerificationReport(
        verdict=verdict,
        k=c.k,
        inequality_checks=inequality_checks,
        equality_checks=equality_checks,
        failing_column=failing,
        gadget_entries=entries,
        statement=statement,
    )


def find_certificate(
    h: SmallGraph,
    k: int,
    gadget_pool: Sequence[SmallGraph],
    registry: Optional[GoodnessRegistry] = None,
) -> Union[Certificate, InfeasibilityWitness]:
    """Exact rational search: equality on multipartite types, domination on the other types, c >= 0.

    Among feasible certificates the one minimizing sum(c), then c_1, c_2, ... is returned.
    """
    registry = registry or default_registry
    if not gadget_pool:
        raise CertificateError("gadget pool is empty")
    gadgets = _padded(h, gadget_pool)
    entries = _require_good(gadgets, k, registry)

    table = build_type_table(h, k, gadgets, max_order=TABLE_HARD_MAX_ORDER)
    equality_types = multipartite_types(h.n, k - 1)
    equality_codes = {canonical_code(p) for p in equality_types}

    rows: list[tuple[SmallGraph, Constraint]] = [
        (p, Constraint.of([count_copies(b, p) for b in gadgets], "eq", count_copies(h, p)))
        for p in equality_types
    ]
    counts, h_row = table_matrix(table)
    for i, column in enumerate(table.columns):
        if canonical_code(column.type) not in equality_codes:
            rows.append((column.type, Constraint.of(counts[:, i].tolist(), "ge", int(h_row[i]))))

    result = lexicographic_minimum([constraint for _, constraint in rows], len(gadgets))
    if not result.feasible:
        weights = [
            ColumnWeight(type=t, relation=constraint.relation, weight=y)
            for (t, constraint), y in zip(rows, result.farkas)
        ]
        logger.info(f"No certificate over {len(gadgets)} gadgets; witness has {sum(1 for w in weights if w.weight)} columns")
        return InfeasibilityWitness(
            h=h,
            k=k,
            gadgets=gadgets,
            weights=weights,
            separating_columns=[w.type for w in weights if w.weight != 0],
        )

    certificate = Certificate(
        h=h, k=k, gadgets=gadgets, coefficients=result.solution, provenance=_provenance_tags(entries)
    )
    if verify_certificate(certificate, registry).verdict != Verdict.PASS:
        raise SolverError("solver returned a certificate that does not verify")
    return certificate


def certificate_bound_at(
    c: Certificate,
    n: int,
    registry: Optional[GoodnessRegistry] = None,
) -> tuple[int, int]:
    """N(h, T_{k-1}(n)) and sum_j c_j N(B_j, T_{k-1}(n)), both from the closed form."""
    if verify_certificate(c, registry).verdict != Verdict.PASS:
        raise CertificateError("certificate does not verify")
    parts = turan_parts(c.k - 1, n)
    lhs = count_copies_in_multipartite(c.h, parts)
    rhs = sum(
        (coefficient * count_copies_in_multipartite(b, parts) for coefficient, b in zip(c.coefficients, _padded(c.h, c.gadgets))),
        Fraction(0),
    )
    if rhs.denominator != 1:
        raise CertificateError(f"Turan-side evaluation {rhs} is not an integer")
    return lhs, int(rhs)


def certificate_identity(c: Certificate) -> CertificateIdentity:
    """Weights of each side on the multipartite types with at most k-1 parts."""
    gadgets = _padded(c.h, c.gadgets)
    lhs, rhs = {}, {}
    for p in multipartite_types(c.h.n, c.k - 1):
        key = graph6_encode(p)
        lhs[key] = count_copies(c.h, p)
        rhs[key] = sum((coefficient * count_copies(b, p) for coefficient, b in zip(c.coefficients, gadgets)), Fraction(0))
    return CertificateIdentity(lhs=lhs, rhs=rhs)


def auto_gadget_pool(
    m: int,
    k: int,
    exclude: Optional[SmallGraph] = None,
    registry: Optional[GoodnessRegistry] = None,
) -> list[SmallGraph]:
    """Every m-vertex K_k-free class with at least one edge that the registry knows to be k-good."""
    registry = registry or default_registry
    excluded = canonical_code(pad(exclude, m)) if exclude is not None else None
    pool = [
        g for g in enumerate_kfree(m, k)
        if g.edge_count and canonical_code(g) != excluded and gadget_entry(g, k, registry) is not None
    ]
    logger.info(f"Automatic pool for m={m}, k={k}: {len(pool)} gadgets")
    return pool
