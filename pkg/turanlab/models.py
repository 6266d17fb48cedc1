"""Data models for turanlab reports, certificates and registry entries."""

import re
from enum import Enum
from fractions import Fraction
from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field, PlainSerializer, PlainValidator, WithJsonSchema

from turanlab.graph import SmallGraph, graph6_decode, graph6_encode


def _to_graph(value) -> SmallGraph:
    if isinstance(value, SmallGraph):
        return value
    if isinstance(value, str):
        return graph6_decode(value)
    raise ValueError(f"expected graph6 text, got {type(value).__name__}")


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("coefficients must be exact: use an integer or 'p/q' text")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in {value!r}") from None
    raise ValueError(f"expected a rational, got {type(value).__name__}")


def fraction_text(value: Fraction) -> str:
    return str(value)


Graph = Annotated[
    SmallGraph,
    PlainValidator(_to_graph),
    PlainSerializer(graph6_encode, return_type=str),
    WithJsonSchema({"type": "string", "description": "graph6"}),
]

Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(fraction_text, return_type=str),
    WithJsonSchema({"type": "string", "description": "p/q"}),
]


class Verdict(str, Enum):
    """Outcome of a certificate verification."""
    PASS = "pass"
    FAIL = "fail"


class Provenance(str, Enum):
    """Theorem family a goodness fact comes from."""
    ZYKOV = "zykov-clique"
    GPS = "gyori-pach-simonovits"
    ATTACHMENT = "clique-attachment"
    MATCHING = "matching"
    CLIQUE_PLUS_VERTEX = "clique-plus-vertex"
    CLIQUE_UNION = "clique-union"
    CLIQUE_PLUS_EDGE = "clique-plus-edge"
    PATH_P4 = "path-p4-certificate"
    PATH_P5 = "path-p5-certificate"
    BOWTIE = "bowtie-certificate"
    USER_AXIOM = "user-axiom"


class KCondition(BaseModel):
    """Range of k for which a goodness fact holds: min_k <= k <= max_k (max_k None = unbounded)."""
    min_k: int = 3
    max_k: Optional[int] = None

    def holds(self, k: int) -> bool:
        return k >= self.min_k and (self.max_k is None or k <= self.max_k)

    @classmethod
    def exactly(cls, k: int) -> "KCondition":
        return cls(min_k=k, max_k=k)

    @classmethod
    def at_least(cls, k: int) -> "KCondition":
        return cls(min_k=k)

    @classmethod
    def parse(cls, text: str) -> "KCondition":
        """Accepts "k>=6", "k ≥ 6", "k=3", "4<=k<=6", "k<=5" and "any"."""
        compact = text.replace("≥", ">=").replace("≤", "<=").replace(" ", "").lower()
        if compact in ("", "any", "all"):
            return cls()
        patterns = [
            (r"k>=(\d+)", lambda m: cls(min_k=int(m[1]))),
            (r"k>(\d+)", lambda m: cls(min_k=int(m[1]) + 1)),
            (r"k==?(\d+)", lambda m: cls.exactly(int(m[1]))),
            (r"k<=(\d+)", lambda m: cls(max_k=int(m[1]))),
            (r"(\d+)<=k<=(\d+)", lambda m: cls(min_k=int(m[1]), max_k=int(m[2]))),
        ]
        for pattern, build in patterns:
            match = re.fullmatch(pattern, compact)
            if match:
                return build(match)
        raise ValueError(f"unrecognized k condition '{text}'")

    def __str__(self) -> str:
        if self.max_k is None:
            return f"k >= {self.min_k}"
        if self.max_k == self.min_k:
            return f"k = {self.min_k}"
        return f"{self.min_k} <= k <= {self.max_k}"


class GoodnessEntry(BaseModel):
    """A known k-Turan-good graph with the theorem it comes from."""
    canonical: str = Field(..., description="Hex canonical code of the graph")
    graph: Graph
    k_condition: KCondition
    provenance: Provenance
    note: Optional[str] = None
    parent: Optional[str] = Field(None, description="Canonical code of the entry this one extends")

    class Config:
        arbitrary_types_allowed = True


class BalancingWitness(BaseModel):
    """Copy counts before and after one balancing move between two parts."""
    parts_before: list[int]
    parts_after: list[int]
    before: int
    after: int

    @property
    def non_decreasing(self) -> bool:
        return self.after >= self.before


class TypeColumn(BaseModel):
    """One induced type with the spanning counts of every gadget and of H."""
    type: Graph
    gadget_counts: list[int]
    h_count: int

    class Config:
        arbitrary_types_allowed = True


class TypeTable(BaseModel):
    """Induced m-vertex types containing H, with per-gadget spanning counts."""
    h: Graph
    k: Optional[int] = Field(None, description="Forbidden clique size; None means no clique filter")
    order: int
    gadgets: list[Graph] = []
    columns: list[TypeColumn] = []

    class Config:
        arbitrary_types_allowed = True


class Certificate(BaseModel):
    """Nonnegative rational combination of k-good gadgets dominating H on every type."""
    h: Graph
    k: int = Field(..., ge=3)
    gadgets: list[Graph]
    coefficients: list[Rational]
    provenance: list[str] = []

    class Config:
        arbitrary_types_allowed = True


class CertificateIdentity(BaseModel):
    """Both sides of the Turan equality as weights on multipartite types (keyed by graph6)."""
    lhs: dict[str, int]
    rhs: dict[str, Rational]


class InequalityCheck(BaseModel):
    type: Graph
    lhs: int
    rhs: Rational
    margin: Rational

    class Config:
        arbitrary_types_allowed = True


class EqualityCheck(BaseModel):
    type: Graph
    lhs: int
    rhs: Rational
    residual: Rational

    class Config:
        arbitrary_types_allowed = True


class VerificationReport(BaseModel):
    """Per-column results of checking a certificate."""
    verdict: Verdict
    k: int
    inequality_checks: list[InequalityCheck] = []
    equality_checks: list[EqualityCheck] = []
    failing_column: Optional[Graph] = None
    gadget_entries: list[GoodnessEntry] = []
    statement: str = ""

    class Config:
        arbitrary_types_allowed = True


class ColumnWeight(BaseModel):
    type: Graph
    relation: Literal["eq", "ge"]
    weight: Rational

    class Config:
        arbitrary_types_allowed = True


class InfeasibilityWitness(BaseModel):
    """Farkas multipliers proving no certificate exists over the gadget pool."""
    h: Graph
    k: int
    gadgets: list[Graph]
    weights: list[ColumnWeight]
    separating_columns: list[Graph]

    class Config:
        arbitrary_types_allowed = True


class ExtremalReport(BaseModel):
    """Exhaustive maximum of N(H, G) over n-vertex K_k-free graphs."""
    n: int
    k: int
    h: Graph
    maximum: int
    extremal_graphs: list[Graph]
    turan_value: int
    turan_is_max: bool
    turan_is_unique_max: bool
    search_space: Literal["maximal", "all"]
    classes_searched: int
    note: str = "Evidence at this n only; Turan-goodness concerns all sufficiently large n."

    class Config:
        arbitrary_types_allowed = True


class CommandConfig(BaseModel):
    """One CLI invocation; output is a pure function of this object."""
    subcommand: Literal[
        "count", "induced", "turan", "table", "certify", "find-cert", "extremal", "registry", "gen"
    ]
    action: Optional[str] = None
    inputs: dict[str, Optional[str]] = {}
    gadgets: list[str] = []
    k: Optional[int] = None
    n: Optional[int] = None
    parts: Optional[str] = None
    format: Optional[Literal["json", "csv", "text"]] = None
    maximal_only: bool = True
    induced: bool = False
    auto_pool: bool = False
    max_order: Optional[int] = None
    bound_at: list[int] = []
