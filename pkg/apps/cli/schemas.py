"""Pydantic schemas for the interchange documents.

Every document carries ``format: 1`` and a ``kind``. Big integers and field
elements are strings; rationals are always written ``"a/b"``.
"""
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter

FORMAT_VERSION = 1


class FieldDoc(BaseModel):
    """{"kind": "q"} | {"kind": "fp", "p": "5"} | {"kind": "fpk", "p": "3", "k": 2, "modulus": [...]}."""

    kind: Literal["q", "fp", "fpk"]
    p: Optional[str] = None
    k: Optional[int] = None
    modulus: Optional[List[str]] = None  # constant term first


class TypeDoc(BaseModel):
    r: int = Field(ge=1)
    s: int = Field(ge=1)
    n: int = Field(ge=1)


class TermDoc(BaseModel):
    c: str
    e: List[int]


class PolynomialDoc(BaseModel):
    """Terms in descending degrevlex order."""

    vars: int = Field(ge=0)
    terms: List[TermDoc] = Field(default_factory=list)


class IdealDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["ideal"] = "ideal"
    type: Optional[TypeDoc] = None
    field: FieldDoc
    variables: List[str]
    generators: List[PolynomialDoc]


class TraceStepDoc(BaseModel):
    step: int
    pair: List[int]
    extended: bool
    remainder_degree: int
    max_p: Optional[str] = None
    basis_size: int


class TraceDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["trace"] = "trace"
    type: Optional[TypeDoc] = None
    field: str
    rational: bool
    extensions: int
    pairs_processed: int
    pairs_skipped: int
    max_p_by_step: List[str] = Field(default_factory=list)
    exceptional_primes: Optional[List[str]] = None
    steps: List[TraceStepDoc] = Field(default_factory=list)


class GroebnerDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["groebner"] = "groebner"
    type: Optional[TypeDoc] = None
    field: FieldDoc
    variables: List[str]
    proper: bool
    stopped_on_unit: bool
    extensions: int
    basis: List[PolynomialDoc]
    agrees_mod_p: Optional[bool] = None


class FormulaDoc(BaseModel):
    """alpha is nested i -> j -> k."""

    format: Literal[1] = FORMAT_VERSION
    kind: Literal["formula"] = "formula"
    r: int = Field(ge=1)
    s: int = Field(ge=1)
    n: int = Field(ge=1)
    field: FieldDoc
    alpha: List[List[List[str]]]


class SearchOutcomeDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["search"] = "search"
    type: TypeDoc
    field: FieldDoc
    strategy: str
    emit: str
    status: str
    count: int
    nodes: int
    complete: bool
    formulas: List[FormulaDoc] = Field(default_factory=list)


class TowerDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["tower"] = "tower"
    type: TypeDoc
    p: str
    first_k: Optional[int] = None
    levels: List[SearchOutcomeDoc]


class CountsDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["counts"] = "counts"
    p: str
    nvars: int = Field(ge=0)
    counts: List[str]
    degree: Optional[int] = Field(default=None, ge=1)  # of the counted system
    equations: Optional[int] = Field(default=None, ge=1)


class ZetaDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["zeta"] = "zeta"
    p: str
    counts: List[str]
    series: List[str]
    r1: List[str]
    r2: List[str]
    predicted: List[str]
    bombieri: str
    within_bombieri: bool


class BoundValueDoc(BaseModel):
    tier: Literal["exact", "log2-exact", "loglog2-approx"]
    payload: str


class ObservedBoundDoc(BaseModel):
    step: int
    observed_log2: int
    bound: BoundValueDoc
    within: bool


class BoundReportDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["bounds"] = "bounds"
    type: TypeDoc
    mode: Literal["as-stated", "dube-consistent"]
    bit_cap: int
    variables: int
    exponent: int
    degree: BoundValueDoc
    q: BoundValueDoc
    dube: BoundValueDoc
    step_bound: BoundValueDoc
    charp_threshold: BoundValueDoc
    field_degree: BoundValueDoc
    bombieri: str
    observed: Optional[List[ObservedBoundDoc]] = None


class VerificationDoc(BaseModel):
    format: Literal[1] = FORMAT_VERSION
    kind: Literal["verification"] = "verification"
    type: TypeDoc
    field: FieldDoc
    passed: bool


# Documents that name a type [r, s, n], told apart by ``kind``.
TypedDoc = Annotated[Union[IdealDoc, GroebnerDoc, TraceDoc], Field(discriminator="kind")]
typed_doc_adapter: TypeAdapter = TypeAdapter(TypedDoc)
