"""Conversion between interchange documents and domain values."""
import sys
from decimal import Decimal
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Type, TypeVar

from pydantic import BaseModel

from apps.cli.schemas import (
    BoundValueDoc,
    CountsDoc,
    FieldDoc,
    FormulaDoc,
    IdealDoc,
    ObservedBoundDoc,
    PolynomialDoc,
    SearchOutcomeDoc,
    TermDoc,
    TowerDoc,
    TraceDoc,
    TraceStepDoc,
    TypeDoc,
    ZetaDoc,
    typed_doc_adapter,
)
from packages.core.bounds import BoundValue, ObservedBound
from packages.core.fields import (
    QQ,
    CoefficientField,
    ExtensionElement,
    ExtensionField,
    FieldElement,
    PrimeElement,
    PrimeField,
    Rational,
    finite_field,
)
from packages.core.groebner import GroebnerTrace, exceptional_primes
from packages.core.multipoly import Polynomial, PolynomialRing
from packages.core.search import EmitMode, SearchOutcome, TowerOutcome
from packages.core.sos import SosFormula, SosType
from packages.core.zeta import PointCounts, ZetaReport

DocT = TypeVar("DocT", bound=BaseModel)


# --- files ---


def read_doc(path: str, model: Type[DocT]) -> DocT:
    """Parse a JSON document; raises pydantic.ValidationError on malformed input."""
    return model.model_validate_json(Path(path).read_text(encoding="utf-8"))


def read_typed_doc(path: str):
    """Parse an ideal, groebner or trace document, dispatching on ``kind``."""
    return typed_doc_adapter.validate_json(Path(path).read_text(encoding="utf-8"))


def dump_doc(doc: BaseModel) -> str:
    return doc.model_dump_json(indent=2, exclude_none=True) + "\n"


def write_doc(doc: BaseModel, path: Optional[str]) -> None:
    """Write to ``path``, or to stdout when no path is given."""
    text = dump_doc(doc)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


# --- fields and elements ---


def field_to_doc(field: CoefficientField) -> FieldDoc:
    if isinstance(field, PrimeField):
        return FieldDoc(kind="fp", p=str(field.p))
    if isinstance(field, ExtensionField):
        return FieldDoc(
            kind="fpk", p=str(field.p), k=field.k, modulus=[str(c) for c in field.modulus]
        )
    return FieldDoc(kind="q")


def field_from_doc(doc: FieldDoc) -> CoefficientField:
    if doc.kind == "q":
        return QQ
    if doc.p is None:
        raise ValueError(f"field of kind {doc.kind} needs p")
    p = int(doc.p)
    if doc.kind == "fp":
        return PrimeField(p)
    if doc.k is None or doc.modulus is None:
        raise ValueError("field of kind fpk needs k and modulus")
    return ExtensionField(p, doc.k, tuple(int(c) for c in doc.modulus))


def element_to_str(x: FieldElement) -> str:
    if isinstance(x, ExtensionElement):
        return ",".join(str(c) for c in x.coeffs)
    if isinstance(x, PrimeElement):
        return str(x.value)
    return str(x)  # Rational: "a/b"


def element_from_str(field: CoefficientField, text: str) -> FieldElement:
    if isinstance(field, ExtensionField):
        return field.from_coefficients([int(c) for c in text.split(",")])
    if isinstance(field, PrimeField):
        return field(int(text))
    return Rational.parse(text)


# --- polynomials and ideals ---


def poly_to_doc(f: Polynomial) -> PolynomialDoc:
    return PolynomialDoc(
        vars=f.ring.nvars,
        terms=[TermDoc(c=element_to_str(c), e=list(m)) for c, m in f.terms],
    )


def poly_from_doc(doc: PolynomialDoc, ring: PolynomialRing) -> Polynomial:
    if doc.vars != ring.nvars:
        raise ValueError(f"polynomial has {doc.vars} variables, ring has {ring.nvars}")
    return ring.from_terms(
        (element_from_str(ring.field, term.c), tuple(term.e)) for term in doc.terms
    )


def type_to_doc(t: Optional[SosType]) -> Optional[TypeDoc]:
    return TypeDoc(r=t.r, s=t.s, n=t.n) if t is not None else None


def type_from_doc(doc: Optional[TypeDoc]) -> Optional[SosType]:
    return SosType(doc.r, doc.s, doc.n) if doc is not None else None


def ideal_to_doc(
    ring: PolynomialRing, generators: Sequence[Polynomial], t: Optional[SosType] = None
) -> IdealDoc:
    return IdealDoc(
        type=type_to_doc(t),
        field=field_to_doc(ring.field),
        variables=list(ring.names),
        generators=[poly_to_doc(g) for g in generators],
    )


def ideal_from_doc(doc: IdealDoc) -> Tuple[PolynomialRing, List[Polynomial], Optional[SosType]]:
    field = field_from_doc(doc.field)
    ring = PolynomialRing(field, len(doc.variables), tuple(doc.variables))
    generators = [poly_from_doc(g, ring) for g in doc.generators]
    return ring, generators, type_from_doc(doc.type)


# --- formulas and search ---


def formula_to_doc(f: SosFormula) -> FormulaDoc:
    return FormulaDoc(
        r=f.type.r,
        s=f.type.s,
        n=f.type.n,
        field=field_to_doc(f.field),
        alpha=[[[element_to_str(c) for c in col] for col in row] for row in f.alpha],
    )


def formula_from_doc(doc: FormulaDoc) -> SosFormula:
    field = field_from_doc(doc.field)
    t = SosType(doc.r, doc.s, doc.n)
    values = [[[element_from_str(field, c) for c in col] for col in row] for row in doc.alpha]
    return SosFormula.from_values(t, field, values)


def outcome_to_doc(
    outcome: SearchOutcome, field: CoefficientField, emit: EmitMode
) -> SearchOutcomeDoc:
    return SearchOutcomeDoc(
        type=type_to_doc(outcome.type),
        field=field_to_doc(field),
        strategy=outcome.strategy.value,
        emit=emit.value,
        status=outcome.status.value,
        count=outcome.count,
        nodes=outcome.nodes,
        complete=outcome.complete,
        formulas=[formula_to_doc(f) for f in outcome.formulas],
    )


def tower_to_doc(tower: TowerOutcome) -> TowerDoc:
    return TowerDoc(
        type=type_to_doc(tower.type),
        p=str(tower.p),
        first_k=tower.first_k,
        levels=[
            outcome_to_doc(outcome, finite_field(tower.p, k), EmitMode.FIRST)
            for k, outcome in tower.outcomes
        ],
    )


# --- point counts and zeta functions ---


def counts_to_doc(
    counts: PointCounts, degree: Optional[int] = None, equations: Optional[int] = None
) -> CountsDoc:
    return CountsDoc(
        p=str(counts.p),
        nvars=counts.nvars,
        counts=[str(n) for n in counts.counts],
        degree=degree,
        equations=equations,
    )


def counts_from_doc(doc: CountsDoc) -> PointCounts:
    return PointCounts(p=int(doc.p), counts=tuple(int(n) for n in doc.counts), nvars=doc.nvars)


def zeta_to_doc(report: ZetaReport) -> ZetaDoc:
    return ZetaDoc(
        p=str(report.counts.p),
        counts=[str(n) for n in report.counts.counts],
        series=[str(z) for z in report.series.coeffs],
        r1=[str(c) for c in report.zeta.r1],
        r2=[str(c) for c in report.zeta.r2],
        predicted=[str(n) for n in report.predicted],
        bombieri=str(report.bombieri),
        within_bombieri=report.within_bombieri,
    )


# --- traces and bounds ---


def trace_to_doc(trace: GroebnerTrace, t: Optional[SosType] = None) -> TraceDoc:
    return TraceDoc(
        type=type_to_doc(t),
        field=trace.field_label,
        rational=trace.rational,
        extensions=trace.extensions,
        pairs_processed=trace.pairs_processed,
        pairs_skipped=trace.pairs_skipped,
        max_p_by_step=[str(p) for p in trace.max_p_by_step],
        exceptional_primes=[str(p) for p in exceptional_primes(trace)] if trace.rational else None,
        steps=[
            TraceStepDoc(
                step=s.step,
                pair=list(s.pair),
                extended=s.extended,
                remainder_degree=s.remainder_degree,
                max_p=str(s.max_p) if s.max_p is not None else None,
                basis_size=s.basis_size,
            )
            for s in trace.steps
        ],
    )


def trace_from_doc(doc: TraceDoc) -> GroebnerTrace:
    """Rebuild the parts of a trace the bound comparison reads."""
    trace = GroebnerTrace(field_label=doc.field, rational=doc.rational)
    trace.max_p_by_step = [int(p) for p in doc.max_p_by_step]
    trace.extensions = doc.extensions
    trace.pairs_processed = doc.pairs_processed
    trace.pairs_skipped = doc.pairs_skipped
    return trace


def bound_to_doc(value: BoundValue) -> BoundValueDoc:
    payload = value.payload
    if isinstance(payload, Decimal):
        text = format(payload, ".12f")
    else:
        text = str(payload)
    return BoundValueDoc(tier=value.tier.value, payload=text)


def observed_to_doc(row: ObservedBound) -> ObservedBoundDoc:
    return ObservedBoundDoc(
        step=row.step,
        observed_log2=row.observed_log2,
        bound=bound_to_doc(row.bound),
        within=row.within,
    )
