"""Buchberger's algorithm with a coefficient-growth trace."""
import heapq
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import structlog

from packages.core.errors import RingMismatchError, ResourceCapExceeded
from packages.core.fields.prime import PrimeField
from packages.core.groebner.division import CoefficientWatch, divide, s_pair_reduce
from packages.core.groebner.trace import GroebnerTrace, TraceStep
from packages.core.multipoly import monomial as mono
from packages.core.multipoly.polynomial import Polynomial

logger = structlog.get_logger()

DEFAULT_MAX_STEPS = 5000
DEFAULT_MAX_PAIRS = 200_000


@dataclass(frozen=True)
class GroebnerBasis:
    """Output of a Buchberger run.

    ``stopped_on_unit`` is set when the run ended as soon as a nonzero
    constant appeared; the basis then generates the whole ring but the
    remaining S-pairs were not processed.
    """

    basis: Tuple[Polynomial, ...]
    trace: GroebnerTrace
    stopped_on_unit: bool = False

    def contains_unit(self) -> bool:
        return any(g.is_nonzero_constant() for g in self.basis)

    @property
    def is_proper(self) -> bool:
        return not self.contains_unit()

    def leading_monomials(self) -> List[tuple]:
        return [g.leading_monomial() for g in self.basis]


def _prepare(generators: Sequence[Polynomial], normalize: bool) -> List[Polynomial]:
    polys = [g for g in generators if not g.is_zero()]
    if polys:
        ring = polys[0].ring
        for index, g in enumerate(polys):
            if g.ring != ring:
                raise RingMismatchError(f"generator {index} belongs to a different ring")
    if normalize:
        polys = [g.monic() for g in polys]
    return polys


def _pair_key(basis: List[Polynomial], i: int, j: int) -> Tuple[int, int, int]:
    lcm = mono.lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
    return sum(lcm), i, j


def buchberger(
    generators: Sequence[Polynomial],
    *,
    product_criterion: bool = False,
    interreduce: bool = False,
    normalize: Optional[bool] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    stop_on_unit: bool = False,
) -> GroebnerBasis:
    """Compute a Gröbner basis in degrevlex order.

    S-pairs are processed by increasing degree of the lcm of their initial
    monomials, ties broken by (i, j). Every nonzero remainder is appended
    fully reduced.

    Args:
        generators: Polynomials of one ring; zeros are dropped
        product_criterion: Skip pairs whose initial monomials are coprime
        interreduce: Return the reduced basis instead of the raw one
        normalize: Make elements monic; defaults to True over finite fields
            and False over Q so the trace shows genuine coefficient growth
        max_steps: Cap on basis extensions
        max_pairs: Cap on processed S-pairs
        stop_on_unit: Return as soon as a nonzero constant is in the basis

    Returns:
        GroebnerBasis with its trace

    Raises:
        ResourceCapExceeded: If a cap is hit before the criterion holds
        RingMismatchError: If generators live in different rings
    """
    nonzero = [g for g in generators if not g.is_zero()]
    field_ = nonzero[0].ring.field if nonzero else None
    rational = field_ is not None and not field_.is_finite
    if normalize is None:
        normalize = field_ is not None and field_.is_finite
    basis = _prepare(nonzero, normalize)

    trace = GroebnerTrace(
        field_label=field_.label() if field_ is not None else "-",
        rational=rational,
    )
    watch: Optional[CoefficientWatch] = trace.observe if rational else None
    if watch is not None:
        for g in basis:
            for c in g.coefficients():
                watch(c)
    trace.record_basis(basis)

    logger.debug(
        "buchberger.start",
        field=trace.field_label,
        generators=len(basis),
        product_criterion=product_criterion,
    )

    if stop_on_unit and any(g.is_nonzero_constant() for g in basis):
        logger.debug("buchberger.unit_found", step=0)
        return GroebnerBasis(tuple(basis), trace, stopped_on_unit=True)

    pairs: List[Tuple[int, int, int]] = []
    for j in range(len(basis)):
        for i in range(j):
            heapq.heappush(pairs, _pair_key(basis, i, j))

    while pairs:
        _, i, j = heapq.heappop(pairs)
        if product_criterion and mono.is_coprime(
            basis[i].leading_monomial(), basis[j].leading_monomial()
        ):
            trace.pairs_skipped += 1
            continue

        if trace.pairs_processed >= max_pairs:
            logger.warning("buchberger.cap_exceeded", limit="max_pairs", value=max_pairs)
            raise ResourceCapExceeded(
                f"S-pair cap of {max_pairs} reached", limit_name="max_pairs", limit=max_pairs
            )
        trace.pairs_processed += 1

        record = s_pair_reduce(i, j, basis, watch=watch)
        h = record.remainder
        extended = not h.is_zero()
        if extended:
            if trace.extensions >= max_steps:
                logger.warning("buchberger.cap_exceeded", limit="max_steps", value=max_steps)
                raise ResourceCapExceeded(
                    f"basis extension cap of {max_steps} reached",
                    limit_name="max_steps",
                    limit=max_steps,
                )
            if normalize:
                h = h.monic()
            basis.append(h)
            trace.extensions += 1
            trace.record_basis(basis)
            new = len(basis) - 1
            for k in range(new):
                heapq.heappush(pairs, _pair_key(basis, k, new))
            logger.debug(
                "buchberger.extend",
                step=trace.extensions,
                pair=(i, j),
                degree=h.total_degree(),
                basis_size=len(basis),
                max_p=trace.current_max_p,
            )

        trace.steps.append(
            TraceStep(
                step=trace.extensions,
                pair=(i, j),
                extended=extended,
                remainder_degree=h.total_degree(),
                max_p=trace.current_max_p,
                basis_size=len(basis),
            )
        )

        if extended and stop_on_unit and h.is_nonzero_constant():
            logger.debug("buchberger.unit_found", step=trace.extensions)
            return GroebnerBasis(tuple(basis), trace, stopped_on_unit=True)

    result = reduce_basis(basis) if interreduce else basis
    logger.debug(
        "buchberger.done",
        field=trace.field_label,
        basis_size=len(result),
        extensions=trace.extensions,
        pairs=trace.pairs_processed,
    )
    return GroebnerBasis(tuple(result), trace)


def reduce_basis(basis: Sequence[Polynomial]) -> List[Polynomial]:
    """Reduced Gröbner basis: minimal, monic and inter-reduced, sorted by initial monomial."""
    minimal: List[Polynomial] = []
    for index, g in enumerate(basis):
        lm = g.leading_monomial()
        redundant = False
        for other_index, other in enumerate(basis):
            if other_index == index:
                continue
            other_lm = other.leading_monomial()
            if mono.divides(other_lm, lm) and (other_lm != lm or other_index < index):
                redundant = True
                break
        if not redundant:
            minimal.append(g.monic())

    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1 :]
        lead = g.leading_term()
        tail = g - g.ring.term(lead.coeff, lead.mono)
        r = divide(tail, others).remainder if others else tail
        reduced.append(r + g.ring.term(lead.coeff, lead.mono))
    reduced.sort(key=lambda p: mono.degrevlex_key(p.leading_monomial()), reverse=True)
    return reduced


def is_proper(generators: Sequence[Polynomial], **options) -> bool:
    """False iff the Gröbner basis of the generators contains a nonzero constant."""
    options.setdefault("stop_on_unit", True)
    return buchberger(generators, **options).is_proper


def agrees_mod_p(generators: Sequence[Polynomial], p: int, **options) -> bool:
    """Compare properness of rational generators over Q and after reduction mod p.

    Raises:
        BadReductionPrimeError: If p divides a coefficient denominator
    """
    field_ = PrimeField(p)
    over_q = is_proper(generators, **options)
    over_p = is_proper([g.change_field(field_) for g in generators], **options)
    logger.debug("buchberger.compare_mod_p", p=p, over_q=over_q, over_p=over_p)
    return over_q == over_p
