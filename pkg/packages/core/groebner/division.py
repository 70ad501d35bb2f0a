"""Multivariate division and S-pair reduction."""
import heapq
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from packages.core.errors import RingMismatchError, ZeroDivisorPolynomialError
from packages.core.fields.base import FieldElement
from packages.core.multipoly import monomial as mono
from packages.core.multipoly.monomial import Monomial
from packages.core.multipoly.polynomial import Polynomial, Term

CoefficientWatch = Callable[[FieldElement], None]


@dataclass(frozen=True)
class StandardExpression:
    """f = sum(term_u * G[index_u]) + remainder."""

    dividend: Polynomial
    divisors: Tuple[Polynomial, ...]
    quotients: Tuple[Tuple[Term, int], ...]
    remainder: Polynomial

    def reconstruct(self) -> Polynomial:
        total = self.remainder
        for term, index in self.quotients:
            total = total + self.divisors[index].mul_term(term.coeff, term.mono)
        return total

    def quotient_polynomials(self) -> List[Polynomial]:
        """The quotient of each divisor, summed over its terms."""
        ring = self.dividend.ring
        grouped: List[List[Tuple[FieldElement, Monomial]]] = [[] for _ in self.divisors]
        for term, index in self.quotients:
            grouped[index].append((term.coeff, term.mono))
        return [ring.from_terms(terms) for terms in grouped]


@dataclass(frozen=True)
class SPairRecord:
    """S-polynomial m_ji*g_i - m_ij*g_j of a basis pair and its remainder h_ij."""

    i: int
    j: int
    m_ij: Term
    m_ji: Term
    s_poly: Polynomial
    remainder: Polynomial

    @property
    def reduces_to_zero(self) -> bool:
        return self.remainder.is_zero()


def _heap_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    # smallest heap key is the largest monomial in degrevlex
    return -sum(m), tuple(reversed(m))


def _check_divisors(f: Polynomial, divisors: Sequence[Polynomial]) -> None:
    for index, g in enumerate(divisors):
        if g.is_zero():
            raise ZeroDivisorPolynomialError(f"divisor {index} is the zero polynomial")
        if g.ring != f.ring:
            raise RingMismatchError(f"divisor {index} belongs to a different ring")


def divide(
    f: Polynomial,
    divisors: Sequence[Polynomial],
    watch: Optional[CoefficientWatch] = None,
) -> StandardExpression:
    """Divide f by an ordered list of polynomials.

    At each step the largest remaining term of the working polynomial is
    examined. If the initial monomial of some divisor divides it, the first
    such divisor is used to cancel it; otherwise the term moves to the
    remainder. The remainder is therefore fully reduced.

    Args:
        f: Dividend
        divisors: Nonzero polynomials of the same ring
        watch: Called with every coefficient the division produces

    Returns:
        StandardExpression with quotient terms in the order they were used

    Raises:
        ZeroDivisorPolynomialError: If a divisor is zero
        RingMismatchError: If a divisor lives in another ring
    """
    divisors = tuple(divisors)
    _check_divisors(f, divisors)
    leads = [g.leading_term() for g in divisors]
    inverses = [lt.coeff.inverse() for lt in leads]
    tails = [g.terms[1:] for g in divisors]

    work: Dict[Monomial, FieldElement] = f.as_dict()
    heap = [(_heap_key(m), m) for m in work]
    heapq.heapify(heap)
    remainder: Dict[Monomial, FieldElement] = {}
    quotients: List[Tuple[Term, int]] = []

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for index, lead in enumerate(leads):
            if mono.divides(lead.mono, m):
                break
        else:
            remainder[m] = c
            continue

        q_coeff = c * inverses[index]
        q_mono = tuple(a - b for a, b in zip(m, lead.mono))
        quotients.append((Term(q_coeff, q_mono), index))
        if watch is not None:
            watch(q_coeff)
        for t_coeff, t_mono in tails[index]:
            target = tuple(a + b for a, b in zip(t_mono, q_mono))
            delta = t_coeff * q_coeff
            if target in work:
                updated = work[target] - delta
                if updated.is_zero():
                    del work[target]
                else:
                    work[target] = updated
                    if watch is not None:
                        watch(updated)
            else:
                work[target] = -delta
                heapq.heappush(heap, (_heap_key(target), target))
                if watch is not None:
                    watch(delta)

    return StandardExpression(
        dividend=f,
        divisors=divisors,
        quotients=tuple(quotients),
        remainder=Polynomial(f.ring, remainder),
    )


def s_polynomial(g_i: Polynomial, g_j: Polynomial) -> Tuple[Term, Term, Polynomial]:
    """Return (m_ij, m_ji, m_ji*g_i - m_ij*g_j).

    m_ij = in(g_i) / gcd(in(g_i), in(g_j)) where the gcd is taken monic, so
    m_ij carries the leading coefficient of g_i.
    """
    lt_i, lt_j = g_i.leading_term(), g_j.leading_term()
    common = mono.gcd(lt_i.mono, lt_j.mono)
    m_ij = Term(lt_i.coeff, mono.divide(lt_i.mono, common))
    m_ji = Term(lt_j.coeff, mono.divide(lt_j.mono, common))
    s_poly = g_i.mul_term(m_ji.coeff, m_ji.mono) - g_j.mul_term(m_ij.coeff, m_ij.mono)
    return m_ij, m_ji, s_poly


def s_pair_reduce(
    i: int,
    j: int,
    basis: Sequence[Polynomial],
    watch: Optional[CoefficientWatch] = None,
) -> SPairRecord:
    """S-polynomial of basis[i], basis[j] divided by the whole basis."""
    g_i, g_j = basis[i], basis[j]
    if g_i.is_zero() or g_j.is_zero():
        raise ZeroDivisorPolynomialError(f"pair ({i}, {j}) contains the zero polynomial")
    m_ij, m_ji, s_poly = s_polynomial(g_i, g_j)
    if watch is not None:
        for c in s_poly.coefficients():
            watch(c)
    expression = divide(s_poly, basis, watch=watch)
    return SPairRecord(
        i=i, j=j, m_ij=m_ij, m_ji=m_ji, s_poly=s_poly, remainder=expression.remainder
    )
