"""Sparse multivariate polynomials with terms sorted in degrevlex order."""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from packages.core.errors import RingMismatchError
from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.multipoly import monomial as mono
from packages.core.multipoly.monomial import Monomial, degrevlex_key


class Term(NamedTuple):
    """A nonzero coefficient times a monomial."""

    coeff: FieldElement
    mono: Monomial


@dataclass(frozen=True)
class PolynomialRing:
    """F[x_0, ..., x_{nvars-1}] with degrevlex order, x_0 the largest variable."""

    field: CoefficientField
    nvars: int
    names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("nvars must be non-negative")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(self.nvars)))
        elif len(self.names) != self.nvars:
            raise ValueError(f"expected {self.nvars} variable names, got {len(self.names)}")

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value: Any) -> "Polynomial":
        return self.from_dict({mono.one(self.nvars): self.field(value)})

    def variable(self, index: int) -> "Polynomial":
        exps = [0] * self.nvars
        exps[index] = 1
        return self.from_dict({tuple(exps): self.field.one()})

    def variables(self) -> List["Polynomial"]:
        return [self.variable(i) for i in range(self.nvars)]

    def term(self, coeff: Any, m: Monomial) -> "Polynomial":
        return self.from_dict({tuple(m): self.field(coeff)})

    def from_dict(self, coeffs: Mapping[Monomial, Any]) -> "Polynomial":
        """Build from a monomial -> coefficient map, dropping zeros."""
        cleaned: Dict[Monomial, FieldElement] = {}
        for m, c in coeffs.items():
            if len(m) != self.nvars:
                raise RingMismatchError(f"monomial {m} has wrong length for {self.nvars} variables")
            c = self.field(c)
            if not c.is_zero():
                cleaned[tuple(m)] = c
        return Polynomial(self, cleaned)

    def from_terms(self, terms: Iterable[Tuple[Any, Monomial]]) -> "Polynomial":
        """Build from (coeff, monomial) pairs, summing repeated monomials."""
        acc: Dict[Monomial, FieldElement] = {}
        for c, m in terms:
            c = self.field(c)
            m = tuple(m)
            acc[m] = acc[m] + c if m in acc else c
        return self.from_dict(acc)

    def with_field(self, new_field: CoefficientField) -> "PolynomialRing":
        return PolynomialRing(new_field, self.nvars, self.names)


class Polynomial:
    """Immutable polynomial; ``terms`` is strictly decreasing in degrevlex order.

    The sorted term tuple is built once on construction, next to a monomial
    index used for coefficient lookup and addition.
    """

    __slots__ = ("ring", "_coeffs", "_terms")

    def __init__(
        self,
        ring: PolynomialRing,
        coeffs: Dict[Monomial, FieldElement],
        terms: Optional[Tuple[Term, ...]] = None,
    ):
        # coeffs must already be free of zeros; use PolynomialRing.from_dict otherwise.
        # terms, when given, must be coeffs in descending degrevlex order.
        self.ring = ring
        self._coeffs = coeffs
        if terms is None:
            ordered = sorted(coeffs, key=degrevlex_key, reverse=True)
            terms = tuple(Term(coeffs[m], m) for m in ordered)
        self._terms = terms

    @classmethod
    def _from_sorted(cls, ring: PolynomialRing, terms: Tuple[Term, ...]) -> "Polynomial":
        return cls(ring, {m: c for c, m in terms}, terms)

    # --- structure ---

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    def as_dict(self) -> Dict[Monomial, FieldElement]:
        return dict(self._coeffs)

    def coefficient(self, m: Monomial) -> FieldElement:
        return self._coeffs.get(tuple(m), self.ring.field.zero())

    def coefficients(self) -> Iterator[FieldElement]:
        return iter(self._coeffs.values())

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        """True for nonzero constants and for zero."""
        return all(not any(m) for m in self._coeffs)

    def is_nonzero_constant(self) -> bool:
        return bool(self._coeffs) and self.is_constant()

    def leading_term(self) -> Term:
        """in(f): the largest term. Undefined for zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no initial term")
        return self._terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term().mono

    def leading_coeff(self) -> FieldElement:
        return self.leading_term().coeff

    def total_degree(self) -> int:
        """Maximum total degree; -1 for zero."""
        return max((sum(m) for m in self._coeffs), default=-1)

    # --- arithmetic ---

    def _check_ring(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def _lift(self, other: Any) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._coeffs)
        for m, c in other._coeffs.items():
            if m in acc:
                s = acc[m] + c
                if s.is_zero():
                    del acc[m]
                else:
                    acc[m] = s
            else:
                acc[m] = c
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        # negation keeps the order
        return Polynomial._from_sorted(self.ring, tuple(Term(-c, m) for c, m in self._terms))

    def __sub__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Any) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        acc: Dict[Monomial, FieldElement] = {}
        for ma, ca in self._coeffs.items():
            for mb, cb in other._coeffs.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                c = ca * cb
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
        return Polynomial(self.ring, {m: c for m, c in acc.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_term(self, coeff: FieldElement, m: Monomial) -> "Polynomial":
        """Scale by the term coeff * m."""
        if coeff.is_zero():
            return self.ring.zero()
        # degrevlex is multiplicative, so the shifted terms stay sorted
        return Polynomial._from_sorted(
            self.ring,
            tuple(Term(c * coeff, tuple(x + y for x, y in zip(k, m))) for c, k in self._terms),
        )

    def scale(self, coeff: Any) -> "Polynomial":
        return self.mul_term(self.ring.field(coeff), mono.one(self.ring.nvars))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.leading_coeff().inverse())

    # --- evaluation and conversion ---

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        """Value at a point; coordinates must come from the coefficient field."""
        if len(point) != self.ring.nvars:
            raise RingMismatchError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        field_ = self.ring.field
        point = [field_(0) + x for x in point]
        total = field_.zero()
        for m, c in self._coeffs.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * (x**e)
            total = total + value
        return total

    def change_field(self, new_field: CoefficientField) -> "Polynomial":
        """Map every coefficient into ``new_field`` (reduction mod p, embedding)."""
        return self.ring.with_field(new_field).from_dict(self._coeffs)

    # --- comparison and display ---

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._coeffs == other._coeffs
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return self._coeffs == lifted._coeffs

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for c, m in self.terms:
            body = mono.render(m, self.ring.names)
            parts.append(str(c) if body == "1" else f"({c})*{body}")
        return " + ".join(parts)
