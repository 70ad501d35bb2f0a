"""Extension fields F_{p^k} = F_p[t]/(modulus)."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator, Tuple, Union

import structlog

from packages.core.errors import FieldMismatchError, NotPrimeError
from packages.core.fields import gfpx
from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.fields.prime import PrimeElement, PrimeField, check_odd_prime
from packages.core.fields.rational import Rational

logger = structlog.get_logger()


@dataclass(frozen=True)
class ExtensionField(CoefficientField):
    """F_p[t] modulo a monic irreducible polynomial of degree k.

    ``modulus`` holds k+1 coefficients, constant term first, last entry 1.
    """

    p: int
    k: int
    modulus: Tuple[int, ...]

    def __post_init__(self) -> None:
        check_odd_prime(self.p)
        if self.k < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.k}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.k}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError("modulus coefficients must lie in {0, ..., p-1}")
        if not gfpx.is_irreducible(list(self.modulus), self.p):
            raise NotPrimeError(f"modulus {self.modulus} is reducible over F_{self.p}")

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.k

    def __call__(self, value: Any) -> "ExtensionElement":
        if isinstance(value, ExtensionElement):
            if value.field != self:
                raise FieldMismatchError(
                    f"cannot convert an element of {value.field.label()} to {self.label()}"
                )
            return value
        if isinstance(value, PrimeElement):
            if value.field.p != self.p:
                raise FieldMismatchError(
                    f"cannot embed {value.field.label()} into {self.label()}"
                )
            return self.from_coefficients([value.value])
        if isinstance(value, Rational):
            return self.from_coefficients([PrimeField(self.p).reduce(value).value])
        if isinstance(value, FieldElement):
            raise FieldMismatchError(
                f"cannot convert an element of {value.field.label()} to {self.label()}"
            )
        return self.from_coefficients([int(value)])

    def from_coefficients(self, coeffs: Any) -> "ExtensionElement":
        """Element c_0 + c_1 t + ... reduced modulo the field modulus."""
        reduced = gfpx.mod(gfpx.trim(list(coeffs), self.p), list(self.modulus), self.p)
        return ExtensionElement(_pad(reduced, self.k), self)

    def generator(self) -> "ExtensionElement":
        """The class of t."""
        return self.from_coefficients([0, 1])

    def elements(self) -> Iterator["ExtensionElement"]:
        for index in range(self.order):
            yield ExtensionElement(tuple(gfpx.from_index(index, self.k, self.p)), self)

    def label(self) -> str:
        return f"F_{self.p}^{self.k}"


def _pad(coeffs: list, k: int) -> Tuple[int, ...]:
    return tuple(coeffs) + (0,) * (k - len(coeffs))


class ExtensionElement(FieldElement):
    """Residue polynomial of degree < k, stored as k coefficients, constant first."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Tuple[int, ...], field: ExtensionField):
        self.coeffs = coeffs
        self.field = field

    def _add(self, other: "ExtensionElement") -> "ExtensionElement":
        p = self.field.p
        return ExtensionElement(
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)), self.field
        )

    def _mul(self, other: "ExtensionElement") -> "ExtensionElement":
        field = self.field
        p, k, modulus = field.p, field.k, field.modulus
        product = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        for d in range(2 * k - 2, k - 1, -1):
            c = product[d] % p
            if c:
                for i in range(k):
                    product[d - k + i] -= c * modulus[i]
        return ExtensionElement(tuple(c % p for c in product[:k]), field)

    def __neg__(self) -> "ExtensionElement":
        p = self.field.p
        return ExtensionElement(tuple(-c % p for c in self.coeffs), self.field)

    def _inverse(self) -> "ExtensionElement":
        p = self.field.p
        g, s, _ = gfpx.gcdext(gfpx.trim(list(self.coeffs), p), list(self.field.modulus), p)
        # g == [1] because the modulus is irreducible and self is nonzero
        return ExtensionElement(_pad(s, self.field.k), self.field)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _key(self) -> tuple:
        return (self.field.p, self.field.modulus, self.coeffs)

    def __repr__(self) -> str:
        return f"ExtensionElement({list(self.coeffs)}, {self.field.label()})"

    def __str__(self) -> str:
        terms = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            elif power == 1:
                terms.append("t" if c == 1 else f"{c}t")
            else:
                terms.append(f"t^{power}" if c == 1 else f"{c}t^{power}")
        return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=64)
def make_extension_field(p: int, k: int) -> ExtensionField:
    """Deterministic F_{p^k}: the modulus is the first monic irreducible of degree k
    when candidates are read as base-p numbers with the constant term as units digit.
    """
    check_odd_prime(p)
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    for index in range(p**k):
        candidate = gfpx.from_index(index, k, p) + [1]
        if gfpx.is_irreducible(candidate, p):
            logger.debug("fields.modulus_selected", p=p, k=k, modulus=candidate)
            return ExtensionField(p, k, tuple(candidate))
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


FiniteField = Union[PrimeField, ExtensionField]


def finite_field(p: int, k: int = 1) -> FiniteField:
    """F_p itself for k = 1, the deterministic extension otherwise."""
    if k == 1:
        return PrimeField(p)
    return make_extension_field(p, k)


def enumerate_field(field: FiniteField) -> list:
    """All p^k elements, residues in base-p positional order."""
    return list(field.elements())
