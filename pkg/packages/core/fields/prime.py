"""Prime fields F_p for odd primes p."""
from dataclasses import dataclass
from typing import Any, Iterator

import sympy

from packages.core.errors import (
    BadReductionPrimeError,
    CharacteristicTwoError,
    FieldMismatchError,
    NotPrimeError,
)
from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.fields.rational import Rational


def check_odd_prime(p: int) -> None:
    """Raise unless p is an odd prime."""
    if p == 2:
        raise CharacteristicTwoError("characteristic 2 is not supported")
    if p < 2 or not sympy.isprime(p):
        raise NotPrimeError(f"{p} is not prime")


@dataclass(frozen=True)
class PrimeField(CoefficientField):
    """Integers modulo an odd prime p."""

    p: int

    def __post_init__(self) -> None:
        check_odd_prime(self.p)

    @property
    def characteristic(self) -> int:  # type: ignore[override]
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value: Any) -> "PrimeElement":
        if isinstance(value, PrimeElement):
            if value.field != self:
                raise FieldMismatchError(
                    f"cannot convert an element of {value.field.label()} to {self.label()}"
                )
            return value
        if isinstance(value, Rational):
            return self.reduce(value)
        if isinstance(value, FieldElement):
            raise FieldMismatchError(
                f"cannot convert an element of {value.field.label()} to {self.label()}"
            )
        return PrimeElement(int(value) % self.p, self)

    def reduce(self, x: Rational) -> "PrimeElement":
        """Image of a rational whose denominator is prime to p."""
        if x.den % self.p == 0:
            raise BadReductionPrimeError(
                f"denominator {x.den} is divisible by {self.p}", p=self.p
            )
        return PrimeElement(x.num * pow(x.den, -1, self.p) % self.p, self)

    def elements(self) -> Iterator["PrimeElement"]:
        for value in range(self.p):
            yield PrimeElement(value, self)

    def label(self) -> str:
        return f"F_{self.p}"


class PrimeElement(FieldElement):
    """Residue modulo p, stored as an int in {0, ..., p-1}."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def _add(self, other: "PrimeElement") -> "PrimeElement":
        return PrimeElement((self.value + other.value) % self.field.p, self.field)

    def _mul(self, other: "PrimeElement") -> "PrimeElement":
        return PrimeElement(self.value * other.value % self.field.p, self.field)

    def __neg__(self) -> "PrimeElement":
        return PrimeElement(-self.value % self.field.p, self.field)

    def _inverse(self) -> "PrimeElement":
        return PrimeElement(pow(self.value, -1, self.field.p), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def _key(self) -> tuple:
        return (self.field.p, self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"PrimeElement({self.value}, p={self.field.p})"

    def __str__(self) -> str:
        return str(self.value)
