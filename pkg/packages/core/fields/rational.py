"""Exact rationals over big integers and the P-measure of coefficient size."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NewType, Union

from packages.core.errors import FieldMismatchError
from packages.core.fields.base import CoefficientField, FieldElement

PMeasure = NewType("PMeasure", int)


@dataclass(frozen=True)
class RationalField(CoefficientField):
    """The field Q. All instances compare equal; use the module-level ``QQ``."""

    characteristic: int = 0

    def __call__(self, value: Any) -> "Rational":
        if isinstance(value, Rational):
            return value
        if isinstance(value, FieldElement):
            raise FieldMismatchError(f"cannot convert an element of {value.field.label()} to Q")
        return Rational(value)

    @property
    def order(self) -> None:
        return None

    def label(self) -> str:
        return "Q"


QQ = RationalField()


class Rational(FieldElement):
    """Canonical fraction num/den with den >= 1 and gcd(|num|, den) = 1.

    Zero is stored as 0/1.
    """

    __slots__ = ("_value",)

    field = QQ

    def __init__(self, num: Union[int, Fraction, str] = 0, den: int = 1):
        if isinstance(num, Fraction):
            value = num if den == 1 else num / den
        else:
            value = Fraction(num, den) if den != 1 else Fraction(num)
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Rational is immutable")

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """Parse ``"a/b"`` or ``"a"``."""
        return cls(Fraction(text.strip()))

    @property
    def num(self) -> int:
        return self._value.numerator

    @property
    def den(self) -> int:
        return self._value.denominator

    def as_fraction(self) -> Fraction:
        return self._value

    def _add(self, other: "Rational") -> "Rational":
        return Rational(self._value + other._value)

    def _mul(self, other: "Rational") -> "Rational":
        return Rational(self._value * other._value)

    def __neg__(self) -> "Rational":
        return Rational(-self._value)

    def _inverse(self) -> "Rational":
        return Rational(1 / self._value)

    def is_zero(self) -> bool:
        return self._value == 0

    def _key(self) -> Fraction:
        return self._value

    def __lt__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value < other._value

    def __abs__(self) -> "Rational":
        return Rational(abs(self._value))

    def __repr__(self) -> str:
        return f"Rational({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def p_measure(x: Rational) -> PMeasure:
    """P(a/b) = max(|a|, |b|) of the canonical form; P(0) = 1."""
    return PMeasure(max(abs(x.num), x.den))
