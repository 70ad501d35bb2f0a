"""Coefficient field abstraction shared by Q, F_p and F_{p^k}."""
from abc import ABC, abstractmethod
from typing import Any, Iterator, Optional

from packages.core.errors import FieldDivisionByZero, FieldMismatchError


class CoefficientField(ABC):
    """A field that polynomials can take coefficients in.

    Concrete fields are frozen dataclasses, so equality is structural and
    instances can be shared between workers.
    """

    characteristic: int

    @abstractmethod
    def __call__(self, value: Any) -> "FieldElement":
        """Convert an int (or a field element of a compatible field) into this field."""

    @property
    @abstractmethod
    def order(self) -> Optional[int]:
        """Number of elements, or None for an infinite field."""

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def elements(self) -> Iterator["FieldElement"]:
        """Yield every element in the deterministic enumeration order."""
        raise TypeError(f"{self!r} is infinite and cannot be enumerated")

    @abstractmethod
    def label(self) -> str:
        """Short human-readable name, e.g. ``Q``, ``F_5``, ``F_9``."""


class FieldElement(ABC):
    """An immutable element of a :class:`CoefficientField`.

    Binary operations accept another element of the same field or a plain int;
    elements of different fields raise :class:`FieldMismatchError`.
    """

    __slots__ = ()

    field: CoefficientField

    # --- primitives implemented by each field ---

    @abstractmethod
    def _add(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def _mul(self, other: "FieldElement") -> "FieldElement": ...

    @abstractmethod
    def __neg__(self) -> "FieldElement": ...

    @abstractmethod
    def _inverse(self) -> "FieldElement": ...

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def _key(self) -> Any: ...

    # --- generic operator plumbing ---

    def _coerce(self, other: Any) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine elements of {self.field.label()} and {other.field.label()}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field(other)
        return NotImplemented

    def __add__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise FieldDivisionByZero(f"zero has no inverse in {self.field.label()}")
        return self._inverse()

    def __truediv__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other.inverse())

    def __rtruediv__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._mul(self.inverse())

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = self.field.one()
        while exponent:
            if exponent & 1:
                result = result._mul(base)
            exponent >>= 1
            if exponent:
                base = base._mul(base)
        return result

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other: Any) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        return hash(self._key())

    def __bool__(self) -> bool:
        return not self.is_zero()
