"""Tiered representation of bounds too large to write down."""
from dataclasses import dataclass
from decimal import Decimal, Context, MAX_EMAX, MIN_EMIN, localcontext
from enum import Enum
from typing import Optional, Union

DEFAULT_BIT_CAP = 10**6

# Decimal context for the approximate tier: wide exponent range, no traps on overflow.
APPROX_CONTEXT = Context(prec=40, Emax=MAX_EMAX, Emin=MIN_EMIN)


class BoundTier(str, Enum):
    EXACT = "exact"  # payload is the bound
    LOG2_EXACT = "log2-exact"  # bound is 2**payload
    LOGLOG2_APPROX = "loglog2-approx"  # payload ~ log2(log2(bound))


@dataclass(frozen=True)
class BoundValue:
    tier: BoundTier
    payload: Union[int, Decimal]

    def log2_exact(self) -> Optional[int]:
        """Exact log2 of the bound when it is a power of two and known exactly."""
        if self.tier is BoundTier.LOG2_EXACT:
            return self.payload
        if self.tier is BoundTier.EXACT and self.payload > 0 and self.payload & (self.payload - 1) == 0:
            return self.payload.bit_length() - 1
        return None

    def loglog2(self) -> Decimal:
        """log2(log2(bound)), approximate, available in every tier."""
        if self.tier is BoundTier.LOGLOG2_APPROX:
            return self.payload
        if self.tier is BoundTier.LOG2_EXACT:
            return log2_int(self.payload)
        return log2_decimal(log2_int(self.payload))


@dataclass(frozen=True)
class Magnitude:
    """A non-negative integer known exactly, or only through its log2."""

    exact: Optional[int]
    log2: Decimal

    @classmethod
    def of(cls, value: int) -> "Magnitude":
        if value < 0:
            raise ValueError("magnitudes are non-negative")
        return cls(exact=value, log2=log2_int(value) if value else Decimal("-Infinity"))

    @classmethod
    def from_log2(cls, log2: Decimal) -> "Magnitude":
        return cls(exact=None, log2=log2)

    def exact_bits(self) -> Optional[int]:
        return self.exact.bit_length() if self.exact is not None else None


_LN2 = APPROX_CONTEXT.ln(Decimal(2))


def log2_decimal(x: Decimal) -> Decimal:
    with localcontext(APPROX_CONTEXT):
        if x <= 0:
            return Decimal("-Infinity")
        return x.ln() / _LN2


def log2_int(x: int) -> Decimal:
    """log2 of a positive integer from its top 64 bits; exact for powers of two."""
    if x <= 0:
        raise ValueError("log2 of a non-positive integer")
    bits = x.bit_length()
    if x & (x - 1) == 0:
        return Decimal(bits - 1)
    shift = max(bits - 64, 0)
    with localcontext(APPROX_CONTEXT):
        return Decimal(shift) + log2_decimal(Decimal(x >> shift))


def ceil_log2(x: int) -> int:
    """Smallest L with 2**L >= x, for x >= 1."""
    if x < 1:
        raise ValueError("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


def tier_for_int(value: int, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """Exact when it fits the cap, otherwise log2 or loglog2."""
    if value.bit_length() <= bit_cap:
        return BoundValue(BoundTier.EXACT, value)
    if value & (value - 1) == 0:
        return tier_for_log2(value.bit_length() - 1, bit_cap)
    return BoundValue(BoundTier.LOGLOG2_APPROX, log2_decimal(log2_int(value)))


def tier_for_log2(log2_value: int, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """Bound equal to 2**log2_value."""
    if log2_value + 1 <= bit_cap:
        return BoundValue(BoundTier.EXACT, 1 << log2_value)
    if log2_value.bit_length() <= bit_cap:
        return BoundValue(BoundTier.LOG2_EXACT, log2_value)
    return BoundValue(BoundTier.LOGLOG2_APPROX, log2_int(log2_value))


def approx_from_log2(log2_value: Decimal) -> BoundValue:
    """Approximate tier from an approximate log2 of the bound."""
    return BoundValue(BoundTier.LOGLOG2_APPROX, log2_decimal(log2_value))


def bound_from_magnitude(value: "Magnitude", bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    if value.exact is not None:
        return tier_for_int(value.exact, bit_cap)
    return approx_from_log2(value.log2)
