"""Closed-form bounds on degrees, Buchberger steps, coefficient growth and field degrees."""
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from functools import cached_property
from typing import List, Optional, Union

import structlog

from packages.core.bounds.values import (
    APPROX_CONTEXT,
    DEFAULT_BIT_CAP,
    BoundTier,
    BoundValue,
    Magnitude,
    approx_from_log2,
    ceil_log2,
    log2_decimal,
    log2_int,
    tier_for_int,
    tier_for_log2,
)
from packages.core.errors import TraceUnavailableError
from packages.core.groebner.trace import GroebnerTrace
from packages.core.sos.ideal import SosType

logger = structlog.get_logger()

# Beyond this many bits a Decimal power of two would leave the exponent range.
_DECIMAL_EXP_LIMIT = Decimal(10) ** 15
# Above this q the offsets in 3*2^q - 2 and 5*2^q - 3 are below Decimal precision.
_SMALL_Q = 256

_LOG2_3 = log2_decimal(Decimal(3))
_LOG2_5 = log2_decimal(Decimal(5))
_LOG2_17 = log2_decimal(Decimal(17))


class BoundMode(str, Enum):
    """Which exponent variable the degree bound uses: n, or the variable count rsn."""

    AS_STATED = "as-stated"
    DUBE_CONSISTENT = "dube-consistent"


def _pow2_decimal(log2: Decimal) -> Decimal:
    with localcontext(APPROX_CONTEXT):
        return Decimal(2) ** log2


def binomial_magnitude(v: int, x: Magnitude, bit_cap: int = DEFAULT_BIT_CAP) -> Magnitude:
    """C(v + x, v) for a small v and a possibly huge x."""
    if x.exact is not None and v * max(x.exact.bit_length(), 1) <= bit_cap:
        return Magnitude.of(math.comb(v + x.exact, v))
    with localcontext(APPROX_CONTEXT):
        log2 = v * x.log2 - log2_int(math.factorial(v))
    return Magnitude.from_log2(log2)


@dataclass(frozen=True)
class BoundParams:
    """Parameters of the characteristic threshold for type [r, s, n].

    v = rsn variables; e = n (as-stated) or rsn (dube-consistent);
    D = 2 * 4^(2^(e-1)) = 2^(1 + 2^e) is the degree bound of the basis;
    q = C(v + 2D, v) and m = C(v + D, v).
    """

    r: int
    s: int
    n: int
    mode: BoundMode = BoundMode.AS_STATED
    forced_q: Optional[int] = None
    bit_cap: int = DEFAULT_BIT_CAP

    @classmethod
    def for_type(cls, t: SosType, **kwargs) -> "BoundParams":
        return cls(t.r, t.s, t.n, **kwargs)

    @property
    def v(self) -> int:
        return self.r * self.s * self.n

    @property
    def e(self) -> int:
        return self.n if self.mode is BoundMode.AS_STATED else self.v

    @cached_property
    def degree(self) -> Magnitude:
        log2 = 1 + (1 << self.e)
        if log2 + 1 <= self.bit_cap:
            return Magnitude.of(1 << log2)
        return Magnitude.from_log2(Decimal(log2))

    @cached_property
    def q(self) -> Magnitude:
        if self.forced_q is not None:
            return Magnitude.of(self.forced_q)
        d = self.degree
        doubled = (
            Magnitude.of(2 * d.exact) if d.exact is not None else Magnitude.from_log2(d.log2 + 1)
        )
        return binomial_magnitude(self.v, doubled, self.bit_cap)

    @cached_property
    def m(self) -> Magnitude:
        return binomial_magnitude(self.v, self.degree, self.bit_cap)


def dube_bound(d: int, v: int, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """2 * (d^2/2 + d)^(2^(v-1)), floored when d is odd.

    Degree bound for a Gröbner basis of an ideal generated in degree <= d
    in v variables.
    """
    if d < 1 or v < 1:
        raise ValueError("d and v must be positive")
    exponent = 1 << (v - 1)
    product = d * (d + 2)
    if product % 2 == 0:
        base = product // 2
        if base & (base - 1) == 0:
            return tier_for_log2(1 + (base.bit_length() - 1) * exponent, bit_cap)
        with localcontext(APPROX_CONTEXT):
            estimate = 1 + exponent * log2_int(base)
        if estimate > bit_cap + 64:
            return approx_from_log2(estimate)
        return tier_for_int(2 * base**exponent, bit_cap)
    with localcontext(APPROX_CONTEXT):
        estimate = 1 + exponent * (log2_int(product) - 1)
    if estimate > bit_cap + 64:
        return approx_from_log2(estimate)
    return tier_for_int((2 * product**exponent) >> exponent, bit_cap)


def division_q(v: int, d: int) -> int:
    """Number of monomials of degree <= d in v variables."""
    return math.comb(v + d, d)


def division_p_bound(p_measure: int, v: int, d: int, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """2^(3*2^p - 2) * M^(5*2^p - 3) with p = C(v + d, d).

    Bounds P of the remainder when a polynomial of degree <= d whose
    coefficients have P <= M is divided by polynomials with P <= M.
    """
    if p_measure < 1:
        raise ValueError("the P-measure is at least 1")
    p = division_q(v, d)
    power_of_two = p_measure & (p_measure - 1) == 0
    if p > bit_cap:
        with localcontext(APPROX_CONTEXT):
            return BoundValue(
                BoundTier.LOGLOG2_APPROX,
                p + log2_decimal(3 + 5 * log2_int(p_measure)),
            )
    c = 3 * (1 << p) - 2
    a = 5 * (1 << p) - 3
    if power_of_two:
        return tier_for_log2(c + a * (p_measure.bit_length() - 1), bit_cap)
    with localcontext(APPROX_CONTEXT):
        estimate = c + a * log2_int(p_measure)
    if estimate > bit_cap + 64:
        return approx_from_log2(estimate)
    return tier_for_int((1 << c) * p_measure**a, bit_cap)


def buchberger_step_bound(params: BoundParams) -> BoundValue:
    """C(v + D, D): monomials of degree <= D, hence the most basis extensions possible."""
    m = params.m
    if m.exact is not None:
        return tier_for_int(m.exact, params.bit_cap)
    return approx_from_log2(m.log2)


def geometric_sum(a: int, m: int) -> int:
    """sum_{i=0}^{m} a^i for an integer a >= 1, via (a^(m+1) - 1) / (a - 1)."""
    if a < 1 or m < 0:
        raise ValueError("need a >= 1 and m >= 0")
    if a == 1:
        return m + 1
    return (a ** (m + 1) - 1) // (a - 1)


def growth_log2_closed_form(q: int, m: int) -> int:
    """(3*2^q - 2) * sum_{i=0}^{m} (5*2^q - 3)^i, exactly."""
    c = 3 * (1 << q) - 2
    a = 5 * (1 << q) - 3
    return c * geometric_sum(a, m)


def growth_log2_by_recursion(q: int, m: int) -> int:
    """log2 of the coefficient-growth recursion a_k = 2^c * a_{k-1}^a, a_0 = 1.

    Iterates m + 1 times, which is the step the closed form at m describes.
    """
    c = 3 * (1 << q) - 2
    a = 5 * (1 << q) - 3
    log2 = 0
    for _ in range(m + 1):
        log2 = c + a * log2
    return log2


def _log2_of_a_and_c(q: Magnitude) -> tuple:
    """(log2 a, log2 c) as Decimals, or (None, log2 log2 a) when a is beyond Decimal range."""
    with localcontext(APPROX_CONTEXT):
        if q.exact is not None and q.exact <= _SMALL_Q:
            a = 5 * (1 << q.exact) - 3
            c = 3 * (1 << q.exact) - 2
            return log2_int(a), log2_int(c)
        if q.exact is not None:
            q_dec = Decimal(q.exact)
        elif q.log2 < _DECIMAL_EXP_LIMIT:
            q_dec = _pow2_decimal(q.log2)
        else:
            return None, q.log2
        return q_dec + _LOG2_5, q_dec + _LOG2_3


def growth_bound_for(q: Magnitude, m: Magnitude, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """Bound 2^L on P after m basis extensions, L = (3*2^q-2) * sum_{i<=m} (5*2^q-3)^i."""
    la, lc = _log2_of_a_and_c(q)
    if la is not None and q.exact is not None and q.exact <= bit_cap and m.exact is not None:
        with localcontext(APPROX_CONTEXT):
            estimate = lc + m.exact * la
        if estimate <= bit_cap + 64:
            exact = growth_log2_closed_form(q.exact, m.exact)
            if exact.bit_length() <= bit_cap:
                return tier_for_log2(exact, bit_cap)
            return BoundValue(BoundTier.LOGLOG2_APPROX, log2_int(exact))

    with localcontext(APPROX_CONTEXT):
        if la is None:
            # lc is log2 log2 a here
            m_log2 = m.log2 if m.exact is None else log2_int(max(m.exact, 1))
            return BoundValue(BoundTier.LOGLOG2_APPROX, m_log2 + lc)
        if m.exact is not None:
            return BoundValue(BoundTier.LOGLOG2_APPROX, log2_decimal(lc + m.exact * la))
        if m.log2 < _DECIMAL_EXP_LIMIT:
            return BoundValue(
                BoundTier.LOGLOG2_APPROX, log2_decimal(lc + _pow2_decimal(m.log2) * la)
            )
        return BoundValue(BoundTier.LOGLOG2_APPROX, m.log2 + log2_decimal(la))


def growth_bound(params: BoundParams, m: int) -> BoundValue:
    """Coefficient-growth bound at step m for the ideal of type [r, s, n]."""
    if m < 0:
        raise ValueError("step must be >= 0")
    return growth_bound_for(params.q, Magnitude.of(m), params.bit_cap)


def charp_threshold(params: BoundParams) -> BoundValue:
    """Growth bound at the Buchberger step bound.

    Primes above this value behave like characteristic 0 for the formula
    existence question.
    """
    value = growth_bound_for(params.q, params.m, params.bit_cap)
    logger.debug(
        "bounds.charp_threshold",
        type=f"[{params.r},{params.s},{params.n}]",
        mode=params.mode.value,
        tier=value.tier.value,
    )
    return value


def field_degree_bound(t: SosType, bit_cap: int = DEFAULT_BIT_CAP) -> BoundValue:
    """2 * 17^(rsn + r^2 s^2): some F_{p^k} with k below this carries a formula if any field does."""
    exponent = t.variables + (t.r * t.s) ** 2
    with localcontext(APPROX_CONTEXT):
        estimate = 1 + exponent * _LOG2_17
    if estimate > bit_cap + 64:
        return approx_from_log2(estimate)
    return tier_for_int(2 * 17**exponent, bit_cap)


@dataclass(frozen=True)
class ObservedBound:
    """Observed coefficient size against the bound after ``step`` extensions."""

    step: int
    observed_log2: int  # ceil(log2(max P))
    bound: BoundValue
    within: bool


def _within(observed_log2: int, bound: BoundValue) -> bool:
    exact = bound.log2_exact()
    if exact is not None:
        return observed_log2 <= exact
    if bound.tier is BoundTier.EXACT:
        return observed_log2 <= bound.payload.bit_length()
    if observed_log2 <= 1:
        return True
    return log2_int(observed_log2) <= bound.payload


def observed_vs_bound(
    trace: GroebnerTrace,
    q: Union[int, Magnitude],
    bit_cap: int = DEFAULT_BIT_CAP,
) -> List[ObservedBound]:
    """Per-step log2 of the observed max P next to the growth bound for parameter q.

    Args:
        trace: Trace of a run over Q
        q: Growth parameter, an int or the ``q`` of some BoundParams
        bit_cap: Largest exact bound kept, in bits

    Raises:
        TraceUnavailableError: If the run was not over Q
    """
    if not trace.rational:
        raise TraceUnavailableError(f"no P-measure for a run over {trace.field_label}")
    q_mag = q if isinstance(q, Magnitude) else Magnitude.of(q)
    rows = []
    for step, max_p in enumerate(trace.max_p_by_step):
        bound = growth_bound_for(q_mag, Magnitude.of(step), bit_cap)
        observed = ceil_log2(max_p)
        rows.append(
            ObservedBound(
                step=step, observed_log2=observed, bound=bound, within=_within(observed, bound)
            )
        )
    return rows
