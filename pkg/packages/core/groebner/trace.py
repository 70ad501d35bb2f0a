"""Per-step record of a Buchberger run and the statistics read from it."""
from dataclasses import dataclass, field
from typing import List, Optional, Set, Tuple

import sympy

from packages.core.errors import TraceUnavailableError
from packages.core.fields.rational import Rational, p_measure
from packages.core.multipoly.polynomial import Polynomial


@dataclass(frozen=True)
class TraceStep:
    """One processed S-pair."""

    step: int  # basis extensions so far, this one included
    pair: Tuple[int, int]
    extended: bool
    remainder_degree: int  # -1 when the remainder is zero
    max_p: Optional[int]
    basis_size: int


@dataclass
class GroebnerTrace:
    """Everything a Buchberger run records.

    ``max_p_by_step[m]`` is the largest P-measure over the coefficients of
    the basis after m extensions (rational runs only).
    """

    field_label: str
    rational: bool
    steps: List[TraceStep] = field(default_factory=list)
    max_p_by_step: List[int] = field(default_factory=list)
    pairs_processed: int = 0
    pairs_skipped: int = 0
    extensions: int = 0
    integers_seen: Set[int] = field(default_factory=set, repr=False)

    def observe(self, c: Rational) -> None:
        """Remember the numerator and denominator of a coefficient."""
        num = abs(c.num)
        if num > 1:
            self.integers_seen.add(num)
        if c.den > 1:
            self.integers_seen.add(c.den)

    def record_basis(self, basis: List[Polynomial]) -> None:
        if self.rational:
            current = max((basis_max_p(g) for g in basis), default=1)
            previous = self.max_p_by_step[-1] if self.max_p_by_step else 1
            self.max_p_by_step.append(max(current, previous))

    @property
    def current_max_p(self) -> Optional[int]:
        if not self.rational:
            return None
        return self.max_p_by_step[-1] if self.max_p_by_step else 1


def basis_max_p(g: Polynomial) -> int:
    """Largest P-measure over the coefficients of a rational polynomial."""
    return max((p_measure(c) for c in g.coefficients()), default=1)


def _require_rational(trace: GroebnerTrace) -> None:
    if not trace.rational:
        raise TraceUnavailableError(
            f"the P-measure is only defined for runs over Q, not {trace.field_label}"
        )


def trace_max_p(trace: GroebnerTrace) -> int:
    """Maximum P over all coefficients of all basis candidates at any step.

    Raises:
        TraceUnavailableError: If the run was over a finite field
    """
    _require_rational(trace)
    return max(trace.max_p_by_step, default=1)


def exceptional_primes(trace: GroebnerTrace) -> List[int]:
    """Primes dividing a numerator or denominator of any coefficient the run produced.

    For an odd prime outside this list no initial coefficient vanishes mod p,
    so properness over F_p matches properness over Q.
    """
    _require_rational(trace)
    primes: Set[int] = set()
    for value in trace.integers_seen:
        primes.update(sympy.primefactors(value))
    return sorted(primes)
