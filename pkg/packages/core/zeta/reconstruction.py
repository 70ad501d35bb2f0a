"""Zeta functions as rational functions R1/R2 recovered from a truncated series."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import structlog
import sympy

from packages.core.errors import InvalidZetaError, ReconstructionError
from packages.core.zeta.series import ZetaSeries

logger = structlog.get_logger()

_T = sympy.Symbol("T")


@dataclass(frozen=True)
class ZetaFunction:
    """Z = R1 / R2 with integer coefficients, constant term first and equal to 1."""

    r1: Tuple[int, ...]
    r2: Tuple[int, ...]

    def __post_init__(self) -> None:
        for name, poly in (("R1", self.r1), ("R2", self.r2)):
            if not poly or poly[0] != 1:
                raise InvalidZetaError(f"{name} must have constant term 1, got {list(poly)}")
            if any(not isinstance(c, int) for c in poly):
                raise InvalidZetaError(f"{name} must have integer coefficients")

    @property
    def degrees(self) -> Tuple[int, int]:
        return len(self.r1) - 1, len(self.r2) - 1


def _trim(coeffs: Sequence[int]) -> Tuple[int, ...]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _solve(rows: List[List[Fraction]], rhs: List[Fraction], unknowns: int) -> Optional[List[Fraction]]:
    """Gaussian elimination over Q; free unknowns are set to 0. None if inconsistent."""
    matrix = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots: List[int] = []
    rank = 0
    for col in range(unknowns):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        matrix[rank] = [x / lead for x in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col] != 0:
                factor = matrix[r][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[rank])]
        pivots.append(col)
        rank += 1
    if any(matrix[r][-1] != 0 for r in range(rank, len(matrix))):
        return None
    solution = [Fraction(0)] * unknowns
    for r, col in enumerate(pivots):
        solution[col] = matrix[r][-1]
    return solution


def _denominator_for(series: ZetaSeries, e1: int, e2: int, top: int) -> Optional[Tuple[int, ...]]:
    """R2 = 1 + b_1 T + ... + b_e2 T^e2 with coefficients e1+1..top of R2*Z zero."""
    z = series.coeffs

    def z_at(index: int) -> Fraction:
        return Fraction(z[index]) if index >= 0 else Fraction(0)

    rows = [[z_at(t - i) for i in range(1, e2 + 1)] for t in range(e1 + 1, top + 1)]
    rhs = [-z_at(t) for t in range(e1 + 1, top + 1)]
    solution = _solve(rows, rhs, e2)
    if solution is None or any(b.denominator != 1 for b in solution):
        return None
    return (1,) + tuple(int(b) for b in solution)


def _numerator_for(series: ZetaSeries, r2: Sequence[int], e1: int) -> Tuple[int, ...]:
    z = series.coeffs
    return tuple(
        sum(r2[i] * z[t - i] for i in range(min(t, len(r2) - 1) + 1)) for t in range(e1 + 1)
    )


def _cancel(r1: Tuple[int, ...], r2: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    p1 = sympy.Poly(list(reversed(r1)), _T, domain="ZZ")
    p2 = sympy.Poly(list(reversed(r2)), _T, domain="ZZ")
    common = p1.gcd(p2)
    if common.degree() <= 0:
        return r1, r2
    q1, q2 = p1.exquo(common), p2.exquo(common)
    out = []
    for q in (q1, q2):
        coeffs = [int(c) for c in reversed(q.all_coeffs())]
        sign = 1 if coeffs[0] > 0 else -1
        out.append(tuple(sign * c for c in coeffs))
    return out[0], out[1]


def reconstruct_zeta(
    series: ZetaSeries,
    d1: int,
    d2: int,
    *,
    cancel_common: bool = True,
) -> ZetaFunction:
    """Find R1, R2 with deg R1 <= d1, deg R2 <= d2 and R2 * Z = R1 mod T^(d1+d2+1).

    The smallest deg R2 is preferred, then the smallest deg R1. Unknowns the
    equations leave free are set to zero.

    Raises:
        ReconstructionError: If no integer pair fits the bounds
        ValueError: If the series is shorter than d1 + d2
    """
    if d1 < 0 or d2 < 0:
        raise ValueError("degree bounds must be non-negative")
    top = d1 + d2
    if series.truncation < top:
        raise ValueError(f"series has {series.truncation} terms, need at least d1+d2 = {top}")

    for e2 in range(d2 + 1):
        for e1 in range(d1 + 1):
            r2 = _denominator_for(series, e1, e2, top)
            if r2 is None:
                continue
            r1 = _numerator_for(series, r2, e1)
            r1, r2 = _trim(r1), _trim(r2)
            if cancel_common:
                r1, r2 = _cancel(r1, r2)
            zf = ZetaFunction(r1=r1, r2=r2)
            logger.debug("zeta.reconstructed", r1=list(zf.r1), r2=list(zf.r2))
            return zf

    raise ReconstructionError(
        f"no zeta function with deg R1 <= {d1} and deg R2 <= {d2} fits the series"
    )


def _power_sums(poly: Sequence[int], horizon: int) -> List[int]:
    """s_k for R = prod(1 - a_i T): s_k = -k c_k - sum_{i=1}^{k-1} c_i s_{k-i}."""
    c = list(poly) + [0] * max(0, horizon + 1 - len(poly))
    s = [0]
    for k in range(1, horizon + 1):
        s.append(-k * c[k] - sum(c[i] * s[k - i] for i in range(1, k)))
    return s


def predict_counts(zf: ZetaFunction, horizon: int) -> List[int]:
    """N_1..N_horizon determined by the zeta function.

    Raises:
        InvalidZetaError: If a predicted count is negative
    """
    s1 = _power_sums(zf.r1, horizon)
    s2 = _power_sums(zf.r2, horizon)
    counts = [s2[k] - s1[k] for k in range(1, horizon + 1)]
    for k, n_k in enumerate(counts, start=1):
        if n_k < 0:
            raise InvalidZetaError(f"predicted N_{k} = {n_k} is negative")
    return counts


def bombieri_bound(d: int, n: int, m: int) -> int:
    """(4d + 9)^(n + m): bound on deg R1 + deg R2 for m equations of degree <= d in n variables."""
    if min(d, n, m) < 1:
        raise ValueError("d, n and m must be positive")
    return (4 * d + 9) ** (n + m)
