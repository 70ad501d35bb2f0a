"""Point counts of affine systems over F_{p^k} by full enumeration."""
import asyncio
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import structlog

from packages.core.errors import (
    EnumerationBudgetExceeded,
    FieldMismatchError,
    InconsistentCountsError,
    RingMismatchError,
)
from packages.core.fields.extension import FiniteField, finite_field
from packages.core.fields.prime import PrimeField
from packages.core.multipoly.polynomial import Polynomial

logger = structlog.get_logger()

DEFAULT_COUNT_BUDGET = 10_000_000


@dataclass(frozen=True)
class PointCounts:
    """N_1, ..., N_K with N_k the number of F_{p^k}-points.

    Raises:
        InconsistentCountsError: If a count is out of range or smaller than
            the count over one of its subfields
    """

    p: int
    counts: Tuple[int, ...]
    nvars: int

    def __post_init__(self) -> None:
        for k, n_k in enumerate(self.counts, start=1):
            if n_k < 0 or n_k > self.p ** (k * self.nvars):
                raise InconsistentCountsError(f"N_{k} = {n_k} is outside 0..p^(k*n)")
        for k, n_k in enumerate(self.counts, start=1):
            for multiple in range(2 * k, len(self.counts) + 1, k):
                if self.counts[multiple - 1] < n_k:
                    raise InconsistentCountsError(
                        f"N_{multiple} < N_{k}, but F_p^{k} is a subfield of F_p^{multiple}"
                    )


def _base_field(system: Sequence[Polynomial]) -> Tuple[PrimeField, int]:
    if not system:
        raise ValueError("the system needs at least one polynomial to fix the ring")
    ring = system[0].ring
    for index, f in enumerate(system):
        if f.ring != ring:
            raise RingMismatchError(f"polynomial {index} belongs to a different ring")
    if not isinstance(ring.field, PrimeField):
        raise FieldMismatchError(f"point counting needs a system over F_p, got {ring.field.label()}")
    return ring.field, ring.nvars


def _count_slice(system: Sequence[Polynomial], field: FiniteField, first: int) -> int:
    """Zeros whose first coordinate is the element with enumeration index ``first``."""
    elements = list(field.elements())
    nvars = system[0].ring.nvars
    head = elements[first]
    count = 0
    for tail in itertools.product(elements, repeat=nvars - 1):
        point = (head,) + tail
        if all(f.evaluate(point).is_zero() for f in system):
            count += 1
    return count


def _lift(system: Sequence[Polynomial], k: int, budget: int) -> Tuple[List[Polynomial], FiniteField]:
    base, nvars = _base_field(system)
    field = finite_field(base.p, k)
    space = field.order**nvars
    if space > budget:
        raise EnumerationBudgetExceeded(
            f"{space} points over {field.label()} exceed the budget of {budget}",
            limit_name="count_budget",
            limit=budget,
        )
    return [f.change_field(field) for f in system], field


async def count_points_async(
    system: Sequence[Polynomial],
    k: int = 1,
    *,
    budget: int = DEFAULT_COUNT_BUDGET,
    threads: int = 2,
) -> int:
    """count_points with the first coordinate split across worker processes."""
    lifted, field = _lift(system, k, budget)
    if lifted[0].ring.nvars == 0:
        return _count_zero_vars(lifted)
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        tasks = [
            loop.run_in_executor(pool, _count_slice, lifted, field, index)
            for index in range(field.order)
        ]
        parts = await asyncio.gather(*tasks)
    return sum(parts)


def _count_zero_vars(system: Sequence[Polynomial]) -> int:
    return int(all(f.evaluate(()).is_zero() for f in system))


def count_points(
    system: Sequence[Polynomial],
    k: int = 1,
    *,
    budget: int = DEFAULT_COUNT_BUDGET,
    threads: int = 1,
) -> int:
    """Number of common zeros of ``system`` with coordinates in F_{p^k}.

    Args:
        system: Polynomials over F_p sharing one ring
        k: Extension degree
        budget: Largest number of points that may be enumerated
        threads: Worker processes; 1 counts inline

    Raises:
        EnumerationBudgetExceeded: If p^(k*n) exceeds the budget
        FieldMismatchError: If the system is not over a prime field
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if threads > 1:
        return asyncio.run(count_points_async(system, k, budget=budget, threads=threads))
    lifted, field = _lift(system, k, budget)
    if lifted[0].ring.nvars == 0:
        return _count_zero_vars(lifted)
    total = sum(_count_slice(lifted, field, index) for index in range(field.order))
    logger.debug("zeta.counted", field=field.label(), points=total)
    return total


def count_sequence(
    system: Sequence[Polynomial],
    kmax: int,
    *,
    budget: int = DEFAULT_COUNT_BUDGET,
    threads: int = 1,
) -> PointCounts:
    """N_1..N_kmax."""
    base, nvars = _base_field(system)
    counts = tuple(
        count_points(system, k, budget=budget, threads=threads) for k in range(1, kmax + 1)
    )
    return PointCounts(p=base.p, counts=counts, nvars=nvars)
