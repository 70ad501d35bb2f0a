"""Count, expand, reconstruct and predict in one call."""
from dataclasses import dataclass
from typing import List, Sequence

import structlog

from packages.core.errors import ReconstructionError
from packages.core.multipoly.polynomial import Polynomial
from packages.core.zeta.counting import DEFAULT_COUNT_BUDGET, PointCounts, count_sequence
from packages.core.zeta.reconstruction import (
    ZetaFunction,
    bombieri_bound,
    predict_counts,
    reconstruct_zeta,
)
from packages.core.zeta.series import ZetaSeries, series_from_counts

logger = structlog.get_logger()


@dataclass(frozen=True)
class ZetaReport:
    counts: PointCounts
    series: ZetaSeries
    zeta: ZetaFunction
    predicted: List[int]
    bombieri: int

    @property
    def within_bombieri(self) -> bool:
        return sum(self.zeta.degrees) < self.bombieri


def zeta_from_counts(
    counts: PointCounts,
    d1: int,
    d2: int,
    *,
    degree: int,
    equations: int,
    cancel_common: bool = True,
) -> ZetaReport:
    """Reconstruct from already known counts and check the prediction reproduces them.

    Raises:
        InconsistentCountsError: If the counts give a non-integral series
        ReconstructionError: If no pair fits, or the pair does not reproduce the counts
    """
    truncation = len(counts.counts)
    if truncation < d1 + d2:
        raise ValueError(f"need at least d1+d2 = {d1 + d2} counts, got {truncation}")
    series = series_from_counts(counts, truncation)
    zeta = reconstruct_zeta(series, d1, d2, cancel_common=cancel_common)
    predicted = predict_counts(zeta, truncation)
    if tuple(predicted) != counts.counts:
        raise ReconstructionError(
            f"reconstructed zeta predicts {predicted}, counted {list(counts.counts)}"
        )
    bound = bombieri_bound(max(degree, 1), max(counts.nvars, 1), max(equations, 1))
    logger.info(
        "zeta.report",
        p=counts.p,
        counts=list(counts.counts),
        r1=list(zeta.r1),
        r2=list(zeta.r2),
    )
    return ZetaReport(counts=counts, series=series, zeta=zeta, predicted=predicted, bombieri=bound)


def zeta_of_system(
    system: Sequence[Polynomial],
    kmax: int,
    d1: int,
    d2: int,
    *,
    budget: int = DEFAULT_COUNT_BUDGET,
    threads: int = 1,
    cancel_common: bool = True,
) -> ZetaReport:
    """Count points over F_{p^k} for k = 1..kmax and recover the zeta function."""
    if kmax < d1 + d2:
        raise ValueError(f"kmax = {kmax} is smaller than d1+d2 = {d1 + d2}")
    counts = count_sequence(system, kmax, budget=budget, threads=threads)
    degree = max(f.total_degree() for f in system)
    return zeta_from_counts(
        counts, d1, d2, degree=degree, equations=len(system), cancel_common=cancel_common
    )
