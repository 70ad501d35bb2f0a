"""Truncated zeta series exp(sum N_k T^k / k) from point counts."""
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

from packages.core.errors import InconsistentCountsError
from packages.core.zeta.counting import PointCounts


@dataclass(frozen=True)
class ZetaSeries:
    """z_0, ..., z_K with z_0 = 1."""

    coeffs: Tuple[int, ...]

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]


def series_from_counts(counts: Union[PointCounts, Sequence[int]], truncation: int) -> ZetaSeries:
    """Exact coefficients via n z_n = sum_{k=1}^{n} N_k z_{n-k}.

    Raises:
        InconsistentCountsError: If some z_n is not an integer
        ValueError: If fewer than ``truncation`` counts are given
    """
    values = counts.counts if isinstance(counts, PointCounts) else tuple(counts)
    if truncation < 0:
        raise ValueError(f"truncation must be >= 0, got {truncation}")
    if len(values) < truncation:
        raise ValueError(f"need {truncation} counts, got {len(values)}")

    z = [1]
    for n in range(1, truncation + 1):
        total = sum(values[k - 1] * z[n - k] for k in range(1, n + 1))
        z_n, rest = divmod(total, n)
        if rest:
            raise InconsistentCountsError(
                f"z_{n} = {total}/{n} is not an integer; the counts are not point counts of a variety"
            )
        z.append(z_n)
    return ZetaSeries(tuple(z))
