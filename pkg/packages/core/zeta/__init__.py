"""Point counting and zeta function reconstruction."""
from packages.core.zeta.counting import (
    DEFAULT_COUNT_BUDGET,
    PointCounts,
    count_points,
    count_points_async,
    count_sequence,
)
from packages.core.zeta.pipeline import ZetaReport, zeta_from_counts, zeta_of_system
from packages.core.zeta.reconstruction import (
    ZetaFunction,
    bombieri_bound,
    predict_counts,
    reconstruct_zeta,
)
from packages.core.zeta.series import ZetaSeries, series_from_counts

__all__ = [
    "DEFAULT_COUNT_BUDGET",
    "PointCounts",
    "ZetaFunction",
    "ZetaReport",
    "ZetaSeries",
    "bombieri_bound",
    "count_points",
    "count_points_async",
    "count_sequence",
    "predict_counts",
    "reconstruct_zeta",
    "series_from_counts",
    "zeta_from_counts",
    "zeta_of_system",
]
