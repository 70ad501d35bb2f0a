"""Search the tower F_p, F_{p^2}, ... for the first field carrying a formula."""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import structlog

from packages.core.fields.extension import finite_field
from packages.core.search.backtracking import run_search
from packages.core.search.schemas import (
    DEFAULT_NODE_BUDGET,
    EmitMode,
    SearchConfig,
    SearchOutcome,
    SearchStatus,
    SearchStrategy,
)
from packages.core.sos.ideal import SosType

logger = structlog.get_logger()


@dataclass
class TowerOutcome:
    """Per-degree outcomes up to the first success.

    A run that finds nothing says nothing about the algebraic closure.
    """

    type: SosType
    p: int
    outcomes: List[Tuple[int, SearchOutcome]] = field(default_factory=list)

    @property
    def first_k(self) -> Optional[int]:
        for k, outcome in self.outcomes:
            if outcome.status is SearchStatus.FOUND:
                return k
        return None


def search_tower(
    t: SosType,
    p: int,
    kmax: int,
    *,
    strategy: SearchStrategy = SearchStrategy.BACKTRACKING,
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> TowerOutcome:
    """Search F_{p^k} for k = 1..kmax, stopping at the first k with a formula."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    tower = TowerOutcome(type=t, p=p)
    for k in range(1, kmax + 1):
        cfg = SearchConfig(
            type=t,
            field=finite_field(p, k),
            strategy=strategy,
            emit=EmitMode.FIRST,
            node_budget=node_budget,
            threads=threads,
        )
        outcome = run_search(cfg)
        tower.outcomes.append((k, outcome))
        logger.info("search.tower_level", type=str(t), p=p, k=k, status=outcome.status.value)
        if outcome.status is SearchStatus.FOUND:
            break
    return tower
