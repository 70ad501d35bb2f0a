"""Explicit formula search over small finite fields."""
from packages.core.search.backtracking import (
    run_search,
    search_backtracking,
    search_backtracking_async,
)
from packages.core.search.constraints import satisfies_constraints, unit_vectors
from packages.core.search.naive import search_naive
from packages.core.search.schemas import (
    EmitMode,
    SearchConfig,
    SearchOutcome,
    SearchStatus,
    SearchStrategy,
)
from packages.core.search.tower import TowerOutcome, search_tower

__all__ = [
    "EmitMode",
    "SearchConfig",
    "SearchOutcome",
    "SearchStatus",
    "SearchStrategy",
    "TowerOutcome",
    "run_search",
    "satisfies_constraints",
    "search_backtracking",
    "search_backtracking_async",
    "search_naive",
    "search_tower",
    "unit_vectors",
]
