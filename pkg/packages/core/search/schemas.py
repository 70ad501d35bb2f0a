"""Pydantic schemas for formula search input/output."""
from enum import Enum
from typing import Any, List, Optional

from pydantic import BaseModel, ConfigDict, Field, InstanceOf, field_validator

from packages.core.errors import CharacteristicTwoError
from packages.core.sos.formula import SosFormula
from packages.core.sos.ideal import SosType

DEFAULT_NODE_BUDGET = 10_000_000


class SearchStrategy(str, Enum):
    NAIVE = "naive"
    BACKTRACKING = "backtracking"


class EmitMode(str, Enum):
    FIRST = "first"
    ALL = "all"
    COUNT = "count"


class SearchStatus(str, Enum):
    FOUND = "found"
    EXHAUSTED_NONE = "exhausted-none"
    BUDGET_EXCEEDED = "budget-exceeded"


class SearchConfig(BaseModel):
    """What to search for, where, and how much work to allow."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    type: InstanceOf[SosType]
    field: Any  # PrimeField | ExtensionField
    strategy: SearchStrategy = SearchStrategy.BACKTRACKING
    emit: EmitMode = EmitMode.FIRST
    node_budget: int = Field(default=DEFAULT_NODE_BUDGET, ge=1)
    time_budget: Optional[float] = Field(default=None, gt=0)  # seconds, soft
    threads: int = Field(default=1, ge=1)

    @field_validator("field")
    @classmethod
    def _finite_odd_field(cls, value: Any) -> Any:
        if not getattr(value, "is_finite", False):
            raise ValueError("search requires a finite field")
        if value.characteristic == 2:
            raise CharacteristicTwoError("characteristic 2 is not supported")
        return value


class SearchOutcome(BaseModel):
    """Result of one search.

    ``complete`` is True when the whole space (or the whole pruned tree) was
    covered, or when the first formula was requested and found.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    status: SearchStatus
    formulas: List[InstanceOf[SosFormula]] = Field(default_factory=list)
    count: int = 0
    nodes: int = 0
    complete: bool = False
    strategy: SearchStrategy
    field_label: str
    type: InstanceOf[SosType]


def decide_status(count: int, complete: bool) -> SearchStatus:
    if count:
        return SearchStatus.FOUND
    if complete:
        return SearchStatus.EXHAUSTED_NONE
    return SearchStatus.BUDGET_EXCEEDED
