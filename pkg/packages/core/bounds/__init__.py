"""Exact and tiered evaluation of the degree, step and coefficient-growth bounds."""
from packages.core.bounds.formulas import (
    BoundMode,
    BoundParams,
    ObservedBound,
    binomial_magnitude,
    buchberger_step_bound,
    charp_threshold,
    division_p_bound,
    division_q,
    dube_bound,
    field_degree_bound,
    geometric_sum,
    growth_bound,
    growth_bound_for,
    growth_log2_by_recursion,
    growth_log2_closed_form,
    observed_vs_bound,
)
from packages.core.bounds.values import (
    DEFAULT_BIT_CAP,
    BoundTier,
    BoundValue,
    Magnitude,
    bound_from_magnitude,
    ceil_log2,
    log2_int,
)
from packages.core.zeta.reconstruction import bombieri_bound

__all__ = [
    "DEFAULT_BIT_CAP",
    "BoundMode",
    "BoundParams",
    "BoundTier",
    "BoundValue",
    "Magnitude",
    "ObservedBound",
    "binomial_magnitude",
    "bombieri_bound",
    "bound_from_magnitude",
    "buchberger_step_bound",
    "ceil_log2",
    "charp_threshold",
    "division_p_bound",
    "division_q",
    "dube_bound",
    "field_degree_bound",
    "geometric_sum",
    "growth_bound",
    "growth_bound_for",
    "growth_log2_by_recursion",
    "growth_log2_closed_form",
    "log2_int",
    "observed_vs_bound",
]
