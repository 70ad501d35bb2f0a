"""Division algorithm and Buchberger's algorithm with coefficient-growth tracing."""
from packages.core.groebner.buchberger import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_STEPS,
    GroebnerBasis,
    agrees_mod_p,
    buchberger,
    is_proper,
    reduce_basis,
)
from packages.core.groebner.division import (
    SPairRecord,
    StandardExpression,
    divide,
    s_pair_reduce,
    s_polynomial,
)
from packages.core.groebner.trace import (
    GroebnerTrace,
    TraceStep,
    basis_max_p,
    exceptional_primes,
    trace_max_p,
)

__all__ = [
    "DEFAULT_MAX_PAIRS",
    "DEFAULT_MAX_STEPS",
    "GroebnerBasis",
    "GroebnerTrace",
    "SPairRecord",
    "StandardExpression",
    "TraceStep",
    "agrees_mod_p",
    "basis_max_p",
    "buchberger",
    "divide",
    "exceptional_primes",
    "is_proper",
    "reduce_basis",
    "s_pair_reduce",
    "s_polynomial",
    "trace_max_p",
]
