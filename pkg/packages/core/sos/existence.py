"""Existence of formulas over the algebraic closure via properness of the ideal."""
import structlog

from packages.core.fields.base import CoefficientField
from packages.core.groebner.buchberger import DEFAULT_MAX_PAIRS, DEFAULT_MAX_STEPS, buchberger
from packages.core.sos.ideal import SosType, gen_sos_ideal

logger = structlog.get_logger()


def exists_over(
    t: SosType,
    field: CoefficientField,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    product_criterion: bool = False,
) -> bool:
    """Decide whether a formula of type t exists over the algebraic closure of ``field``.

    The ideal is proper exactly when such a formula exists.

    Raises:
        ResourceCapExceeded: If Buchberger hits a cap first (undecided)
    """
    spec = gen_sos_ideal(t, field)
    logger.info("sos.exists_over.start", type=str(t), field=field.label())
    result = buchberger(
        spec.generators,
        max_steps=max_steps,
        max_pairs=max_pairs,
        product_criterion=product_criterion,
        stop_on_unit=True,
    )
    proper = result.is_proper
    logger.info(
        "sos.exists_over.done",
        type=str(t),
        field=field.label(),
        exists=proper,
        extensions=result.trace.extensions,
    )
    return proper
