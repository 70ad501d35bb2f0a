"""Exhaustive enumeration of coefficient tensors."""
import itertools
import time

import structlog

from packages.core.errors import VerificationMismatchError
from packages.core.search.schemas import (
    EmitMode,
    SearchConfig,
    SearchOutcome,
    SearchStrategy,
    decide_status,
)
from packages.core.sos.formula import SosFormula, verify_formula
from packages.core.sos.ideal import gen_sos_ideal

logger = structlog.get_logger()

TIME_CHECK_INTERVAL = 1024


def search_naive(cfg: SearchConfig) -> SearchOutcome:
    """Try every tensor in F^{rsn}, flat variable order, first variable slowest.

    One node is one tensor. The generators of the ideal are evaluated at each
    tensor; hits are confirmed with ``verify_formula`` before emission.
    """
    t, field = cfg.type, cfg.field
    generators = gen_sos_ideal(t, field).generators
    elements = list(field.elements())
    started = time.monotonic()
    logger.info("search.start", strategy="naive", type=str(t), field=field.label(),
                space=field.order ** t.variables)

    formulas = []
    count = 0
    nodes = 0
    complete = True
    for point in itertools.product(elements, repeat=t.variables):
        if nodes >= cfg.node_budget:
            complete = False
            break
        if (
            cfg.time_budget is not None
            and nodes % TIME_CHECK_INTERVAL == 0
            and time.monotonic() - started > cfg.time_budget
        ):
            complete = False
            break
        nodes += 1
        if any(not g.evaluate(point).is_zero() for g in generators):
            continue
        count += 1
        if cfg.emit is EmitMode.COUNT:
            continue
        formula = SosFormula.from_point(t, field, point)
        if not verify_formula(formula):
            raise VerificationMismatchError(f"tensor {point} passed the ideal but not the identity")
        formulas.append(formula)
        if cfg.emit is EmitMode.FIRST:
            break

    status = decide_status(count, complete)
    logger.info("search.done", strategy="naive", status=status.value, count=count, nodes=nodes)
    return SearchOutcome(
        status=status,
        formulas=formulas,
        count=count,
        nodes=nodes,
        complete=complete or bool(count and cfg.emit is EmitMode.FIRST),
        strategy=SearchStrategy.NAIVE,
        field_label=field.label(),
        type=t,
    )
