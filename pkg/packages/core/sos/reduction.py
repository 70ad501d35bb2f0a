"""Reduction of rational formulas modulo an odd prime."""
import structlog

from packages.core.errors import FieldMismatchError
from packages.core.fields.prime import PrimeField
from packages.core.sos.formula import SosFormula

logger = structlog.get_logger()


def reduce_formula_mod_p(f: SosFormula, p: int) -> SosFormula:
    """Reduce every coefficient of a formula over Q into F_p.

    A formula over Q stays a formula after reduction, since the identity is
    polynomial in its coefficients.

    Args:
        f: Formula with rational coefficients
        p: Odd prime

    Returns:
        The reduced formula over F_p

    Raises:
        FieldMismatchError: If f is not over Q
        BadReductionPrimeError: If p divides some coefficient denominator
        CharacteristicTwoError: If p = 2
        NotPrimeError: If p is composite
    """
    if f.field.is_finite:
        raise FieldMismatchError(f"only formulas over Q can be reduced, got {f.field.label()}")
    target = PrimeField(p)
    alpha = tuple(
        tuple(tuple(target.reduce(c) for c in col) for col in row) for row in f.alpha
    )
    logger.debug("sos.reduced", type=str(f.type), p=p)
    return SosFormula(type=f.type, field=target, alpha=alpha)
