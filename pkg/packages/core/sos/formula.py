"""Explicit formulas: coefficient tensors and their verification."""
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

import structlog

from packages.core.errors import CharacteristicTwoError, VerificationMismatchError
from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.multipoly.polynomial import Polynomial, PolynomialRing
from packages.core.sos.ideal import SosType, gen_sos_ideal

logger = structlog.get_logger()

Tensor = Tuple[Tuple[Tuple[FieldElement, ...], ...], ...]


@dataclass(frozen=True)
class SosFormula:
    """z_i = sum_{j,k} alpha[i][j][k] x_j y_k, zero-based indices.

    ``alpha`` has shape n x r x s and all entries lie in ``field``.
    """

    type: SosType
    field: CoefficientField
    alpha: Tensor

    def __post_init__(self) -> None:
        t = self.type
        if len(self.alpha) != t.n or any(len(row) != t.r for row in self.alpha):
            raise ValueError(f"coefficient tensor does not have shape {t.n}x{t.r}x{t.s}")
        if any(len(col) != t.s for row in self.alpha for col in row):
            raise ValueError(f"coefficient tensor does not have shape {t.n}x{t.r}x{t.s}")

    @classmethod
    def from_values(cls, t: SosType, field: CoefficientField, values: Sequence[Any]) -> "SosFormula":
        """Build from a nested i -> j -> k sequence of anything the field accepts."""
        alpha = tuple(
            tuple(tuple(field(v) for v in col) for col in row) for row in values
        )
        return cls(type=t, field=field, alpha=alpha)

    @classmethod
    def from_point(cls, t: SosType, field: CoefficientField, point: Sequence[FieldElement]) -> "SosFormula":
        """Build from a vector indexed by the flat variable index."""
        indexer = t.indexer
        alpha = tuple(
            tuple(
                tuple(field(point[indexer.flat(i, j, k)]) for k in range(1, t.s + 1))
                for j in range(1, t.r + 1)
            )
            for i in range(1, t.n + 1)
        )
        return cls(type=t, field=field, alpha=alpha)

    def entry(self, i: int, j: int, k: int) -> FieldElement:
        """alpha_{ijk} with one-based indices."""
        return self.alpha[i - 1][j - 1][k - 1]

    def point(self) -> List[FieldElement]:
        """The tensor as a point of the ideal's variety, in flat variable order."""
        return [self.entry(i, j, k) for i, j, k in self.type.indexer.triples()]


def _check_characteristic(field: CoefficientField) -> None:
    if field.characteristic == 2:
        raise CharacteristicTwoError("formulas over fields of characteristic 2 are not supported")


def expansion_residual(f: SosFormula) -> Polynomial:
    """(sum x_j^2)(sum y_k^2) - sum z_i^2 in F[x_1..x_r, y_1..y_s]."""
    t = f.type
    names = tuple(f"x{j}" for j in range(1, t.r + 1)) + tuple(f"y{k}" for k in range(1, t.s + 1))
    ring = PolynomialRing(f.field, t.r + t.s, names)
    xs = ring.variables()[: t.r]
    ys = ring.variables()[t.r :]

    total = ring.zero()
    for x in xs:
        total = total + x * x
    y_norm = ring.zero()
    for y in ys:
        y_norm = y_norm + y * y
    total = total * y_norm

    for i in range(t.n):
        z = ring.zero()
        for j in range(t.r):
            for k in range(t.s):
                c = f.alpha[i][j][k]
                if not c.is_zero():
                    z = z + (xs[j] * ys[k]).scale(c)
        total = total - z * z
    return total


def vanishes_on_ideal(f: SosFormula) -> bool:
    """True iff every generator of the ideal vanishes at the tensor."""
    spec = gen_sos_ideal(f.type, f.field)
    point = f.point()
    return all(g.evaluate(point).is_zero() for g in spec.generators)


def verify_formula(f: SosFormula) -> bool:
    """Check the identity by expansion and by the ideal generators.

    Raises:
        CharacteristicTwoError: If the field has characteristic 2
        VerificationMismatchError: If the two checks disagree
    """
    _check_characteristic(f.field)
    by_expansion = expansion_residual(f).is_zero()
    by_ideal = vanishes_on_ideal(f)
    if by_expansion != by_ideal:
        logger.error(
            "sos.verify_mismatch",
            type=str(f.type),
            field=f.field.label(),
            expansion=by_expansion,
            ideal=by_ideal,
        )
        raise VerificationMismatchError(
            f"expansion check says {by_expansion}, ideal check says {by_ideal} for {f.type}"
        )
    return by_expansion


def restrict_formula(f: SosFormula, r: int, s: int) -> SosFormula:
    """Keep the first r x-variables and s y-variables, giving type [r, s, n]."""
    if not (1 <= r <= f.type.r and 1 <= s <= f.type.s):
        raise ValueError(f"cannot restrict a formula of type {f.type} to r={r}, s={s}")
    alpha = tuple(tuple(row[j][:s] for j in range(r)) for row in f.alpha)
    return SosFormula(type=SosType(r, s, f.type.n), field=f.field, alpha=alpha)
