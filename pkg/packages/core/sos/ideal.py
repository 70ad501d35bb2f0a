"""Defining ideal of sums-of-squares formulas of type [r,s,n].

A formula z_i = sum_{j,k} a_{ijk} x_j y_k with
(x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) = z_1^2 + ... + z_n^2
exists exactly when the point (a_{ijk}) is a common zero of four families
of quadrics in the variables x_{ijk}. The cross-term family is used without
its factor 2, which is a unit in every supported field.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

import structlog

from packages.core.fields.base import CoefficientField
from packages.core.fields.rational import QQ
from packages.core.multipoly.indexer import VarIndexer
from packages.core.multipoly.polynomial import Polynomial, PolynomialRing

logger = structlog.get_logger()

FAMILIES = ("norm", "row_orthogonal", "column_orthogonal", "cross")


@dataclass(frozen=True)
class SosType:
    """[r, s, n]: r x-variables, s y-variables, n squares on the right."""

    r: int
    s: int
    n: int

    def __post_init__(self) -> None:
        for name in ("r", "s", "n"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def variables(self) -> int:
        return self.r * self.s * self.n

    @property
    def indexer(self) -> VarIndexer:
        return VarIndexer(self.r, self.s, self.n)

    def family_sizes(self) -> Dict[str, int]:
        pairs_r = self.r * (self.r - 1) // 2
        pairs_s = self.s * (self.s - 1) // 2
        return {
            "norm": self.r * self.s,
            "row_orthogonal": pairs_r * self.s,
            "column_orthogonal": self.r * pairs_s,
            "cross": pairs_r * pairs_s,
        }

    def generator_count(self) -> int:
        return (self.r * (self.r + 1) // 2) * (self.s * (self.s + 1) // 2)

    def __str__(self) -> str:
        return f"[{self.r},{self.s},{self.n}]"


@dataclass(frozen=True)
class SosIdealSpec:
    """Generators of the ideal, in family order, with the family boundaries."""

    type: SosType
    ring: PolynomialRing
    generators: Tuple[Polynomial, ...]
    families: Tuple[Tuple[str, int, int], ...]  # (name, start, stop) into generators

    def family(self, name: str) -> Tuple[Polynomial, ...]:
        for family_name, start, stop in self.families:
            if family_name == name:
                return self.generators[start:stop]
        raise KeyError(name)


def sos_ring(t: SosType, field: CoefficientField = QQ) -> PolynomialRing:
    """F[x_{ijk}] with variables in flat index order."""
    indexer = t.indexer
    return PolynomialRing(field, indexer.size, indexer.names())


def _inner(ring: PolynomialRing, t: SosType, a: Tuple[int, int], b: Tuple[int, int]) -> Polynomial:
    """sum_i x_{i a} x_{i b} for column positions a = (j, k), b = (j', k')."""
    indexer = t.indexer
    terms = []
    for i in range(1, t.n + 1):
        exps = [0] * indexer.size
        exps[indexer.flat(i, *a)] += 1
        exps[indexer.flat(i, *b)] += 1
        terms.append((1, tuple(exps)))
    return ring.from_terms(terms)


def gen_sos_ideal(t: SosType, field: CoefficientField = QQ) -> SosIdealSpec:
    """Generators of the ideal whose zeros are the formulas of type t.

    Families, in order:
        norm: sum_i x_{ijk}^2 - 1 for all (j, k)
        row_orthogonal: sum_i x_{ijk} x_{ij'k} for j < j', all k
        column_orthogonal: sum_i x_{ijk} x_{ijk'} for all j, k < k'
        cross: sum_i (x_{ijk} x_{ij'k'} + x_{ijk'} x_{ij'k}) for j < j', k < k'
    Indices run lexicographically inside each family.
    """
    ring = sos_ring(t, field)
    rows = range(1, t.r + 1)
    cols = range(1, t.s + 1)
    generators: List[Polynomial] = []
    families = []

    start = len(generators)
    for j in rows:
        for k in cols:
            generators.append(_inner(ring, t, (j, k), (j, k)) - 1)
    families.append(("norm", start, len(generators)))

    start = len(generators)
    for j in rows:
        for j2 in range(j + 1, t.r + 1):
            for k in cols:
                generators.append(_inner(ring, t, (j, k), (j2, k)))
    families.append(("row_orthogonal", start, len(generators)))

    start = len(generators)
    for j in rows:
        for k in cols:
            for k2 in range(k + 1, t.s + 1):
                generators.append(_inner(ring, t, (j, k), (j, k2)))
    families.append(("column_orthogonal", start, len(generators)))

    start = len(generators)
    for j in rows:
        for j2 in range(j + 1, t.r + 1):
            for k in cols:
                for k2 in range(k + 1, t.s + 1):
                    generators.append(
                        _inner(ring, t, (j, k), (j2, k2)) + _inner(ring, t, (j, k2), (j2, k))
                    )
    families.append(("cross", start, len(generators)))

    logger.debug("sos.ideal_built", type=str(t), field=field.label(), generators=len(generators))
    return SosIdealSpec(type=t, ring=ring, generators=tuple(generators), families=tuple(families))
