"""The formula equations written as inner products of coefficient vectors.

For a tensor alpha of type [r,s,n] let v_{jk} in F^n have coordinates
alpha_{ijk}. The tensor is a formula iff
    <v_jk, v_jk> = 1
    <v_jk, v_j'k> = 0                         for j != j'
    <v_jk, v_jk'> = 0                         for k != k'
    <v_jk, v_j'k'> + <v_jk', v_j'k> = 0       for j < j', k < k'
"""
import itertools
from typing import Dict, List, Sequence, Tuple

from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.sos.formula import SosFormula
from packages.core.sos.ideal import SosType

Vector = Tuple[FieldElement, ...]
Position = Tuple[int, int]  # (j, k), zero-based


def inner(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    total = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        total = total + a * b
    return total


def unit_vectors(field: CoefficientField, n: int) -> List[Vector]:
    """Vectors of F^n with <v, v> = 1, in field enumeration order (first coordinate slowest)."""
    elements = list(field.elements())
    one = field.one()
    return [v for v in itertools.product(elements, repeat=n) if inner(v, v) == one]


def positions(t: SosType) -> List[Position]:
    """Vector placement order: (j, k) lexicographic."""
    return [(j, k) for j in range(t.r) for k in range(t.s)]


def column_vectors(f: SosFormula) -> Dict[Position, Vector]:
    t = f.type
    return {
        (j, k): tuple(f.alpha[i][j][k] for i in range(t.n)) for j, k in positions(t)
    }


def placement_ok(
    placed: Dict[Position, Vector],
    position: Position,
    v: Vector,
) -> bool:
    """Check the equations that become decidable when v is placed at ``position``.

    ``placed`` holds every position before ``position`` in placement order;
    v is assumed to have unit norm.
    """
    j, k = position
    for k1 in range(k):
        if not inner(placed[(j, k1)], v).is_zero():
            return False
    for j1 in range(j):
        if not inner(placed[(j1, k)], v).is_zero():
            return False
    for j1 in range(j):
        for k1 in range(k):
            cross = inner(placed[(j1, k1)], v) + inner(placed[(j1, k)], placed[(j, k1)])
            if not cross.is_zero():
                return False
    return True


def satisfies_constraints(f: SosFormula) -> bool:
    """The full vector-constraint predicate on a complete tensor."""
    vectors = column_vectors(f)
    one = f.field.one()
    placed: Dict[Position, Vector] = {}
    for position in positions(f.type):
        v = vectors[position]
        if inner(v, v) != one or not placement_ok(placed, position, v):
            return False
        placed[position] = v
    return True
