"""Classical 1-, 2-, 4- and 8-square identities.

The tables come from the norm-multiplicative algebras of dimension 1, 2, 4
and 8 built by Cayley-Dickson doubling:

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),  conj(a, b) = (conj(a), -b)

and alpha_{ijk} is coordinate i of e_j * e_k. Every entry is -1, 0 or 1.
"""
from functools import lru_cache
from typing import List, Tuple

from packages.core.errors import UnsupportedCatalogError
from packages.core.fields.base import CoefficientField
from packages.core.fields.rational import QQ
from packages.core.sos.formula import SosFormula
from packages.core.sos.ideal import SosType

CATALOG_SIZES = (1, 2, 4, 8)

Vector = List[int]


def _conj(a: Vector) -> Vector:
    if len(a) == 1:
        return list(a)
    half = len(a) // 2
    return _conj(a[:half]) + [-x for x in a[half:]]


def _add(a: Vector, b: Vector) -> Vector:
    return [x + y for x, y in zip(a, b)]


def _sub(a: Vector, b: Vector) -> Vector:
    return [x - y for x, y in zip(a, b)]


def _mul(a: Vector, b: Vector) -> Vector:
    if len(a) == 1:
        return [a[0] * b[0]]
    half = len(a) // 2
    a1, a2 = a[:half], a[half:]
    c, d = b[:half], b[half:]
    left = _sub(_mul(a1, c), _mul(_conj(d), a2))
    right = _add(_mul(d, a1), _mul(a2, _conj(c)))
    return left + right


@lru_cache(maxsize=None)
def structure_constants(n: int) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
    """alpha[i][j][k] as ints for the doubling algebra of dimension n."""
    if n not in CATALOG_SIZES:
        raise UnsupportedCatalogError(f"no classical formula for n={n}; choose one of {CATALOG_SIZES}")
    basis = [[1 if position == index else 0 for position in range(n)] for index in range(n)]
    products = [[_mul(basis[j], basis[k]) for k in range(n)] for j in range(n)]
    return tuple(
        tuple(tuple(products[j][k][i] for k in range(n)) for j in range(n)) for i in range(n)
    )


def catalog(n: int, field: CoefficientField = QQ) -> SosFormula:
    """Formula of type [n, n, n] over ``field``.

    Raises:
        UnsupportedCatalogError: If n is not 1, 2, 4 or 8
    """
    return SosFormula.from_values(SosType(n, n, n), field, structure_constants(n))
