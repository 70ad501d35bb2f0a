"""Sparse multivariate polynomials in degrevlex order."""
from packages.core.multipoly import monomial
from packages.core.multipoly.indexer import VarIndexer
from packages.core.multipoly.monomial import Monomial, degrevlex_cmp, degrevlex_key
from packages.core.multipoly.polynomial import Polynomial, PolynomialRing, Term

__all__ = [
    "monomial",
    "Monomial",
    "degrevlex_cmp",
    "degrevlex_key",
    "Polynomial",
    "PolynomialRing",
    "Term",
    "VarIndexer",
]
