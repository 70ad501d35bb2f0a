"""Exact coefficient fields: Q with the P-measure, F_p and F_{p^k}."""
from packages.core.fields.base import CoefficientField, FieldElement
from packages.core.fields.extension import (
    ExtensionElement,
    ExtensionField,
    FiniteField,
    enumerate_field,
    finite_field,
    make_extension_field,
)
from packages.core.fields.prime import PrimeElement, PrimeField, check_odd_prime
from packages.core.fields.rational import QQ, PMeasure, Rational, RationalField, p_measure

__all__ = [
    "CoefficientField",
    "FieldElement",
    "QQ",
    "RationalField",
    "Rational",
    "PMeasure",
    "p_measure",
    "PrimeField",
    "PrimeElement",
    "check_odd_prime",
    "ExtensionField",
    "ExtensionElement",
    "FiniteField",
    "make_extension_field",
    "finite_field",
    "enumerate_field",
]
