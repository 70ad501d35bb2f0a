"""Monomials as exponent tuples and the degree-reverse-lexicographic order.

Variable 0 is the largest variable. A monomial m is greater than m' when it
has larger total degree, or equal degree and a smaller exponent in the last
variable where they differ.
"""
from functools import lru_cache
from typing import Tuple

from packages.core.errors import MonomialDivisionError, RingMismatchError

Monomial = Tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def degrevlex_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: larger key means larger monomial."""
    return sum(m), tuple(-e for e in reversed(m))


def _check_lengths(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise RingMismatchError(f"monomials of length {len(a)} and {len(b)}")


def degrevlex_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as a is smaller than, equal to or greater than b."""
    _check_lengths(a, b)
    ka, kb = degrevlex_key(a), degrevlex_key(b)
    return (ka > kb) - (ka < kb)


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def total_degree(m: Monomial) -> int:
    return sum(m)


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_lengths(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def divide(a: Monomial, b: Monomial) -> Monomial:
    """a / b; b must divide a."""
    _check_lengths(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise MonomialDivisionError(f"{b} does not divide {a}")
    return out


def is_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def render(m: Monomial, names: Tuple[str, ...]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
