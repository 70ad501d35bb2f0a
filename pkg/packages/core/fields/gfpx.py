"""Univariate polynomials over GF(p) as coefficient lists.

The polynomial a_0 + a_1 t + ... + a_n t^n is the list [a_0, a_1, ..., a_n]
of integers in {0, ..., p-1}. The last entry is nonzero; [] is zero.
"""
from typing import List, Sequence, Tuple

Poly = List[int]


def trim(a: Sequence[int], p: int) -> Poly:
    out = [c % p for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(a: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out, p)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, [-c for c in b], p)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def divmod_(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a)
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * inv_lead % p
        if c:
            quot[shift] = c
            for i, y in enumerate(b):
                rem[shift + i] -= c * y
    return trim(quot, p), trim(rem, p)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return []
    inv_lead = pow(a[-1], -1, p)
    return trim([c * inv_lead for c in a], p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic greatest common divisor."""
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def gcdext(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with g = s*a + t*b and g monic."""
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while b:
        q, r = divmod_(a, b, p)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not a:
        return [], [], []
    inv_lead = pow(a[-1], -1, p)
    return (
        monic(a, p),
        trim([c * inv_lead for c in s0], p),
        trim([c * inv_lead for c in t0], p),
    )


def powmod(a: Poly, exponent: int, modulus: Poly, p: int) -> Poly:
    result: Poly = [1]
    base = mod(a, modulus, p)
    while exponent:
        if exponent & 1:
            result = mod(mul(result, base, p), modulus, p)
        exponent >>= 1
        if exponent:
            base = mod(mul(base, base, p), modulus, p)
    return mod(result, modulus, p)


def from_index(index: int, length: int, p: int) -> Poly:
    """Coefficient vector of ``index`` read as base-p digits, constant term first."""
    digits = []
    for _ in range(length):
        index, digit = divmod(index, p)
        digits.append(digit)
    return digits


# Above this many trial divisors the distinct-degree test is used instead.
TRIAL_DIVISION_LIMIT = 100_000


def _trial_divisor_count(k: int, p: int) -> int:
    return sum(p**d for d in range(1, k // 2 + 1))


def is_irreducible(f: Poly, p: int) -> bool:
    """Irreducibility of a polynomial of degree >= 1 over GF(p).

    Trial division by every monic divisor of degree <= k/2 for k <= 8 when
    that is cheap; otherwise gcd(f, t^(p^i) - t) = 1 for i = 1..k/2.
    """
    f = trim(f, p)
    k = degree(f)
    if k < 1:
        return False
    if k == 1:
        return True
    if k <= 8 and _trial_divisor_count(k, p) <= TRIAL_DIVISION_LIMIT:
        return _irreducible_by_trial_division(f, p)
    return _irreducible_by_distinct_degree(f, p)


def _irreducible_by_trial_division(f: Poly, p: int) -> bool:
    k = degree(f)
    for d in range(1, k // 2 + 1):
        for index in range(p**d):
            divisor = from_index(index, d, p) + [1]
            if not mod(f, divisor, p):
                return False
    return True


def _irreducible_by_distinct_degree(f: Poly, p: int) -> bool:
    k = degree(f)
    t = [0, 1]
    power = t
    for _ in range(1, k // 2 + 1):
        power = powmod(power, p, f, p)
        if degree(gcd(f, sub(power, t, p), p)) > 0:
            return False
    return True
