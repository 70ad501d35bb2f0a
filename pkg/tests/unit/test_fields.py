"""Tests for the coefficient fields Q, F_p and F_{p^k}."""
import random
from fractions import Fraction

import pytest
import sympy

from packages.core.errors import (
    BadReductionPrimeError,
    CharacteristicTwoError,
    FieldDivisionByZero,
    FieldMismatchError,
    NotPrimeError,
)
from packages.core.fields import (
    QQ,
    ExtensionField,
    PrimeField,
    Rational,
    enumerate_field,
    finite_field,
    p_measure,
)
from packages.core.fields import gfpx


class TestRational:
    """Canonical fractions and the P-measure."""

    def test_canonical_form(self):
        x = Rational(2, -4)
        assert (x.num, x.den) == (-1, 2)
        assert str(x) == "-1/2"

    def test_zero_is_zero_over_one(self):
        z = Rational(0, 7)
        assert (z.num, z.den) == (0, 1)
        assert z.is_zero()

    def test_parse_integer_and_fraction(self):
        assert Rational.parse("3") == 3
        assert str(Rational.parse("3")) == "3/1"
        assert Rational.parse("-6/4") == Rational(-3, 2)

    def test_p_measure(self):
        assert p_measure(Rational(-7, 3)) == 7
        assert p_measure(Rational(2, 9)) == 9
        assert p_measure(Rational(0)) == 1

    def test_immutable(self):
        x = Rational(1, 2)
        with pytest.raises(AttributeError):
            x._value = Fraction(3)

    def test_division_by_zero(self):
        with pytest.raises(FieldDivisionByZero):
            Rational(1) / Rational(0)
        with pytest.raises(ZeroDivisionError):
            Rational(0).inverse()

    def test_random_arithmetic_matches_fraction(self):
        """10^4 random operations agree with fractions.Fraction."""
        rng = random.Random(20240501)
        for _ in range(10_000):
            a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            x, y = QQ(Rational(a)), QQ(Rational(b))
            op = rng.randrange(4)
            if op == 0:
                got, want = x + y, a + b
            elif op == 1:
                got, want = x - y, a - b
            elif op == 2:
                got, want = x * y, a * b
            else:
                if b == 0:
                    continue
                got, want = x / y, a / b
            assert got.as_fraction() == want
            assert got.den >= 1

    def test_p_measure_inequalities(self):
        """P is submultiplicative, nearly subadditive, and blind to sign and inversion."""
        rng = random.Random(20240504)
        bound = 10**9
        for _ in range(10_000):
            x = Rational(rng.randint(-bound, bound), rng.randint(1, bound))
            y = Rational(rng.randint(-bound, bound), rng.randint(1, bound))
            px, py = p_measure(x), p_measure(y)
            assert p_measure(x * y) <= px * py
            assert p_measure(x + y) <= 2 * px * py
            assert p_measure(-x) == px
            if not x.is_zero():
                assert p_measure(x.inverse()) == px


class TestPrimeField:
    def test_rejects_two(self):
        with pytest.raises(CharacteristicTwoError):
            PrimeField(2)

    def test_rejects_composite(self):
        with pytest.raises(NotPrimeError):
            PrimeField(9)
        with pytest.raises(NotPrimeError):
            PrimeField(1)

    def test_arithmetic(self):
        f = PrimeField(5)
        assert f(7) == 2
        assert f(3) * f(2) == 1
        assert f(3).inverse() == 2
        assert f(2) / f(3) == 4
        assert -f(1) == 4
        assert f(2) ** 4 == 1

    def test_inverse_of_zero(self):
        with pytest.raises(FieldDivisionByZero):
            PrimeField(7)(0).inverse()

    def test_mixing_fields_raises(self):
        with pytest.raises(FieldMismatchError):
            PrimeField(5)(1) + PrimeField(7)(1)

    def test_reduce_rational(self):
        f = PrimeField(5)
        assert f(Rational(1, 2)) == 3
        assert f(Rational(-3, 4)) == 3

    def test_reduce_bad_prime(self):
        with pytest.raises(BadReductionPrimeError) as exc_info:
            PrimeField(5)(Rational(1, 10))
        assert exc_info.value.p == 5

    def test_elements_in_order(self):
        assert [e.value for e in PrimeField(7).elements()] == list(range(7))


class TestExtensionField:
    def test_modulus_is_first_irreducible(self):
        assert finite_field(3, 2).modulus == (1, 0, 1)
        assert finite_field(5, 2).modulus == (2, 0, 1)

    def test_k1_is_prime_field(self):
        assert finite_field(7) == PrimeField(7)

    def test_char_two_rejected(self):
        with pytest.raises(CharacteristicTwoError):
            finite_field(2, 3)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(NotPrimeError):
            ExtensionField(3, 2, (2, 0, 1))  # t^2 - 1

    @pytest.mark.parametrize("p,k", [(3, 2), (3, 3), (5, 2), (7, 2)])
    def test_field_axioms(self, p, k):
        field = finite_field(p, k)
        elements = enumerate_field(field)
        assert len(elements) == p**k
        assert len(set(elements)) == p**k
        for x in elements:
            assert x ** (p**k) == x
            if not x.is_zero():
                assert x * x.inverse() == 1

    def test_embeds_prime_field(self):
        field = finite_field(3, 2)
        assert field(PrimeField(3)(2)) == 2
        with pytest.raises(FieldMismatchError):
            field(PrimeField(5)(2))

    def test_generator_satisfies_modulus(self):
        field = finite_field(5, 2)
        t = field.generator()
        assert t * t + 2 == 0


class TestIrreducibility:
    """Both irreducibility tests agree with sympy."""

    @pytest.mark.parametrize("p", [3, 5])
    def test_against_sympy(self, p):
        x = sympy.symbols("x")
        for k in (2, 3, 4):
            for index in range(min(p**k, 200)):
                f = gfpx.from_index(index, k, p) + [1]
                expected = sympy.Poly.from_list(list(reversed(f)), x, modulus=p).is_irreducible
                assert gfpx.is_irreducible(f, p) == expected
                assert gfpx._irreducible_by_distinct_degree(f, p) == expected

    def test_gcdext(self):
        a, b = [1, 0, 1], [2, 1]
        g, s, t = gfpx.gcdext(a, b, 3)
        combo = gfpx.add(gfpx.mul(s, a, 3), gfpx.mul(t, b, 3), 3)
        assert combo == g


def random_rational(rng):
    return Rational(rng.randint(-1000, 1000), rng.randint(1, 1000))


def sampler(field):
    """Uniform random elements of a finite field."""
    elements = enumerate_field(field)
    return lambda rng: rng.choice(elements)


class TestFieldLaws:
    """Ring and field axioms on random triples."""

    @pytest.fixture(params=["Q", "F_101", "F_5^3", "F_3^4"])
    def draw(self, request):
        if request.param == "Q":
            return random_rational
        if request.param == "F_101":
            return sampler(PrimeField(101))
        p, k = {"F_5^3": (5, 3), "F_3^4": (3, 4)}[request.param]
        return sampler(finite_field(p, k))

    def test_associativity_and_distributivity(self, draw):
        rng = random.Random(20240505)
        for _ in range(500):
            a, b, c = draw(rng), draw(rng), draw(rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c

    def test_commutativity_and_identities(self, draw):
        rng = random.Random(20240506)
        for _ in range(500):
            a, b = draw(rng), draw(rng)
            assert a + b == b + a
            assert a * b == b * a
            assert a + 0 == a
            assert a * 1 == a
            assert a + (-a) == 0
            assert a - b == a + (-b)

    def test_inverses(self, draw):
        rng = random.Random(20240507)
        for _ in range(500):
            a, b = draw(rng), draw(rng)
            if b.is_zero():
                continue
            assert b * b.inverse() == 1
            assert (a / b) * b == a
