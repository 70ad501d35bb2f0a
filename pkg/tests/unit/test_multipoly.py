"""Tests for monomials, the degrevlex order, polynomials and variable indexing."""
import functools
import random

import pytest

from packages.core.errors import FieldMismatchError, MonomialDivisionError, RingMismatchError
from packages.core.fields import QQ, PrimeField, Rational
from packages.core.multipoly import PolynomialRing, VarIndexer, degrevlex_cmp, monomial


class TestDegrevlex:
    def test_total_degree_first(self):
        assert degrevlex_cmp((0, 0, 2), (1, 0, 0)) == 1

    def test_smaller_last_exponent_wins(self):
        # x0*x2 < x1^2 since x2 appears in the first
        assert degrevlex_cmp((1, 0, 1), (0, 2, 0)) == -1
        assert degrevlex_cmp((2, 0, 0), (0, 2, 0)) == 1
        assert degrevlex_cmp((1, 1, 0), (2, 0, 0)) == -1

    def test_equal(self):
        assert degrevlex_cmp((1, 2), (1, 2)) == 0

    def test_length_mismatch(self):
        with pytest.raises(RingMismatchError):
            degrevlex_cmp((1,), (1, 0))

    def test_sorted_degree_two_monomials(self):
        ms = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
        ordered = sorted(ms, key=functools.cmp_to_key(degrevlex_cmp), reverse=True)
        assert ordered == ms


class TestMonomialOps:
    def test_lcm_gcd(self):
        assert monomial.lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
        assert monomial.gcd((2, 0, 1), (1, 3, 0)) == (1, 0, 0)

    def test_divides_and_divide(self):
        assert monomial.divides((1, 0), (2, 1))
        assert not monomial.divides((0, 2), (2, 1))
        assert monomial.divide((2, 1), (1, 0)) == (1, 1)
        with pytest.raises(MonomialDivisionError):
            monomial.divide((0, 1), (1, 0))

    def test_coprime(self):
        assert monomial.is_coprime((1, 0, 2), (0, 3, 0))
        assert not monomial.is_coprime((1, 0), (1, 1))

    def test_render(self):
        assert monomial.render((2, 0, 1), ("x", "y", "z")) == "x^2*z"
        assert monomial.render((0, 0), ("x", "y")) == "1"


class TestPolynomial:
    @pytest.fixture
    def ring(self):
        return PolynomialRing(QQ, 3, ("x", "y", "z"))

    def test_terms_sorted_descending(self, ring):
        x, y, z = ring.variables()
        f = z * z + x * y + y * y + 3
        assert [m for _, m in f.terms] == [(1, 1, 0), (0, 2, 0), (0, 0, 2), (0, 0, 0)]
        assert f.leading_monomial() == (1, 1, 0)

    def test_zero_coefficients_dropped(self, ring):
        x, y, _ = ring.variables()
        f = (x + y) - y
        assert f == x
        assert len(f) == 1
        assert ring.from_dict({(1, 0, 0): 0}).is_zero()

    def test_arithmetic_identities(self, ring):
        x, y, z = ring.variables()
        assert (x + y) * (x - y) == x * x - y * y
        assert (x + 1) ** 3 == x**3 + 3 * x**2 + 3 * x + 1
        assert 2 - x == -(x - 2)

    def test_total_degree(self, ring):
        x, y, _ = ring.variables()
        assert (x * y * y + x).total_degree() == 3
        assert ring.zero().total_degree() == -1

    def test_constants(self, ring):
        assert ring.constant(5).is_nonzero_constant()
        assert ring.zero().is_constant()
        assert not ring.zero().is_nonzero_constant()

    def test_leading_term_of_zero(self, ring):
        with pytest.raises(ValueError):
            ring.zero().leading_term()

    def test_evaluate(self, ring):
        x, y, z = ring.variables()
        f = x * y - z * z + Rational(1, 2)
        assert f.evaluate([Rational(2), Rational(3), Rational(1)]) == Rational(11, 2)
        with pytest.raises(RingMismatchError):
            f.evaluate([Rational(1)])

    def test_monic(self, ring):
        x, y, _ = ring.variables()
        f = (3 * x + y).monic()
        assert f.leading_coeff() == 1
        assert f.coefficient((0, 1, 0)) == Rational(1, 3)

    def test_ring_mismatch(self, ring):
        other = PolynomialRing(QQ, 2)
        with pytest.raises(RingMismatchError):
            ring.variable(0) + other.variable(0)

    def test_change_field(self, ring):
        x, y, _ = ring.variables()
        f = 7 * x + Rational(1, 2) * y
        g = f.change_field(PrimeField(5))
        assert g.coefficient((1, 0, 0)) == 2
        assert g.coefficient((0, 1, 0)) == 3

    def test_field_mismatch_on_lift(self):
        ring = PolynomialRing(PrimeField(5), 1)
        with pytest.raises(FieldMismatchError):
            ring.variable(0) + PrimeField(7)(1)

    def test_names_default_and_validation(self):
        assert PolynomialRing(QQ, 2).names == ("x0", "x1")
        with pytest.raises(ValueError):
            PolynomialRing(QQ, 2, ("a",))

    def test_str(self, ring):
        x, _, _ = ring.variables()
        assert str(x * x - 1) == "(1/1)*x^2 + -1/1"


class TestVarIndexer:
    def test_flat_layout(self):
        ix = VarIndexer(r=2, s=3, n=2)
        assert ix.size == 12
        assert ix.flat(1, 1, 1) == 0
        assert ix.flat(1, 1, 3) == 2
        assert ix.flat(1, 2, 1) == 3
        assert ix.flat(2, 1, 1) == 6
        assert ix.flat(2, 2, 3) == 11

    def test_unflat_inverts_flat(self):
        ix = VarIndexer(r=2, s=3, n=4)
        for index, triple in enumerate(ix.triples()):
            assert ix.flat(*triple) == index
            assert ix.unflat(index) == triple

    def test_out_of_range(self):
        ix = VarIndexer(r=1, s=1, n=1)
        with pytest.raises(IndexError):
            ix.flat(2, 1, 1)
        with pytest.raises(IndexError):
            ix.unflat(1)

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError):
            VarIndexer(r=0, s=1, n=1)

    def test_names(self):
        assert VarIndexer(1, 2, 1).names() == ("x111", "x112")
        assert VarIndexer(1, 1, 10).names()[9] == "x_10_1_1"


def random_monomial(rng, nvars, top=4):
    return tuple(rng.randint(0, top) for _ in range(nvars))


def random_polynomial(rng, ring, terms=4):
    return ring.from_terms(
        (rng.randint(-5, 5), random_monomial(rng, ring.nvars, 3))
        for _ in range(rng.randint(0, terms))
    )


class TestDegrevlexLaws:
    """degrevlex is a multiplicative total order with 1 smallest."""

    NVARS = 4

    def test_total_and_antisymmetric(self):
        rng = random.Random(31)
        for _ in range(2000):
            a, b = random_monomial(rng, self.NVARS), random_monomial(rng, self.NVARS)
            ab, ba = degrevlex_cmp(a, b), degrevlex_cmp(b, a)
            assert ab == -ba
            assert (ab == 0) == (a == b)

    def test_transitive(self):
        rng = random.Random(37)
        for _ in range(2000):
            a, b, c = sorted(
                (random_monomial(rng, self.NVARS) for _ in range(3)),
                key=functools.cmp_to_key(degrevlex_cmp),
            )
            assert degrevlex_cmp(a, b) <= 0
            assert degrevlex_cmp(b, c) <= 0
            assert degrevlex_cmp(a, c) <= 0

    def test_multiplicative(self):
        rng = random.Random(41)
        for _ in range(2000):
            a, b, c = (random_monomial(rng, self.NVARS) for _ in range(3))
            if degrevlex_cmp(a, b) < 0:
                assert degrevlex_cmp(monomial.mul(a, c), monomial.mul(b, c)) < 0

    def test_one_is_smallest(self):
        rng = random.Random(43)
        one = monomial.one(self.NVARS)
        for _ in range(500):
            m = random_monomial(rng, self.NVARS)
            assert degrevlex_cmp(one, m) <= 0


class TestPolynomialLaws:
    @pytest.fixture(params=[QQ, PrimeField(7)], ids=["Q", "F_7"])
    def ring(self, request):
        return PolynomialRing(request.param, 3)

    def test_initial_term_is_multiplicative(self, ring):
        rng = random.Random(47)
        for _ in range(300):
            f, g = random_polynomial(rng, ring), random_polynomial(rng, ring)
            if f.is_zero() or g.is_zero():
                continue
            lf, lg = f.leading_term(), g.leading_term()
            product = (f * g).leading_term()
            assert product.mono == monomial.mul(lf.mono, lg.mono)
            assert product.coeff == lf.coeff * lg.coeff

    def test_ring_axioms(self, ring):
        rng = random.Random(53)
        for _ in range(200):
            f, g, h = (random_polynomial(rng, ring) for _ in range(3))
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert (f * g) * h == f * (g * h)
            assert f * g == g * f
            assert f * (g + h) == f * g + f * h
            assert f + ring.zero() == f
            assert f * ring.one() == f
            assert (f - f).is_zero()

    def test_terms_stay_sorted(self, ring):
        rng = random.Random(59)
        key = functools.cmp_to_key(degrevlex_cmp)
        for _ in range(200):
            f, g = random_polynomial(rng, ring), random_polynomial(rng, ring)
            c = ring.field(rng.randint(1, 6))
            m = random_monomial(rng, ring.nvars, 2)
            for h in (f + g, f * g, -f, f.mul_term(c, m)):
                monos = [t.mono for t in h.terms]
                assert monos == sorted(monos, key=key, reverse=True)
                assert len(set(monos)) == len(monos)

    def test_evaluate_is_a_homomorphism(self, ring):
        rng = random.Random(61)
        field = ring.field
        for _ in range(200):
            f, g = random_polynomial(rng, ring), random_polynomial(rng, ring)
            point = [field(rng.randint(-9, 9)) for _ in range(ring.nvars)]
            assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)
            assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
            assert ring.one().evaluate(point) == 1
