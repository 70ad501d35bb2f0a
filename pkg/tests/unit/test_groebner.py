"""Tests for division, S-pairs, Buchberger's algorithm and its trace."""
import math
import random

import pytest
import sympy

from packages.core.errors import (
    ResourceCapExceeded,
    TraceUnavailableError,
    ZeroDivisorPolynomialError,
)
from packages.core.fields import QQ, PrimeField, Rational
from packages.core.groebner import (
    agrees_mod_p,
    buchberger,
    divide,
    exceptional_primes,
    is_proper,
    reduce_basis,
    s_pair_reduce,
    s_polynomial,
    trace_max_p,
)
from packages.core.multipoly import PolynomialRing, degrevlex_cmp, monomial
from packages.core.sos import SosType, gen_sos_ideal


def random_ideal(rng, field, nvars, ngens):
    """Nonzero generators of degree <= 2 with small integer coefficients."""
    ring = PolynomialRing(field, nvars)
    generators = []
    while len(generators) < ngens:
        terms = []
        for _ in range(rng.randint(1, 3)):
            exps = [0] * nvars
            for _ in range(rng.randint(0, 2)):
                exps[rng.randrange(nvars)] += 1
            terms.append((rng.choice([-3, -2, -1, 1, 2, 3]), tuple(exps)))
        g = ring.from_terms(terms)
        if not g.is_zero():
            generators.append(g)
    return ring, generators


def as_key(f, p=None):
    """Polynomial as a frozenset of (monomial, coefficient) for set comparison."""
    if p is None:
        return frozenset((m, sympy.Rational(c.num, c.den)) for c, m in f.terms)
    return frozenset((m, c.value) for c, m in f.terms)


def sympy_basis(generators, nvars, p=None):
    symbols = sympy.symbols(f"x0:{nvars}")
    exprs = []
    for g in generators:
        expr = sympy.Integer(0)
        for c, m in g.terms:
            coeff = sympy.Rational(c.num, c.den) if p is None else sympy.Integer(c.value)
            expr += coeff * math.prod(s**e for s, e in zip(symbols, m))
        exprs.append(expr)
    options = {"order": "grevlex"}
    if p is None:
        options["domain"] = sympy.QQ
    else:
        options["modulus"] = p
    basis = sympy.groebner(exprs, *symbols, **options)
    keys = set()
    for expr in basis.exprs:
        items = sympy.Poly(expr, *symbols).as_dict().items()
        if p is None:
            keys.add(frozenset((m, sympy.Rational(c)) for m, c in items))
        else:
            keys.add(frozenset((m, int(c) % p) for m, c in items if int(c) % p))
    return keys


class TestDivision:
    @pytest.fixture
    def ring(self):
        return PolynomialRing(QQ, 2, ("x", "y"))

    def test_textbook_example(self, ring):
        x, y = ring.variables()
        f = x * x * y + x * y * y + y * y
        expression = divide(f, [x * y - 1, y * y - 1])
        assert expression.remainder == x + y + 1
        assert expression.quotient_polynomials() == [x + y, ring.one()]
        assert expression.reconstruct() == f

    def test_zero_divisor_rejected(self, ring):
        x, _ = ring.variables()
        with pytest.raises(ZeroDivisorPolynomialError):
            divide(x, [ring.zero()])

    def test_first_divisor_wins(self, ring):
        x, y = ring.variables()
        expression = divide(x * y, [x, y])
        assert [index for _, index in expression.quotients] == [0]

    def test_random_divisions_reconstruct(self):
        """Remainder is reduced and the standard expression sums back to f."""
        rng = random.Random(7)
        for _ in range(500):
            ring, divisors = random_ideal(rng, QQ, 3, rng.randint(1, 3))
            _, (f,) = random_ideal(rng, QQ, 3, 1)
            f = f * divisors[0] + f
            expression = divide(f, divisors)
            assert expression.reconstruct() == f
            leads = [g.leading_monomial() for g in divisors]
            for _, m in expression.remainder.terms:
                assert not any(monomial.divides(lead, m) for lead in leads)
            for term, index in expression.quotients:
                used = monomial.mul(term.mono, leads[index])
                assert degrevlex_cmp(f.leading_monomial(), used) >= 0

    def test_s_polynomial(self, ring):
        x, y = ring.variables()
        m_ij, m_ji, s = s_polynomial(x * x - y, x * y - 1)
        assert m_ij.mono == (1, 0)
        assert m_ji.mono == (0, 1)
        assert s == x - y * y

    def test_s_pair_record(self, ring):
        x, y = ring.variables()
        record = s_pair_reduce(0, 1, [x * x - y, x * y - 1])
        assert (record.i, record.j) == (0, 1)
        assert record.remainder == x - y * y
        assert not record.reduces_to_zero


class TestBuchberger:
    def test_single_generator_is_basis(self):
        ring = PolynomialRing(QQ, 1)
        (x,) = ring.variables()
        result = buchberger([x * x - 1])
        assert result.is_proper
        assert result.trace.extensions == 0
        assert result.trace.max_p_by_step == [1]

    def test_unit_ideal(self):
        ring = PolynomialRing(QQ, 1)
        (x,) = ring.variables()
        result = buchberger([x, x - 1])
        assert not result.is_proper
        assert reduce_basis(result.basis) == [ring.one()]

    def test_stop_on_unit(self):
        t = SosType(1, 2, 1)
        result = buchberger(gen_sos_ideal(t).generators, stop_on_unit=True)
        assert result.stopped_on_unit
        assert result.contains_unit()

    def test_zero_generators_dropped(self):
        ring = PolynomialRing(QQ, 2)
        x, _ = ring.variables()
        result = buchberger([ring.zero(), x])
        assert result.basis == (x,)

    def test_pair_cap(self):
        with pytest.raises(ResourceCapExceeded) as exc_info:
            buchberger(gen_sos_ideal(SosType(1, 2, 1)).generators, max_pairs=1)
        assert exc_info.value.limit_name == "max_pairs"
        assert exc_info.value.limit == 1

    def test_step_cap(self):
        with pytest.raises(ResourceCapExceeded) as exc_info:
            buchberger(gen_sos_ideal(SosType(1, 2, 1)).generators, max_steps=0)
        assert exc_info.value.limit_name == "max_steps"

    def test_product_criterion_skips_coprime_pairs(self):
        ring = PolynomialRing(QQ, 2)
        x, y = ring.variables()
        result = buchberger([x * x - 1, y * y - 1], product_criterion=True)
        assert result.trace.pairs_skipped == 1
        assert result.trace.pairs_processed == 0

    def test_finite_field_runs_are_monic(self):
        ring = PolynomialRing(PrimeField(7), 2)
        x, y = ring.variables()
        result = buchberger([3 * x * y - 1, 2 * y * y - x])
        assert all(g.leading_coeff() == 1 for g in result.basis)

    def test_against_sympy_over_q(self):
        """500 random ideals: reduced bases match sympy's grevlex bases."""
        rng = random.Random(20240502)
        for _ in range(500):
            nvars = rng.choice([2, 3])
            _, generators = random_ideal(rng, QQ, nvars, rng.randint(1, 3))
            result = buchberger(generators, interreduce=True)
            ours = {as_key(g) for g in result.basis}
            assert ours == sympy_basis(generators, nvars)

    def test_against_sympy_over_fp(self):
        rng = random.Random(20240503)
        for _ in range(100):
            p = rng.choice([3, 5, 7])
            nvars = rng.choice([2, 3])
            _, generators = random_ideal(rng, PrimeField(p), nvars, rng.randint(1, 3))
            result = buchberger(generators, interreduce=True)
            ours = {as_key(g, p) for g in result.basis}
            assert ours == sympy_basis(generators, nvars, p)

    def test_product_criterion_same_reduced_basis(self):
        rng = random.Random(11)
        for _ in range(50):
            _, generators = random_ideal(rng, QQ, 3, 3)
            plain = buchberger(generators, interreduce=True).basis
            skipping = buchberger(generators, interreduce=True, product_criterion=True).basis
            assert plain == skipping

    def test_generators_reduce_to_zero(self):
        rng = random.Random(13)
        for _ in range(50):
            _, generators = random_ideal(rng, QQ, 3, 2)
            basis = list(buchberger(generators).basis)
            for g in generators:
                assert divide(g, basis).remainder.is_zero()

    def test_every_s_pair_of_raw_basis_reduces_to_zero(self):
        rng = random.Random(23)
        for _ in range(100):
            field = rng.choice([QQ, PrimeField(5)])
            _, generators = random_ideal(rng, field, rng.choice([2, 3]), rng.randint(1, 3))
            basis = list(buchberger(generators).basis)
            for j in range(len(basis)):
                for i in range(j):
                    assert s_pair_reduce(i, j, basis).reduces_to_zero

    @pytest.mark.parametrize("r,s,n", [(1, 1, 1), (1, 2, 1), (2, 2, 1)])
    def test_s_pairs_of_sos_bases_reduce_to_zero(self, r, s, n):
        basis = list(buchberger(gen_sos_ideal(SosType(r, s, n)).generators).basis)
        for j in range(len(basis)):
            for i in range(j):
                assert s_pair_reduce(i, j, basis).reduces_to_zero


class TestTrace:
    def test_max_p_monotone(self):
        rng = random.Random(17)
        for _ in range(30):
            _, generators = random_ideal(rng, QQ, 3, 3)
            trace = buchberger(generators).trace
            assert len(trace.max_p_by_step) == trace.extensions + 1
            assert trace.max_p_by_step == sorted(trace.max_p_by_step)
            assert trace_max_p(trace) == trace.max_p_by_step[-1]

    def test_steps_recorded_per_pair(self):
        trace = buchberger(gen_sos_ideal(SosType(1, 2, 1)).generators).trace
        assert len(trace.steps) == trace.pairs_processed
        assert sum(step.extended for step in trace.steps) == trace.extensions

    def test_finite_field_has_no_p_measure(self):
        ring = PolynomialRing(PrimeField(5), 1)
        (x,) = ring.variables()
        trace = buchberger([x * x - 1]).trace
        assert not trace.rational
        assert trace.max_p_by_step == []
        with pytest.raises(TraceUnavailableError):
            trace_max_p(trace)
        with pytest.raises(TraceUnavailableError):
            exceptional_primes(trace)

    def test_exceptional_primes_of_generators(self):
        ring = PolynomialRing(QQ, 1)
        (x,) = ring.variables()
        assert exceptional_primes(buchberger([3 * x - 2]).trace) == [2, 3]
        assert exceptional_primes(buchberger([x * x - 1]).trace) == []

    def test_unexceptional_primes_agree(self):
        """Primes outside the exceptional list give the same properness as Q."""
        rng = random.Random(19)
        for _ in range(60):
            _, generators = random_ideal(rng, QQ, 2, rng.randint(2, 3))
            result = buchberger(generators)
            bad = set(exceptional_primes(result.trace))
            for p in (3, 5, 7, 11, 13):
                if p in bad:
                    continue
                reduced = [g.change_field(PrimeField(p)) for g in generators]
                assert is_proper(reduced) == result.is_proper


class TestSosIdealProperness:
    @pytest.mark.parametrize("r,s,n", [(1, 2, 1), (2, 2, 1)])
    @pytest.mark.parametrize("field", [QQ, PrimeField(3), PrimeField(5), PrimeField(7)])
    def test_no_formula(self, r, s, n, field):
        spec = gen_sos_ideal(SosType(r, s, n), field)
        assert not buchberger(spec.generators).is_proper

    @pytest.mark.parametrize("r,s,n", [(1, 1, 1), (1, 2, 2), (2, 1, 2)])
    def test_formula_exists(self, r, s, n):
        spec = gen_sos_ideal(SosType(r, s, n))
        assert buchberger(spec.generators).is_proper

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_agrees_mod_p(self, p):
        spec = gen_sos_ideal(SosType(1, 2, 1))
        assert agrees_mod_p(spec.generators, p)

    @pytest.mark.slow
    def test_two_two_two_over_f101(self):
        spec = gen_sos_ideal(SosType(2, 2, 2), PrimeField(101))
        assert buchberger(spec.generators).is_proper

    def test_rational_coefficients_survive(self):
        ring = PolynomialRing(QQ, 1)
        (x,) = ring.variables()
        assert is_proper([Rational(1, 3) * x * x - Rational(2, 5)])
