"""
Tests for exact arithmetic in F_q((w)).
"""

import math
import random

import pytest
from sympy import Poly, symbols

from localfield import (
    FieldElem,
    LaurentPoly,
    ResidueScalar,
    field_arith,
    parse_field_elem,
    poly_divmod,
    poly_gcd,
    series_truncate,
    valuation,
)
from utils import DomainError


def _random_elem(rng: random.Random, q: int) -> FieldElem:
    """Random fraction with small support, occasionally zero."""
    def poly(low):
        items = [(e, rng.randrange(q)) for e in range(low, low + rng.randint(1, 3))]
        return LaurentPoly.from_items(items, q)

    num = poly(rng.randint(-2, 2))
    den = poly(rng.randint(-1, 1))
    while den.is_zero():
        den = poly(0)
    return FieldElem.fraction(num, den)


class TestResidueScalar:
    """Field axioms of F_q."""

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_inverses(self, q):
        for v in range(1, q):
            x = ResidueScalar(v, q)
            assert (x * x.inverse()).value == 1
            assert (x + (-x)).value == 0

    def test_non_prime_rejected(self):
        with pytest.raises(DomainError):
            ResidueScalar(1, 4)

    def test_zero_has_no_inverse(self):
        with pytest.raises(DomainError):
            ResidueScalar(0, 5).inverse()


class TestFieldArithmetic:
    """Exact arithmetic examples."""

    def test_inverse_pair(self):
        w = FieldElem.w_power(1, 5)
        assert (w * w.inverse()).is_one()

    def test_residue_wraparound(self):
        x = parse_field_elem("1+w", 3)
        assert field_arith(x, FieldElem.from_int(2, 3), "add") == FieldElem.w_power(1, 3)

    def test_fraction_cancellation(self):
        one_minus_w = parse_field_elem("1-w", 7)
        x = FieldElem.one(7) / one_minus_w
        assert (x * one_minus_w).is_one()

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            field_arith(FieldElem.one(3), FieldElem.zero(3), "div")

    def test_canonical_denominator(self):
        x = parse_field_elem("(2+2*w)/(2*w^2+w^3)", 5)
        assert x.den.valuation == 0
        assert x.den.lowest_coefficient == 1

    def test_canonical_idempotence(self):
        rng = random.Random(7)
        for _ in range(50):
            x = _random_elem(rng, 5)
            assert FieldElem.fraction(x.num, x.den) == x


def _mul_dense(a, b, q):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % q
    while out and out[-1] == 0:
        out.pop()
    return out


def _add_dense(a, b, q):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = (out[i] + c) % q
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % q
    while out and out[-1] == 0:
        out.pop()
    return out


class TestDensePolynomials:
    """Division and gcd over F_q, lowest degree first."""

    @pytest.mark.parametrize("q", [2, 3, 7])
    def test_division_identity(self, q):
        rng = random.Random(q)
        for _ in range(30):
            a = [rng.randrange(q) for _ in range(rng.randint(0, 6))]
            b = [rng.randrange(q) for _ in range(rng.randint(1, 4))] + [rng.randrange(1, q)]
            quotient, rem = poly_divmod(a, b, q)
            assert len(rem) < len(b)
            assert _add_dense(_mul_dense(quotient, b, q), rem, q) == _add_dense(a, [], q)

    @pytest.mark.parametrize("q", [3, 5])
    def test_gcd_agrees_with_sympy(self, q):
        x = symbols("x")
        rng = random.Random(10 + q)
        for _ in range(20):
            common = [rng.randrange(1, q), 1]
            a = _mul_dense(common, [rng.randrange(1, q) for _ in range(3)], q)
            b = _mul_dense(common, [rng.randrange(1, q) for _ in range(2)], q)
            g = poly_gcd(a, b, q)
            expected = Poly(list(reversed(a)), x, modulus=q).gcd(Poly(list(reversed(b)), x, modulus=q))
            assert len(g) - 1 == expected.degree()
            assert poly_divmod(a, g, q)[1] == []
            assert poly_divmod(b, g, q)[1] == []
            assert g[0] == 1

    def test_coprime(self):
        assert poly_gcd([1, 1], [0, 1], 3) == [1]

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            poly_divmod([1, 2], [0, 0], 5)


class TestValuation:
    """Valuations and their axioms."""

    def test_examples(self):
        assert valuation(parse_field_elem("(1+w)/w^2", 3)) == -2
        assert valuation(FieldElem.zero(3)) == math.inf
        assert valuation(parse_field_elem("w^3+w^5", 3)) == 3

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_multiplicative_and_ultrametric(self, q):
        rng = random.Random(q)
        for _ in range(1000):
            x = _random_elem(rng, q)
            y = _random_elem(rng, q)
            assert valuation(x * y) == valuation(x) + valuation(y)
            assert valuation(x + y) >= min(valuation(x), valuation(y))


class TestSeriesTruncate:
    """Truncation of fractions to Laurent polynomials."""

    def test_geometric_series(self):
        x = FieldElem.one(5) / parse_field_elem("1-w", 5)
        assert series_truncate(x, 3) == LaurentPoly.from_digits([1, 1, 1], 5)

    def test_polynomial_is_fixed(self):
        x = FieldElem.w_power(2, 3)
        assert series_truncate(x, 5) == LaurentPoly.monomial(2, 3)

    def test_long_division_over_f3(self):
        x = FieldElem.one(3) / parse_field_elem("1+w", 3)
        assert series_truncate(x, 3) == LaurentPoly.from_digits([1, 2, 1], 3)

    def test_bound_below_valuation_gives_zero(self):
        assert series_truncate(FieldElem.w_power(4, 3), 2).is_zero()

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_remainder_valuation(self, q):
        rng = random.Random(100 + q)
        for _ in range(200):
            x = _random_elem(rng, q)
            if x.is_zero():
                continue
            bound = int(valuation(x)) + rng.randint(1, 5)
            rest = x - FieldElem.from_poly(series_truncate(x, bound))
            assert valuation(rest) >= bound


class TestRendering:
    """Text round trips through the parser."""

    def test_reduced_fraction_text(self):
        x = parse_field_elem("(1+2*w)/w^2", 3)
        assert x.render() == "(1+2*w)/(w^2)"

    def test_polynomial_text(self):
        assert parse_field_elem("w^-1 + 2", 5).render() == "(1+2*w)/(w)"

    @pytest.mark.parametrize("text", ["", "1+", "(w", "w^x", "3 $ 4"])
    def test_malformed_input(self, text):
        with pytest.raises(DomainError):
            parse_field_elem(text, 3)

    def test_parse_render_stable(self):
        rng = random.Random(11)
        for _ in range(100):
            x = _random_elem(rng, 7)
            assert parse_field_elem(x.render(), 7) == x
