"""
Tests for the Hecke polynomial construction, its fixtures and the Satake oracle.
"""

import random
from fractions import Fraction
from pathlib import Path

import pytest

from cosets import Factor, MinusculeCochar
from hecke import (
    SLaurent,
    SymPoly,
    build_hecke_polynomial,
    diff_against_fixture,
    elementary_of_products,
    expand_product,
    expand_product_raw,
    fixture_path,
    load_fixture,
    modulus_function,
    newton_girard,
    parse_polynomial,
    satake_substitute,
    satake_transform_bruteforce,
    specialize,
    tilde_specialize,
    verify_dictionary,
    write_fixture,
)
from utils import DomainError, NormalizationError, OperationBudget, ResourceError

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures" / "v1"


def _elementary_values(values, p):
    """e_0..e_len of ``values`` modulo p."""
    e = [1] + [0] * len(values)
    for v in values:
        for k in range(len(values), 0, -1):
            e[k] = (e[k] + e[k - 1] * v) % p
    return e


def _evaluate(monomial_dict, xs_e, ys_e, n, p):
    total = 0
    for monomial, coeff in monomial_dict.items():
        term = coeff
        for idx, power in enumerate(monomial[:n + 1]):
            term *= xs_e[idx + 1] ** power
        for idx, power in enumerate(monomial[n + 1:]):
            term *= ys_e[idx + 1] ** power
        total += term
    return total % p


class TestSLaurent:
    """Coefficient ring Z[s, 1/s]."""

    def test_arithmetic(self):
        a = SLaurent({2: 1, 4: -2})
        assert a + a == SLaurent({2: 2, 4: -4})
        assert (a * SLaurent.monomial(-2)).terms == ((0, 1), (2, -2))
        assert not (a - a)

    def test_specialize(self):
        assert SLaurent({2: 1, 4: -2}).specialize(3) == Fraction(3 - 18)

    def test_odd_power_rejected(self):
        with pytest.raises(NormalizationError):
            SLaurent.monomial(3).specialize(5)

    def test_render(self):
        assert SLaurent({2: 1, 4: -2}).render() == "s^2 - 2*s^4"
        assert SLaurent.constant(-1).render() == "-1"


class TestNewtonGirard:
    """Power sums through elementary symmetric functions."""

    def test_small_cases(self):
        p2 = newton_girard(2, 2)
        assert p2.as_dict() == {(2, 0): 1, (0, 1): -2}
        p1 = newton_girard(1, 3, "X")
        assert p1.as_dict() == {(1, 0, 0): 1}

    def test_invalid_degree(self):
        with pytest.raises(DomainError):
            newton_girard(0, 2)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_numeric_identity(self, n):
        rng = random.Random(n)
        for _ in range(5):
            values = [rng.randint(-4, 4) for _ in range(n)]
            e = [1] + [0] * n
            for v in values:
                for k in range(n, 0, -1):
                    e[k] += e[k - 1] * v
            for k in range(1, 2 * n + 2):
                poly = newton_girard(k, n)
                assert poly.eval(dict(zip(poly.gens, e[1:]))) == sum(v ** k for v in values)


class TestExpandProduct:
    """Product over all pairs, rewritten in elementary symmetric functions."""

    def test_n1_coefficients(self):
        e = elementary_of_products(1)
        assert e[1] == {(1, 0, 1): 1}
        assert e[2] == {(0, 1, 2): 1}

    @pytest.mark.parametrize("n", [1, 2])
    def test_power_sum_route_matches_raw_reduction(self, n):
        assert expand_product(n).coefficients == expand_product_raw(n).coefficients

    @pytest.mark.slow
    def test_raw_reduction_n3(self):
        assert expand_product(3).coefficients == expand_product_raw(3).coefficients

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_identity_over_f7(self, n):
        p = 7
        rng = random.Random(70 + n)
        elems = elementary_of_products(n)
        for _ in range(10):
            xs = [rng.randrange(p) for _ in range(n + 1)]
            ys = [rng.randrange(p) for _ in range(n)]
            products = [x * y for x in xs for y in ys]
            direct = _elementary_values(products, p)
            xs_e, ys_e = _elementary_values(xs, p), _elementary_values(ys, p)
            for k, element in enumerate(elems):
                assert _evaluate(element, xs_e, ys_e, n, p) == direct[k]

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            expand_product(5)


class TestHeckePolynomial:
    """The symbolic polynomials and their fixtures."""

    def test_n1(self):
        poly = build_hecke_polynomial(1)
        assert poly.render() == "z^2 : 1\nz^1 : -T1V*T1W\nz^0 : s^2*T2V*T1W^2\n"

    def test_n2_selected_coefficients(self):
        poly = build_hecke_polynomial(2)
        lines = poly.render().splitlines()
        assert lines[0] == "z^6 : 1"
        assert lines[1] == "z^5 : -T1V*T1W"
        assert lines[2] == "z^4 : s^2*T1V^2*T2W + s^2*T2V*T1W^2 - 2*s^4*T2V*T2W"
        assert lines[6] == "z^0 : s^18*T3V^2*T2W^3"

    def test_satake_substitute_n1(self):
        assert satake_substitute(expand_product(1)).render() == build_hecke_polynomial(1).render()

    def test_satake_substitute_rejects_odd_power(self):
        with pytest.raises(NormalizationError):
            satake_substitute(SymPoly(1, {1: {(1, 0, 1): SLaurent.constant(1)}}))

    @pytest.mark.parametrize("n", [1, 2])
    def test_matches_fixture(self, n):
        assert diff_against_fixture(build_hecke_polynomial(n), fixture_path(n, FIXTURES)) == []

    @pytest.mark.slow
    def test_n3_is_monic_with_even_powers(self):
        poly = build_hecke_polynomial(3)
        assert poly.is_monic()
        assert poly.degree == 12
        assert all(e % 2 == 0 for e in poly.s_exponents())

    def test_fixture_round_trip(self, tmp_path):
        poly = build_hecke_polynomial(2)
        path = write_fixture(poly, tmp_path)
        assert load_fixture(path, 2).coefficients == poly.coefficients

    def test_fixture_diff_reports_changes(self, tmp_path):
        path = tmp_path / "hecke_n1.txt"
        path.write_text("z^2 : 1\nz^1 : T1V*T1W\nz^0 : s^2*T2V*T1W^2\n")
        problems = diff_against_fixture(build_hecke_polynomial(1), path)
        assert len(problems) == 1
        assert problems[0].startswith("z^1:")

    def test_malformed_fixture(self):
        with pytest.raises(DomainError):
            parse_polynomial("z^2 : T9V\n", 1)

    def test_specialize(self):
        poly = specialize(build_hecke_polynomial(1), 3)
        assert poly.coefficient(0) == {(0, 1, 2): Fraction(3)}
        assert poly.is_monic()

    def test_tilde_specialize_scales_by_power(self):
        poly = tilde_specialize(build_hecke_polynomial(2), 2)
        assert poly.coefficient(5) == {(1, 0, 0, 1, 0): Fraction(-(2 ** 5))}


class TestSatake:
    """Brute-force Satake transform of minuscule generators."""

    def test_modulus(self):
        assert modulus_function((1, 0), 2) == SLaurent.monomial(-2)

    def test_gl2_weights(self):
        lam = MinusculeCochar(Factor.V, 1, 1)
        assert satake_transform_bruteforce(lam, (1, 0), 3) == SLaurent.monomial(1)
        assert satake_transform_bruteforce(lam, (0, 1), 3) == SLaurent.monomial(1)
        assert not satake_transform_bruteforce(lam, (2, -1), 3)

    def test_central_generator(self):
        lam = MinusculeCochar(Factor.V, 2, 1)
        assert satake_transform_bruteforce(lam, (1, 1), 5) == SLaurent.constant(1)

    @pytest.mark.parametrize("n,q", [(1, 2), (1, 3), (2, 2)])
    def test_dictionary(self, n, q):
        report = verify_dictionary(n, q)
        assert report.passed, report.witness

    def test_budget_refusal(self):
        with pytest.raises(ResourceError):
            verify_dictionary(2, 3, OperationBudget(cap=5))
