"""
Tests for formal sums, minuscule double cosets and the Hecke action.
"""

import random
from fractions import Fraction

import pytest

from cosets import (
    Factor,
    FormalSum,
    MinusculeCochar,
    apply_generator,
    base_class,
    bfs_double_coset_keys,
    decompose_double_coset,
    gaussian_binomial,
    evaluate_hecke_poly,
    hecke_apply,
    left_translate_cosets,
    unit_monomial,
)
from groups import coset_canonical_form, coset_pair_key, random_group_element, random_h
from hecke import HeckePolynomial, SLaurent
from utils import CoefficientError, DomainError


def _random_sum(rng, n, q, terms=3):
    return FormalSum.from_pairs(
        (coset_pair_key(random_group_element(rng, n, q, spread=1)), rng.randint(-3, 3)) for _ in range(terms)
    )


class TestFormalSum:
    """Module structure of finitely supported sums."""

    def test_zero_coefficients_dropped(self):
        s = FormalSum({"a": 1, "b": 0})
        assert list(s.keys()) == ["a"]
        assert not (FormalSum.basis("a") - FormalSum.basis("a"))

    def test_module_axioms(self):
        x = FormalSum({"a": 2, "b": Fraction(1, 2)})
        y = FormalSum({"b": 3, "c": -1})
        assert x + y == y + x
        assert 2 * (x + y) == 2 * x + 2 * y
        assert (x + y)["b"] == Fraction(7, 2)
        assert 0 * x == FormalSum.zero()

    def test_map_keys_merges(self):
        x = FormalSum({"a1": 1, "a2": 2, "b": 5})
        assert x.map_keys(lambda k: k[0]) == FormalSum({"a": 3, "b": 5})


class TestDoubleCosets:
    """Decompositions of K lambda K."""

    def test_gl2_count(self):
        assert len(decompose_double_coset(MinusculeCochar(Factor.V, 1, 1), 3)) == 4

    def test_gl3_count(self):
        assert len(decompose_double_coset(MinusculeCochar(Factor.V, 1, 2), 2)) == 7

    def test_central(self):
        assert len(decompose_double_coset(MinusculeCochar(Factor.V, 3, 2), 5)) == 1

    def test_index_range(self):
        with pytest.raises(DomainError):
            MinusculeCochar(Factor.W, 2, 1)

    def test_gaussian_binomial_values(self):
        assert gaussian_binomial(2, 1, 3) == 4
        assert gaussian_binomial(3, 1, 2) == 7
        assert gaussian_binomial(4, 2, 2) == 35

    @pytest.mark.parametrize("q", [2, 3])
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_explicit_family_matches_oracle(self, m, q):
        for k in range(1, m + 1):
            lam = MinusculeCochar(Factor.V, k, m - 1) if m > 1 else MinusculeCochar(Factor.W, 1, 1)
            explicit = {coset_canonical_form(g) for g in decompose_double_coset(lam, q)}
            assert len(explicit) == gaussian_binomial(m, k, q)
            assert explicit == bfs_double_coset_keys(m, k, q)

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_oracle_q5(self, m):
        for k in range(1, m + 1):
            assert len(bfs_double_coset_keys(m, k, 5)) == gaussian_binomial(m, k, 5)


class TestHeckeAction:
    """Right convolution by minuscule generators."""

    def test_empty_monomial_is_identity(self):
        x = FormalSum.basis(base_class(1, 3))
        assert hecke_apply(unit_monomial(1), x, 1) == x

    def test_w_factor_gl1(self):
        x = hecke_apply((0, 0, 1), FormalSum.basis(base_class(1, 3)), 1)
        assert len(x) == 1
        key = next(iter(x))
        assert key.second.exponents == (1,)
        assert key.first.exponents == (0, 0)

    def test_t1v_on_base_class(self):
        x = hecke_apply((1, 0, 0), FormalSum.basis(base_class(1, 2)), 1)
        assert len(x) == 3
        assert all(c == 1 for _, c in x.items())

    @pytest.mark.parametrize("n,q,trials", [(1, 2, 20), (1, 3, 20), (2, 2, 4)])
    def test_generators_commute(self, n, q, trials):
        rng = random.Random(n * 100 + q)
        gens = [MinusculeCochar(Factor.V, k, n) for k in range(1, n + 2)]
        gens += [MinusculeCochar(Factor.W, k, n) for k in range(1, n + 1)]
        for _ in range(trials):
            x = _random_sum(rng, n, q, terms=2)
            a, b = rng.sample(gens, 2)
            assert apply_generator(a, apply_generator(b, x)) == apply_generator(b, apply_generator(a, x))

    @pytest.mark.parametrize("n,q", [(1, 3), (2, 2)])
    def test_left_translation_commutes(self, n, q):
        rng = random.Random(q)
        lam = MinusculeCochar(Factor.V, 1, n)
        for _ in range(5):
            x = _random_sum(rng, n, q, terms=2)
            h = random_h(rng, n, q, spread=1)
            lhs = left_translate_cosets(h, apply_generator(lam, x))
            rhs = apply_generator(lam, left_translate_cosets(h, x))
            assert lhs == rhs


class TestEvaluatePolynomial:
    """sum_k A_k X^k x0 with an arbitrary operator X."""

    @pytest.fixture
    def x0(self):
        return FormalSum.basis(base_class(1, 3))

    def test_linear_polynomial(self, x0):
        unit = unit_monomial(1)
        poly = HeckePolynomial(1, {0: {unit: Fraction(2)}, 1: {unit: Fraction(-1)}}, q=3)
        assert evaluate_hecke_poly(poly, x0, lambda x: x + x) == FormalSum.zero()
        assert evaluate_hecke_poly(poly, x0, lambda x: x) == x0

    def test_symbolic_coefficients_take_q_from_the_sum(self, x0):
        poly = HeckePolynomial(1, {0: {unit_monomial(1): SLaurent.monomial(2)}})
        assert evaluate_hecke_poly(poly, x0, lambda x: x) == 3 * x0

    def test_symbolic_on_empty_sum(self):
        poly = HeckePolynomial(1, {0: {unit_monomial(1): SLaurent.constant(1)}})
        with pytest.raises(CoefficientError):
            evaluate_hecke_poly(poly, FormalSum.zero(), lambda x: x)
