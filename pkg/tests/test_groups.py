"""
Tests for matrices, Cartan invariants, coset keys and subgroup membership.
"""

import random

import pytest

from groups import (
    GroupElement,
    Mat,
    SubgroupSpec,
    SubgroupTag,
    cartan_invariants,
    coset_canonical_form,
    embed_iota,
    is_member,
    random_k,
    random_matrix,
)
from localfield import FieldElem, LaurentPoly, parse_field_elem
from utils import DomainError

K = SubgroupSpec(SubgroupTag.K)


class TestEmbedding:
    """The embedding iota: GL_n -> GL_{n+1}."""

    def test_identity(self):
        assert embed_iota(Mat.identity(2, 3)) == Mat.identity(3, 3)

    def test_diagonal(self):
        assert embed_iota(Mat.w_diag([1, 0, 0], 3)) == Mat.w_diag([1, 0, 0, 0], 3)

    def test_unit_n1(self):
        u = FieldElem.from_int(2, 5)
        assert embed_iota(Mat.diag([u], 5)) == Mat.diag([u, 1], 5)


class TestMembership:
    """Subgroup predicates."""

    def test_k(self):
        assert not is_member(Mat.w_diag([1, 0], 3), K)
        assert is_member(Mat.from_rows([[1, 2], [1, 0]], 3), K)

    def test_iwahori(self):
        iwahori = SubgroupSpec(SubgroupTag.IWAHORI)
        assert is_member(Mat.from_rows([[1, 1], [FieldElem.w_power(1, 3), 1]], 3), iwahori)
        assert not is_member(Mat.from_rows([[1, 1], [1, 0]], 3), iwahori)

    def test_iwahori_plus(self):
        a = parse_field_elem("1+2*w", 3)
        assert is_member(Mat.from_rows([[1, a], [0, 1]], 3), SubgroupSpec(SubgroupTag.IWAHORI_PLUS))
        b = parse_field_elem("w^-1", 3)
        assert not is_member(Mat.from_rows([[1, b], [0, 1]], 3), SubgroupSpec(SubgroupTag.IWAHORI_PLUS))

    def test_h_levels(self):
        h = Mat.diag([parse_field_elem("1+w", 3), 1], 3)
        d = GroupElement.delta(h)
        assert is_member(d, SubgroupSpec.h_c(1))
        assert not is_member(d, SubgroupSpec.h_c(2))
        assert is_member(d, SubgroupSpec.h_c(0))
        assert not is_member(d, SubgroupSpec(SubgroupTag.H_DER))

    def test_non_diagonal_pair_not_in_h(self):
        g = GroupElement(Mat.w_diag([1, 0], 3), Mat.w_diag([0], 3))
        assert not is_member(g, SubgroupSpec(SubgroupTag.H))

    def test_delta_k2(self):
        spec = SubgroupSpec(SubgroupTag.DELTA_K2)
        assert is_member(GroupElement.delta(Mat.from_rows([[0, 1], [1, 1]], 5)), spec)
        assert not is_member(GroupElement.delta(Mat.w_diag([1, 0], 5)), spec)


class TestCartan:
    """Cartan invariants by Smith reduction."""

    def test_examples(self):
        w = FieldElem.w_power(1, 3)
        assert cartan_invariants(Mat.w_diag([2, 0], 3)) == (2, 0)
        assert cartan_invariants(Mat.from_rows([[w, 1], [0, w]], 3)) == (2, 0)
        assert cartan_invariants(Mat.identity(3, 3)) == (0, 0, 0)

    def test_singular(self):
        with pytest.raises(DomainError):
            cartan_invariants(Mat.from_rows([[1, 1], [1, 1]], 3))

    @pytest.mark.parametrize("q,size", [(2, 2), (3, 2), (3, 3), (5, 3)])
    def test_properties(self, q, size):
        rng = random.Random(q * 10 + size)
        for _ in range(20):
            g = random_matrix(rng, size, q)
            inv = cartan_invariants(g)
            moved = random_k(rng, size, q) * g * random_k(rng, size, q)
            assert cartan_invariants(moved) == inv
            assert cartan_invariants(g.inverse()) == tuple(-a for a in reversed(inv))
            assert sum(inv) == g.det().valuation


class TestCosetKey:
    """Column-Hermite keys of gK."""

    def test_k_gives_identity_key(self):
        rng = random.Random(1)
        ident = coset_canonical_form(Mat.identity(3, 3))
        for _ in range(10):
            assert coset_canonical_form(random_k(rng, 3, 3)) == ident

    def test_hermite_example(self):
        w = FieldElem.w_power(1, 3)
        key = coset_canonical_form(Mat.from_rows([[w, 1], [0, 1]], 3))
        assert key.exponents == (1, 0)
        assert key.entries == ((0, 1, LaurentPoly.constant(1, 3)),)
        assert key.token() == "[e=1,0; u12=1]"

    def test_off_diagonal_reduced_mod_pivot(self):
        w = FieldElem.w_power(1, 5)
        key = coset_canonical_form(Mat.from_rows([[w, w + 3], [0, 1]], 5))
        assert key.entries == ((0, 1, LaurentPoly.constant(3, 5)),)

    @pytest.mark.parametrize("q,size", [(2, 2), (3, 3)])
    def test_right_k_invariance(self, q, size):
        rng = random.Random(q + size)
        for _ in range(100 if size == 2 else 30):
            g = random_matrix(rng, size, q)
            assert coset_canonical_form(g * random_k(rng, size, q)) == coset_canonical_form(g)

    def test_representative_round_trip(self):
        rng = random.Random(5)
        for _ in range(20):
            key = coset_canonical_form(random_matrix(rng, 3, 3))
            assert coset_canonical_form(key.to_matrix()) == key

    def test_keys_agree_exactly_on_same_coset(self):
        rng = random.Random(9)
        for _ in range(40):
            g = random_matrix(rng, 2, 3, spread=1)
            h = random_matrix(rng, 2, 3, spread=1) if rng.random() < 0.5 else g * random_k(rng, 2, 3)
            same = coset_canonical_form(g) == coset_canonical_form(h)
            assert same == is_member(g.inverse() * h, K)
