"""
Tests for local order unit indices and the Galois degree.
"""

from fractions import Fraction

import pytest

from orders import (
    INERT,
    SPLIT,
    LocalOrderParams,
    bruteforce_step_index,
    bruteforce_unit_index,
    check_local_orders,
    galois_degree,
    irreducible_quadratic,
    step_index,
    unit_index,
)
from utils import CheckStatus, DomainError, OperationBudget, ResourceError


class TestUnitIndex:
    """#(O_0^x / O_c^x) = q^{c-1}(q - eps)."""

    @pytest.mark.parametrize("eps,c,q,expected", [(SPLIT, 1, 3, 2), (SPLIT, 2, 3, 6), (INERT, 1, 3, 4),
                                                  (INERT, 3, 2, 12), (SPLIT, 0, 5, 1)])
    def test_values(self, eps, c, q, expected):
        assert unit_index(LocalOrderParams(q, eps, c)) == expected

    @pytest.mark.parametrize("q", [2, 3, 5])
    @pytest.mark.parametrize("eps", [SPLIT, INERT])
    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_bruteforce(self, q, eps, c):
        assert bruteforce_unit_index(q, eps, c) == unit_index(LocalOrderParams(q, eps, c))

    def test_bruteforce_conductor_zero(self):
        assert bruteforce_unit_index(3, INERT, 0) == 1

    def test_invalid_params(self):
        with pytest.raises(DomainError):
            LocalOrderParams(3, 0, 1)
        with pytest.raises(DomainError):
            LocalOrderParams(3, SPLIT, -1)
        with pytest.raises(DomainError):
            LocalOrderParams(4, SPLIT, 1)

    def test_cap(self):
        with pytest.raises(ResourceError):
            bruteforce_unit_index(5, SPLIT, 3, OperationBudget(cap=100))

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_irreducible_quadratic(self, q):
        a1, a0 = irreducible_quadratic(q)
        assert all((x * x - a1 * x - a0) % q for x in range(q))


class TestStepIndex:
    """O_c^x / O_{c+k}^x against (F_q[w]/w^k [e])^x / (F_q[w]/w^k)^x."""

    @pytest.mark.parametrize("q,c,k,expected", [(3, 1, 1, 3), (2, 2, 2, 4), (5, 3, 2, 25)])
    def test_values(self, q, c, k, expected):
        assert step_index(q, c, k) == expected
        assert bruteforce_step_index(q, c, k) == expected

    def test_outside_hypothesis(self):
        with pytest.raises(DomainError):
            step_index(3, 1, 2)
        with pytest.raises(DomainError):
            bruteforce_step_index(3, 2, 0)

    @pytest.mark.parametrize("eps", [SPLIT, INERT])
    def test_multiplicativity(self, eps):
        q = 3
        for c in range(1, 4):
            for k in range(1, c + 1):
                assert unit_index(LocalOrderParams(q, eps, c + k)) == \
                    unit_index(LocalOrderParams(q, eps, c)) * step_index(q, c, k)


class TestGaloisDegree:
    """(q - eps) / u(r)."""

    def test_values(self):
        assert galois_degree(5, SPLIT, 1, 1) == 4
        assert galois_degree(5, SPLIT, 0, 2) == 2
        assert galois_degree(3, INERT, 0, 1) == 4
        assert galois_degree(5, SPLIT, 2, 3) == 4

    def test_inconsistent_u0(self):
        assert galois_degree(5, SPLIT, 0, 3) == Fraction(4, 3)

    def test_invalid_u0(self):
        with pytest.raises(DomainError):
            galois_degree(5, SPLIT, 0, 0)


class TestCheck:
    """The local-orders report."""

    @pytest.mark.parametrize("q,eps", [(2, SPLIT), (3, INERT), (5, SPLIT)])
    def test_passes(self, q, eps):
        report = check_local_orders(q, eps, cmax=3)
        assert report.status == CheckStatus.PASS
        assert report.counts["unit_index c=1"] == q - eps
        assert report.counts["galois_degree r>=1"] == q - eps

    def test_cap_skips(self):
        assert check_local_orders(5, INERT, cmax=3, cap=50).status == CheckStatus.SKIP
