"""
Brute-force Satake transform of minuscule generators.

For lambda = lambda_k on GL_m and nu in Z^m the coefficient of e^nu in
S(1_{K lambda K}) is

    delta^(1/2)(nu(w)) * #{u in U(F)/U(O) : nu(w) u in K lambda K}.

Right cosets uU(O) have unique representatives whose strictly-upper
entries are principal parts (support in negative exponents), so the
enumeration dedupes by entry tuple.
"""

from __future__ import annotations

import itertools
import time
from typing import Dict, Iterator, List, Sequence, Tuple

from loguru import logger

from cosets import Factor, MinusculeCochar, gaussian_binomial
from groups import Mat, cartan_invariants
from localfield import FieldElem, LaurentPoly, check_prime
from utils import CheckStatus, OperationBudget, Report

from .coefficients import SLaurent

NU_RANGE = (-1, 0, 1, 2)


def _rho_pairing(a: Sequence[int], m: int) -> int:
    return sum((m + 1 - 2 * j) * a_j for j, a_j in enumerate(a, start=1))


def modulus_function(a: Sequence[int], m: int) -> SLaurent:
    """delta_B(diag(w^a)) = q^(-sum (m+1-2j) a_j), as a power of s."""
    return SLaurent.monomial(-2 * _rho_pairing(a, m))


def modulus_half(a: Sequence[int], m: int) -> SLaurent:
    """delta_B^(1/2)(diag(w^a))."""
    return SLaurent.monomial(-_rho_pairing(a, m))


def fold_count(count: int, q: int) -> SLaurent:
    """A count q^d becomes s^(2d); any other count stays a constant."""
    if count <= 0:
        return SLaurent.constant(count)
    d = 0
    rest = count
    while rest % q == 0:
        rest //= q
        d += 1
    return SLaurent.monomial(2 * d, rest)


def _principal_parts(q: int, depth: int) -> List[LaurentPoly]:
    """All Laurent polynomials with support in [-depth, 0)."""
    return [LaurentPoly.from_digits(d, q, start=-depth) for d in itertools.product(range(q), repeat=depth)]


def _row_depths(lam: MinusculeCochar, nu: Sequence[int]) -> List[int]:
    bound = (max(lam.exponents) - min(lam.exponents)) + max(abs(v) for v in nu)
    return [min(bound, max(v, 0)) for v in nu]


def unipotent_count(lam: MinusculeCochar, nu: Sequence[int], q: int, budget: OperationBudget = None) -> int:
    """#{u in U(F)/U(O) : nu(w) u in K lambda K}."""
    m = lam.size
    if len(nu) != m:
        raise ValueError(f"nu has length {len(nu)}, expected {m}")
    if sum(nu) != lam.k or min(nu) < 0:
        return 0
    depths = _row_depths(lam, nu)
    slots = [(i, j) for i in range(m) for j in range(i + 1, m)]
    choices = [_principal_parts(q, depths[i]) for i, _ in slots]
    total = 1
    for c in choices:
        total *= len(c)
    if budget is not None:
        budget.charge(total, f"Satake enumeration for {lam.symbol}, nu={tuple(nu)}")
    target = lam.exponents
    count = 0
    for values in itertools.product(*choices):
        rows = [[FieldElem.zero(q)] * m for _ in range(m)]
        for i in range(m):
            rows[i][i] = FieldElem.w_power(nu[i], q)
        for (i, j), poly in zip(slots, values):
            if not poly.is_zero():
                rows[i][j] = FieldElem.from_poly(poly.shift(nu[i]))
        if cartan_invariants(Mat(tuple(tuple(r) for r in rows), q)) == target:
            count += 1
    return count


def satake_transform_bruteforce(lam: MinusculeCochar, nu: Sequence[int], q: int,
                                budget: OperationBudget = None) -> SLaurent:
    """Coefficient of e^nu in the Satake transform of 1_{K lambda K}."""
    check_prime(q)
    count = unipotent_count(lam, nu, q, budget)
    if not count:
        return SLaurent()
    return modulus_half(nu, lam.size) * fold_count(count, q)


def weight_candidates(m: int, k: int) -> Iterator[Tuple[int, ...]]:
    """nu in {-1, 0, 1, 2}^m with sum k: the Weyl orbit of lambda_k plus its neighbours."""
    for nu in itertools.product(NU_RANGE, repeat=m):
        if sum(nu) == k:
            yield nu


def expected_coefficient(lam: MinusculeCochar, nu: Sequence[int]) -> SLaurent:
    """s^(k(m-k)) on the Weyl orbit of lambda_k, zero elsewhere."""
    if sorted(nu) == sorted(lam.exponents):
        return SLaurent.monomial(lam.k * (lam.size - lam.k))
    return SLaurent()


def verify_dictionary(n: int, q: int, budget: OperationBudget = None) -> Report:
    """Check S(T_{k,V}) = s^(k(n+1-k)) m_{lambda_k} and S(T_{k,W}) = s^(k(n-k)) m_{lambda_k}."""
    check_prime(q)
    start = time.perf_counter()
    params = {"n": n, "q": q}
    counts: Dict[str, int] = {}
    for factor in (Factor.V, Factor.W):
        m = n + 1 if factor == Factor.V else n
        for k in range(1, m + 1):
            lam = MinusculeCochar(factor, k, n)
            mass = 0
            for nu in weight_candidates(m, k):
                raw = unipotent_count(lam, nu, q, budget)
                mass += raw
                got = modulus_half(nu, m) * fold_count(raw, q) if raw else SLaurent()
                want = expected_coefficient(lam, nu)
                if got != want:
                    logger.error(f"Satake mismatch for {lam.symbol} at nu={nu}: {got} != {want}")
                    return Report(check="satake-dictionary", params=params, status=CheckStatus.FAIL,
                                  witness={"generator": lam.symbol, "nu": list(nu),
                                           "computed": got.render(), "expected": want.render()},
                                  millis=int((time.perf_counter() - start) * 1000))
            cosets = gaussian_binomial(m, k, q)
            if mass != cosets:
                return Report(check="satake-dictionary", params=params, status=CheckStatus.FAIL,
                              witness={"generator": lam.symbol, "total_mass": mass, "cosets": cosets},
                              millis=int((time.perf_counter() - start) * 1000))
            counts[lam.symbol] = mass
    logger.info(f"Satake dictionary verified for n={n}, q={q}")
    return Report(check="satake-dictionary", params=params, status=CheckStatus.PASS, counts=counts,
                  millis=int((time.perf_counter() - start) * 1000))
