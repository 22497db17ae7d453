"""
H_w(U) [1] = 0: the Hecke polynomial annihilates the U-operator on [1].
"""

from __future__ import annotations

from loguru import logger

from cosets import FormalSum, base_class, decompose_double_coset, evaluate_hecke_poly, monomial_generators
from hecke import HeckePolynomial, build_hecke_polynomial, specialize
from iwahori import UConfig, u_step
from utils import CheckStatus, OperationBudget, Report, Stopwatch, fail_report, guarded

CHECK = "root-identity"


def _monomial_cost(monomial, n: int, q: int) -> int:
    """Operations charged by one monomial acting on one coset, before merging."""
    running, cost = 1, 0
    for lam, power in monomial_generators(monomial, n):
        width = len(decompose_double_coset(lam, q))
        for _ in range(power):
            cost += running * width
            running *= width
    return cost


def estimate_cost(poly: HeckePolynomial, n: int, q: int) -> int:
    """Group operations for sum_k A_k U^k [1], counted before cancellation."""
    total = 0
    for k in range(poly.degree + 1):
        size = UConfig(n, q, k).size
        total += size
        total += size * sum(_monomial_cost(m, n, q) for m in poly.coefficient(k))
    return total


def _run(n: int, q: int, budget: OperationBudget) -> Report:
    watch = Stopwatch()
    params = {"n": n, "q": q}
    poly = specialize(build_hecke_polynomial(n), q)
    estimate = estimate_cost(poly, n, q)
    budget.require(estimate, f"H_w(U)[1] for n={n}, q={q}")
    logger.info(f"Checking H_w(U)[1] = 0 for n={n}, q={q} (estimated {estimate} operations)")
    result = evaluate_hecke_poly(poly, FormalSum.basis(base_class(n, q)), lambda x: u_step(x, budget), budget)
    counts = {"degree": poly.degree, "estimated_operations": estimate, "operations": budget.spent}
    if result:
        key, coeff = result.sorted_items()[0]
        return fail_report(CHECK, params, {"surviving_terms": len(result), "key": key.token(), "coefficient": str(coeff)},
                           watch.millis, counts)
    logger.info(f"H_w(U)[1] vanishes for n={n}, q={q}")
    return Report(check=CHECK, params=params, status=CheckStatus.PASS, counts=counts, millis=watch.millis)


def check_root_identity(n: int, q: int, cap: int = 10_000_000) -> Report:
    """Full zero test of sum_k A_k U^k [1]; SKIP when the run would exceed the cap."""
    params = {"n": n, "q": q}
    return guarded(CHECK, params, lambda: _run(n, q, OperationBudget(cap)))
