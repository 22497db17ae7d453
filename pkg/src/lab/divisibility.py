"""
The divisibility lemma: phi_0((U^k - q^{k(n-1)} Frob^k)[1]) vanishes modulo
q^{k(n-1)}(q-1), together with the regrouping used in its proof.

For c in S_k^n \\ {0} write c_j = w^{eps_j} gamma_j.  Diagonal matrices
c_bar in K_2 n SL_n and c_under in K_1 satisfy

    iota(c_bar) u_{k,c} c_under = diag(alpha, 1, ..., 1) u_{k,eps},

so the H_0-class of (u_{k,c}, 1) Frob^k only depends on the order pattern
eps, and the number of c with a given pattern is count_J(eps).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from cosets import FormalSum
from groups import GroupElement, Mat, coset_pair_key, embed_iota
from iwahori import UConfig, first_row_unipotent, frob_power, lifts, u_power_apply
from localfield import FieldElem, LaurentPoly, check_prime
from orbits import Level, key_of_coset, project
from utils import (
    DomainError,
    InternalError,
    OperationBudget,
    Report,
    Stopwatch,
    divisibility_status,
    fail_report,
    guarded,
)

Pattern = Tuple[Optional[int], ...]


@dataclass(frozen=True)
class EpsilonAlpha:
    """Result of decomposing u_{k,c}."""
    eps: Pattern
    alpha: FieldElem
    c_bar: Mat
    c_under: Mat

    def token(self) -> str:
        return ",".join("0" if e is None else f"w^{e}" for e in self.eps)


def order_pattern(c: Sequence[LaurentPoly]) -> Pattern:
    return tuple(None if x.is_zero() else int(x.valuation) for x in c)


def u_epsilon(eps: Pattern, n: int, q: int) -> Mat:
    """u_{k,eps}: first row (1, w^{eps_1}, ..., w^{eps_n}) with 0 for a missing order."""
    entries = [LaurentPoly.zero(q) if e is None else LaurentPoly.monomial(e, q) for e in eps]
    return first_row_unipotent(entries, n + 1, q)


def epsilon_alpha_decompose(c: Sequence[LaurentPoly], n: int, q: int, k: int) -> EpsilonAlpha:
    """eps(c), alpha(c) and the diagonal matrices, with the matrix identity verified exactly."""
    if len(c) != n:
        raise DomainError(f"c has {len(c)} entries, expected {n}")
    if all(x.is_zero() for x in c):
        raise DomainError("c must be nonzero")
    if any(not x.is_zero() and not 0 <= x.valuation < k for x in c):
        raise DomainError(f"entries of c must lie in S_{k}")
    eps = order_pattern(c)
    gamma = [None if x.is_zero() else FieldElem.from_poly(x.unit_part()) for x in c]
    star = gamma[n - 1] if gamma[n - 1] is not None else next(g for g in gamma if g is not None)
    one = FieldElem.one(q)
    beta = [one] + [gamma[j] / star if gamma[j] is not None else one for j in range(n - 1)]
    product = one
    for b in beta[1:]:
        product = product * b
    beta[0] = product.inverse()
    alpha = beta[0] * star
    c_bar = Mat.diag(beta, q)
    c_under = Mat.diag([alpha / beta[0]] + [b.inverse() for b in beta[1:]] + [one], q)
    u_c = first_row_unipotent(c, n + 1, q)
    lhs = embed_iota(c_bar) * u_c * c_under
    rhs = Mat.diag([alpha] + [one] * n, q) * u_epsilon(eps, n, q)
    if lhs != rhs:
        raise InternalError(f"decomposition identity fails for c={[x.render() for x in c]}")
    if not c_bar.det().is_one():
        raise InternalError("c_bar is not in SL_n")
    return EpsilonAlpha(eps, alpha, c_bar, c_under)


def count_J(eps: Pattern, k: int, q: int) -> int:
    """Number of c in S_k^n with order pattern eps."""
    if all(e is None for e in eps):
        raise DomainError("eps must be nonzero")
    return math.prod(q ** (k - e) - q ** (k - 1 - e) for e in eps if e is not None)


def _digit_order(digits: Tuple[int, ...]) -> Optional[int]:
    return next((i for i, d in enumerate(digits) if d), None)


def bruteforce_count_J(eps: Pattern, k: int, q: int) -> int:
    per_entry = list(itertools.product(range(q), repeat=k))
    return sum(1 for c in itertools.product(per_entry, repeat=len(eps))
               if tuple(_digit_order(d) for d in c) == tuple(eps))


def epsilon_patterns(n: int, k: int) -> List[Pattern]:
    """All nonzero order patterns in S_k^n."""
    values = [None] + list(range(k))
    return [p for p in itertools.product(values, repeat=n) if any(e is not None for e in p)]


def check_count_j(n: int, k: int, q: int) -> Report:
    """Closed formula against brute force, and divisibility by q - 1, for every pattern."""
    watch = Stopwatch()
    params = {"n": n, "k": k, "q": q}
    check_prime(q)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    for eps in epsilon_patterns(n, k):
        closed, brute = count_J(eps, k, q), bruteforce_count_J(eps, k, q)
        if closed != brute or closed % (q - 1):
            return fail_report("count-J", params, {"eps": [e for e in eps], "closed": closed, "bruteforce": brute},
                               watch.millis)
    patterns = len(epsilon_patterns(n, k))
    return Report(check="count-J", params=params, status=divisibility_status(q - 1),
                  counts={"patterns": patterns}, millis=watch.millis)


def _class_h0(g: GroupElement):
    return key_of_coset(coset_pair_key(g), Level.H0)


def regrouped_difference(n: int, q: int, k: int) -> FormalSum:
    """q^{k(n-1)} * sum_eps count_J(eps) * phi_0((u_{k,eps}, 1) Frob^k [1])."""
    frob = frob_power(k, n, q)
    identity = Mat.identity(n, q)
    scale = q ** (k * (n - 1))
    return FormalSum.from_pairs(
        (_class_h0(GroupElement(u_epsilon(eps, n, q), identity) * frob), scale * count_J(eps, k, q))
        for eps in epsilon_patterns(n, k)
    )


def _check_decompositions(n: int, q: int, k: int) -> int:
    """Every nonzero c lands in the H_0-class of its pattern."""
    frob = frob_power(k, n, q)
    identity = Mat.identity(n, q)
    checked = 0
    for c in itertools.product(lifts(k, q), repeat=n):
        if all(x.is_zero() for x in c):
            continue
        split = epsilon_alpha_decompose(c, n, q, k)
        by_c = _class_h0(GroupElement(first_row_unipotent(c, n + 1, q), identity) * frob)
        by_eps = _class_h0(GroupElement(u_epsilon(split.eps, n, q), identity) * frob)
        if by_c != by_eps:
            raise InternalError(f"c={[x.render() for x in c]} and eps={split.token()} give different H_0-classes")
        checked += 1
    return checked


def _run(n: int, q: int, k: int, budget: OperationBudget) -> Report:
    watch = Stopwatch()
    params = {"n": n, "q": q, "k": k}
    if k < 1:
        raise DomainError(f"the divisibility lemma needs k >= 1, got {k}")
    cfg = UConfig(n, q, k)
    phi0 = project(u_power_apply(cfg, budget), Level.H0)
    frob_key = _class_h0(frob_power(k, n, q))
    scale = q ** (k * (n - 1))
    modulus = scale * (q - 1)
    counts: Dict[str, object] = {"classes": len(phi0), "total_mass": phi0.total_mass(),
                                 "frob_coefficient": phi0[frob_key], "modulus": modulus}
    if phi0.total_mass() != cfg.size:
        return fail_report("divisibility", params, {"total_mass": phi0.total_mass(), "expected": cfg.size},
                           watch.millis, counts)
    if phi0[frob_key] != scale:
        return fail_report("divisibility", params, {"frob_coefficient": phi0[frob_key], "expected": scale},
                           watch.millis, counts)
    difference = phi0 - FormalSum.basis(frob_key, scale)
    for key, coeff in difference.sorted_items():
        if coeff % modulus:
            return fail_report("divisibility", params, {"key": key.token(), "coefficient": coeff,
                                                        "modulus": modulus}, watch.millis, counts)
    regrouped = regrouped_difference(n, q, k)
    if regrouped != difference:
        return fail_report("divisibility", params, {"regrouping": "mismatch",
                                                    "difference": difference.to_report(),
                                                    "regrouped": regrouped.to_report()}, watch.millis, counts)
    counts["decompositions"] = _check_decompositions(n, q, k)
    logger.info(f"Divisibility lemma holds for n={n}, q={q}, k={k} modulo {modulus}")
    return Report(check="divisibility", params=params, status=divisibility_status(modulus), counts=counts,
                  millis=watch.millis)


def check_divisibility_lemma(n: int, q: int, k: int, cap: int = 10_000_000) -> Report:
    params = {"n": n, "q": q, "k": k}
    return guarded("divisibility", params, lambda: _run(n, q, k, OperationBudget(cap)))
