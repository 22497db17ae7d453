"""
Unit indices of the local orders O_c = O_F + w^c O_E at a split or inert
place, the step quotients O_c^x / O_{c+k}^x and the Galois degree of the
local layer, with enumeration oracles.

Residue rings are modelled as digit tuples of F_q[w]/w^c; the inert
extension is F_q[w]/w^c [theta] with theta a root of an irreducible
quadratic over F_q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Set, Tuple

from loguru import logger

from localfield import check_prime
from utils import CheckStatus, DomainError, OperationBudget, Report, Stopwatch, fail_report, guarded

Digits = Tuple[int, ...]

SPLIT = 1
INERT = -1


@dataclass(frozen=True)
class LocalOrderParams:
    """q, eps = +1 (split) or -1 (inert), and the conductor exponent c."""
    q: int
    eps: int
    c: int

    def __post_init__(self):
        check_prime(self.q)
        if self.eps not in (SPLIT, INERT):
            raise DomainError(f"eps must be +1 or -1, got {self.eps}")
        if self.c < 0:
            raise DomainError(f"c must be non-negative, got {self.c}")


def unit_index(p: LocalOrderParams) -> int:
    """#(O_0^x / O_c^x) = q^{c-1}(q - eps), and 1 for c = 0."""
    if p.c == 0:
        return 1
    return p.q ** (p.c - 1) * (p.q - p.eps)


def step_index(q: int, c: int, k: int) -> int:
    """#(O_c^x / O_{c+k}^x) = q^k for c >= k > 0."""
    check_prime(q)
    if not c >= k > 0:
        raise DomainError(f"step index needs c >= k > 0, got c={c}, k={k}")
    return q ** k


def galois_degree(q: int, eps: int, r: int, u0: int) -> Fraction:
    """(q - eps) / u(r) with u(0) = u0 and u(r) = 1 for r >= 1."""
    if u0 < 1:
        raise DomainError(f"u0 must be at least 1, got {u0}")
    if eps not in (SPLIT, INERT):
        raise DomainError(f"eps must be +1 or -1, got {eps}")
    degree = Fraction(q - eps, u0 if r == 0 else 1)
    if degree.denominator != 1:
        logger.warning(f"Galois degree {degree} is not an integer: u0={u0} is inconsistent with q={q}, eps={eps}")
    return degree


def _mul(x: Digits, y: Digits, q: int) -> Digits:
    p = len(x)
    out = [0] * p
    for i, u in enumerate(x):
        if u:
            for j in range(p - i):
                out[i + j] = (out[i + j] + u * y[j]) % q
    return tuple(out)


def irreducible_quadratic(q: int) -> Tuple[int, int]:
    """(a1, a0) with theta^2 = a1 theta + a0 irreducible over F_q."""
    for a1, a0 in itertools.product(range(q), repeat=2):
        if all((x * x - a1 * x - a0) % q for x in range(q)):
            return a1, a0
    raise DomainError(f"no irreducible quadratic over F_{q}")


def _ring(q: int, k: int) -> List[Digits]:
    return list(itertools.product(range(q), repeat=k))


def _count_orbits(pairs: List[Tuple[Digits, Digits]], scalars: List[Digits], q: int,
                  budget: OperationBudget, what: str) -> int:
    """Orbits of the scalar action t (x, y) = (t x, t y) on a set of pairs."""
    if budget is not None:
        budget.charge(len(pairs), what)
    seen: Set[Tuple[Digits, Digits]] = set()
    orbits = 0
    for pair in pairs:
        if pair in seen:
            continue
        orbits += 1
        x, y = pair
        for t in scalars:
            seen.add((_mul(t, x, q), _mul(t, y, q)))
    return orbits


def _units(q: int, k: int) -> List[Digits]:
    return [d for d in _ring(q, k) if d[0]]


def _unit_predicate(q: int, eps: int) -> Callable[[Digits, Digits], bool]:
    if eps == SPLIT:
        return lambda x, y: bool(x[0]) and bool(y[0])
    a1, a0 = irreducible_quadratic(q)
    # norm of x + y theta modulo w
    return lambda x, y: (x[0] * x[0] + a1 * x[0] * y[0] - a0 * y[0] * y[0]) % q != 0


def bruteforce_unit_index(q: int, eps: int, c: int, budget: OperationBudget = None) -> int:
    """(O_E / w^c)^x modulo the image of (O_F / w^c)^x, by orbit enumeration."""
    p = LocalOrderParams(q, eps, c)
    if p.c == 0:
        return 1
    ring = _ring(q, c)
    if budget is not None:
        budget.require(len(ring) ** 2, f"unit index enumeration q={q}, eps={eps}, c={c}")
    is_unit = _unit_predicate(q, eps)
    # split: O_E = O_F x O_F; inert: O_E = O_F + O_F theta
    pairs = [(x, y) for x in ring for y in ring if is_unit(x, y)]
    return _count_orbits(pairs, _units(q, c), q, budget, f"unit index q={q}, eps={eps}, c={c}")


def bruteforce_step_index(q: int, c: int, k: int, budget: OperationBudget = None) -> int:
    """(R[e])^x / R^x for R = F_q[w]/w^k and e^2 = 0."""
    if not c >= k > 0:
        raise DomainError(f"step index needs c >= k > 0, got c={c}, k={k}")
    ring = _ring(check_prime(q), k)
    if budget is not None:
        budget.require(len(ring) ** 2, f"step index enumeration q={q}, k={k}")
    pairs = [(a, b) for a in ring for b in ring if a[0]]
    return _count_orbits(pairs, _units(q, k), q, budget, f"step index q={q}, k={k}")


def check_local_orders(q: int, eps: int, cmax: int = 3, cap: int = 1_000_000) -> Report:
    """Closed forms against the oracles for c <= cmax, with filtration multiplicativity."""
    params = {"q": q, "eps": eps, "cmax": cmax}

    def run() -> Report:
        watch = Stopwatch()
        budget = OperationBudget(cap)
        counts = {}
        for c in range(1, cmax + 1):
            p = LocalOrderParams(q, eps, c)
            closed, brute = unit_index(p), bruteforce_unit_index(q, eps, c, budget)
            if closed != brute:
                return fail_report("local-orders", params, {"c": c, "unit_index": closed, "bruteforce": brute},
                                   watch.millis)
            counts[f"unit_index c={c}"] = closed
            for k in range(1, c + 1):
                closed_step, brute_step = step_index(q, c, k), bruteforce_step_index(q, c, k, budget)
                if closed_step != brute_step:
                    return fail_report("local-orders", params, {"c": c, "k": k, "step_index": closed_step,
                                                                "bruteforce": brute_step}, watch.millis)
                if c + k <= cmax and unit_index(LocalOrderParams(q, eps, c + k)) != closed * closed_step:
                    return fail_report("local-orders", params, {"c": c, "k": k, "multiplicativity": "broken"},
                                       watch.millis)
        degree = galois_degree(q, eps, 1, 1)
        if degree != q - eps:
            return fail_report("local-orders", params, {"galois_degree": str(degree), "expected": q - eps},
                               watch.millis)
        counts["galois_degree r>=1"] = int(degree)
        logger.info(f"Local order indices match the oracles for q={q}, eps={eps}, c<={cmax}")
        return Report(check="local-orders", params=params, status=CheckStatus.PASS, counts=counts,
                      millis=watch.millis)

    return guarded("local-orders", params, run)
