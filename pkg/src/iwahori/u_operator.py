"""
The U-operator attached to mu = Delta o mu_2 and its powers on the class [1].

U^k[1] is the sum of (u_{k,a}, v_{k,b}) Frob^k K over a in S_k^n and
b in S_k^(n-1), where S_k holds the digit lifts of O/w^k, u_{k,a} is the
identity of GL_{n+1} with first row (1, a_1, ..., a_n) and v_{k,b} the
identity of GL_n with first row (1, b_1, ..., b_{n-1}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from loguru import logger

from cosets import FormalSum, base_class
from groups import CosetPair, GroupElement, Mat, coset_pair_key
from localfield import FieldElem, LaurentPoly, check_prime
from orbits import frobenius
from utils import DomainError, InternalError, OperationBudget


@dataclass(frozen=True)
class UConfig:
    """Parameters of U^k on GL_{n+1} x GL_n over F_q((w))."""
    n: int
    q: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}")
        if self.k < 0:
            raise DomainError(f"k must be non-negative, got {self.k}")
        check_prime(self.q)

    @property
    def size(self) -> int:
        """Number of representatives, q^(k(2n-1))."""
        return self.q ** (self.k * (2 * self.n - 1))


def frob_power(k: int, n: int, q: int) -> GroupElement:
    """Frob^k = Delta(diag(w^k, 1, ..., 1))."""
    return frobenius(n, q, k)


def lifts(k: int, q: int) -> List[LaurentPoly]:
    """S_k: polynomials with digits 0..q-1 on w^0..w^(k-1)."""
    return [LaurentPoly.from_digits(d, q) for d in itertools.product(range(q), repeat=k)]


def first_row_unipotent(entries: Sequence[LaurentPoly], size: int, q: int) -> Mat:
    """Identity of GL_size with first row (1, entries...)."""
    rows = Mat.identity(size, q).to_lists()
    for j, value in enumerate(entries, start=1):
        rows[0][j] = FieldElem.from_poly(value)
    return Mat(tuple(tuple(r) for r in rows), q)


def u_power_reps(cfg: UConfig, budget: OperationBudget = None) -> List[GroupElement]:
    """All pairs (u_{k,a}, v_{k,b})."""
    if budget is not None:
        budget.require(cfg.size, f"U^{cfg.k} representatives for n={cfg.n}, q={cfg.q}")
    n, q = cfg.n, cfg.q
    s_k = lifts(cfg.k, q)
    reps = []
    for a in itertools.product(s_k, repeat=n):
        u = first_row_unipotent(a, n + 1, q)
        for b in itertools.product(s_k, repeat=n - 1):
            reps.append(GroupElement(u, first_row_unipotent(b, n, q)))
    if len(reps) != cfg.size:
        raise InternalError(f"{len(reps)} representatives, expected {cfg.size}")
    return reps


def u_power_apply(cfg: UConfig, budget: OperationBudget = None) -> FormalSum:
    """U^k[1] as a sum over G/K; the cosets are checked pairwise distinct."""
    if cfg.k == 0:
        return FormalSum.basis(base_class(cfg.n, cfg.q))
    frob = frob_power(cfg.k, cfg.n, cfg.q)
    reps = u_power_reps(cfg, budget)
    if budget is not None:
        budget.charge(len(reps), f"U^{cfg.k}[1]")
    keys = [coset_pair_key(r * frob) for r in reps]
    if len(set(keys)) != len(keys):
        raise InternalError(f"U^{cfg.k} representatives give repeated cosets at n={cfg.n}, q={cfg.q}")
    logger.debug(f"U^{cfg.k}[1] for n={cfg.n}, q={cfg.q}: {len(keys)} cosets")
    return FormalSum.from_pairs((key, 1) for key in keys)


@lru_cache(maxsize=65536)
def _step_image(key: CosetPair) -> Tuple[CosetPair, ...]:
    cfg = UConfig(key.n, key.q, 1)
    b_g = key.to_element()
    frob = frob_power(1, cfg.n, cfg.q)
    return tuple(coset_pair_key(b_g * h * frob) for h in u_power_reps(cfg))


def u_step(x: FormalSum, budget: OperationBudget = None) -> FormalSum:
    """U on a sum over G/K: gK -> sum_h b_g h Frob K with b_g the Hermite representative."""
    if budget is not None and x:
        first = next(iter(x))
        budget.charge(len(x) * UConfig(first.n, first.q, 1).size, "U step")
    return x.flat_map(lambda key: FormalSum.from_pairs((k, 1) for k in _step_image(key)))


def u_iterate(n: int, q: int, k: int, budget: OperationBudget = None) -> FormalSum:
    """U applied k times to [1]."""
    x = FormalSum.basis(base_class(n, q))
    for _ in range(k):
        x = u_step(x, budget)
    return x
