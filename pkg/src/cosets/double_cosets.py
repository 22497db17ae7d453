"""
Right-coset decompositions of minuscule double cosets K lambda(w) K.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from loguru import logger

from groups import Mat, cartan_invariants, coset_canonical_form, elementary
from localfield import FieldElem, check_prime, primitive_root
from utils import DomainError, InternalError


class Factor(str, Enum):
    """Factor of G = GL_{n+1} x GL_n."""
    V = "V"
    W = "W"


@dataclass(frozen=True)
class MinusculeCochar:
    """lambda_k = diag(w, ..., w, 1, ..., 1) with k entries w, on one factor."""
    factor: Factor
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.size:
            raise DomainError(f"minuscule index k={self.k} outside 1..{self.size}")

    @property
    def size(self) -> int:
        return self.n + 1 if self.factor == Factor.V else self.n

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple([1] * self.k + [0] * (self.size - self.k))

    @property
    def symbol(self) -> str:
        return f"T{self.k}{self.factor.value}"

    def matrix(self, q: int) -> Mat:
        return Mat.w_diag(self.exponents, q)


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m."""
    if k < 0 or k > m:
        return 0
    num = math.prod(q ** (m - i) - 1 for i in range(k))
    den = math.prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def minuscule_representatives(size: int, k: int, q: int) -> List[Mat]:
    """Explicit Hermite family of K lambda_k K / K.

    Diagonal w^{a_i} with a in {0,1}^size and sum(a) = k; entry (i, j),
    i < j, ranges over F_q when a_i = 1 and a_j = 0, otherwise zero.
    """
    reps = []
    for ones in itertools.combinations(range(size), k):
        a = [1 if i in ones else 0 for i in range(size)]
        slots = [(i, j) for i in range(size) for j in range(i + 1, size) if a[i] == 1 and a[j] == 0]
        for values in itertools.product(range(q), repeat=len(slots)):
            rows = Mat.w_diag(a, q).to_lists()
            for (i, j), v in zip(slots, values):
                rows[i][j] = FieldElem.from_int(v, q)
            reps.append(Mat(tuple(tuple(r) for r in rows), q))
    return reps


@lru_cache(maxsize=None)
def _decompose_cached(lam: MinusculeCochar, q: int) -> Tuple[Mat, ...]:
    reps = minuscule_representatives(lam.size, lam.k, q)
    keys = {coset_canonical_form(g) for g in reps}
    if len(keys) != len(reps):
        raise InternalError(f"{lam.symbol}: explicit representatives are not pairwise distinct")
    expected = gaussian_binomial(lam.size, lam.k, q)
    if len(reps) != expected:
        raise InternalError(f"{lam.symbol}: {len(reps)} representatives, expected {expected}")
    logger.debug(f"Decomposed K{lam.symbol}K at q={q} into {len(reps)} cosets")
    return tuple(reps)


def decompose_double_coset(lam: MinusculeCochar, q: int) -> List[Mat]:
    """Matrices g_i with K lambda(w) K the disjoint union of the g_i K."""
    check_prime(q)
    return list(_decompose_cached(lam, q))


def bfs_double_coset_keys(size: int, k: int, q: int) -> set:
    """Oracle: orbit of lambda_k(w) K under left multiplication by generators of K.

    Generators are the elementary matrices E_ij(1) and diag(g, 1, ..., 1)
    for a primitive root g; every visited coset is checked to lie in
    K lambda K by its Cartan invariants.
    """
    check_prime(q)
    exps = tuple([1] * k + [0] * (size - k))
    gens = [elementary(size, i, j, 1, q) for i in range(size) for j in range(size) if i != j]
    gens.append(Mat.diag([primitive_root(q)] + [1] * (size - 1), q))
    start = Mat.w_diag(exps, q)
    seen = {coset_canonical_form(start)}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            key = coset_canonical_form(h)
            if key in seen:
                continue
            rep = key.to_matrix()
            if cartan_invariants(rep) != exps:
                raise InternalError(f"oracle left K lambda K at {key.token()}")
            seen.add(key)
            queue.append(rep)
    logger.debug(f"BFS oracle for GL_{size}, k={k}, q={q}: {len(seen)} cosets")
    return seen
