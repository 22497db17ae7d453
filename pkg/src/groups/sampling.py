"""
Seeded random elements of K, H and G for the randomized property checks.
"""

from __future__ import annotations

import random
from typing import Optional

from localfield import FieldElem, LaurentPoly

from .matrix import GroupElement, Mat, elementary


def random_poly(rng: random.Random, q: int, low: int, high: int) -> LaurentPoly:
    """Random Laurent polynomial with support in [low, high)."""
    return LaurentPoly.from_items(((e, rng.randrange(q)) for e in range(low, high)), q)


def random_unit(rng: random.Random, q: int, precision: int = 2) -> FieldElem:
    """Random unit of O with a polynomial representative."""
    poly = LaurentPoly.from_items(
        [(0, rng.randrange(1, q))] + [(e, rng.randrange(q)) for e in range(1, precision)], q
    )
    return FieldElem.from_poly(poly)


def random_k(rng: random.Random, size: int, q: int, steps: Optional[int] = None) -> Mat:
    """Product of random integral elementary matrices, unit diagonals and swaps."""
    g = Mat.diag([random_unit(rng, q) for _ in range(size)], q)
    if size == 1:
        return g
    for _ in range(steps if steps is not None else 2 * size):
        i, j = rng.sample(range(size), 2)
        e = elementary(size, i, j, FieldElem.from_poly(random_poly(rng, q, 0, 2)), q)
        g = g * e if rng.random() < 0.5 else e * g
    if rng.random() < 0.5:
        i, j = rng.sample(range(size), 2)
        perm = Mat.identity(size, q).to_lists()
        perm[i], perm[j] = perm[j], perm[i]
        g = g * Mat(tuple(tuple(r) for r in perm), q)
    return g


def random_matrix(rng: random.Random, size: int, q: int, spread: int = 2) -> Mat:
    """Random invertible matrix: K w^a U K' with small exponents and Laurent entries."""
    exps = [rng.randint(-spread, spread) for _ in range(size)]
    g = Mat.w_diag(exps, q)
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.7:
                g = g * elementary(size, i, j, FieldElem.from_poly(random_poly(rng, q, -spread, spread)), q)
    return random_k(rng, size, q) * g * random_k(rng, size, q)


def random_group_element(rng: random.Random, n: int, q: int, spread: int = 2) -> GroupElement:
    return GroupElement(random_matrix(rng, n + 1, q, spread), random_matrix(rng, n, q, spread))


def random_k_pair(rng: random.Random, n: int, q: int) -> GroupElement:
    return GroupElement(random_k(rng, n + 1, q), random_k(rng, n, q))


def random_h(rng: random.Random, n: int, q: int, spread: int = 2) -> GroupElement:
    """Random Delta(h) with h in GL_n(F)."""
    return GroupElement.delta(random_matrix(rng, n, q, spread))
