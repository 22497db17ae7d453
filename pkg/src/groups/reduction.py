"""
Valuation-pivot reductions over the valuation ring: Smith form for Cartan
invariants and column-Hermite form for canonical coset keys.
"""

from __future__ import annotations

from typing import List, Tuple

from localfield import FieldElem, LaurentPoly
from utils import DomainError

from .matrix import Mat


def cartan_invariants(g: Mat) -> Tuple[int, ...]:
    """The descending exponents a with g in K diag(w^a) K."""
    a = g.to_lists()
    m = g.size
    found: List[int] = []
    for t in range(m):
        best = None
        for i in range(t, m):
            for j in range(t, m):
                x = a[i][j]
                if x.is_zero():
                    continue
                if best is None or x.valuation < a[best[0]][best[1]].valuation:
                    best = (i, j)
        if best is None:
            raise DomainError("singular matrix has no Cartan invariants")
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        pivot = a[t][t]
        found.append(int(pivot.valuation))
        for r in range(t + 1, m):
            if a[r][t].is_zero():
                continue
            f = a[r][t] / pivot
            a[r] = [x if c < t else x - f * y for c, (x, y) in enumerate(zip(a[r], a[t]))]
    return tuple(sorted(found, reverse=True))


def hermite_reduce(g: Mat) -> Tuple[Tuple[int, ...], List[List[FieldElem]]]:
    """Column-Hermite form of the lattice spanned by the columns of g.

    Returns the diagonal exponents and the reduced upper-triangular
    matrix: diagonal w^a_i, entry (i, j) for i < j a Laurent polynomial
    with support below a_i.
    """
    q = g.q
    m = g.size
    a = g.to_lists()
    exps = [0] * m
    for r in range(m - 1, -1, -1):
        best = None
        for j in range(r + 1):
            x = a[r][j]
            if x.is_zero():
                continue
            if best is None or x.valuation < a[r][best].valuation:
                best = j
        if best is None:
            raise DomainError("singular matrix has no coset key")
        if best != r:
            for row in a:
                row[best], row[r] = row[r], row[best]
        pivot = a[r][r]
        e = int(pivot.valuation)
        exps[r] = e
        if not pivot.is_polynomial() or not pivot.num.is_monomial() or pivot.num.lowest_coefficient != 1:
            scale = FieldElem.w_power(e, q) / pivot
            for i in range(r + 1):
                if not a[i][r].is_zero():
                    a[i][r] = a[i][r] * scale
        for j in range(r):
            x = a[r][j]
            if x.is_zero():
                continue
            f = x.shift(-e)
            for i in range(r + 1):
                if not a[i][r].is_zero():
                    a[i][j] = a[i][j] - f * a[i][r]
    for j in range(m):
        for i in range(j - 1, -1, -1):
            x = a[i][j]
            if x.is_zero():
                continue
            rep = FieldElem.from_poly(x.series_truncate(exps[i]))
            diff = x - rep
            if diff.is_zero():
                continue
            f = diff.shift(-exps[i])
            for r in range(i + 1):
                if not a[r][i].is_zero():
                    a[r][j] = a[r][j] - f * a[r][i]
    return tuple(exps), a


def hermite_entries(reduced: List[List[FieldElem]]) -> Tuple[Tuple[int, int, LaurentPoly], ...]:
    """Nonzero strictly-upper entries of a reduced matrix as polynomials."""
    out = []
    m = len(reduced)
    for i in range(m):
        for j in range(i + 1, m):
            x = reduced[i][j]
            if x.is_zero():
                continue
            if not x.is_polynomial():
                raise DomainError("reduced entry is not a Laurent polynomial")
            out.append((i, j, x.num))
    return tuple(out)
