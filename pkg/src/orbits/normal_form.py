"""
Normal forms of H\\G/K for H = Delta(GL_n) inside G = GL_{n+1} x GL_n.

The class of g = (g1, g2) is the class of x = iota(g2)^-1 g1 in
iota(K2)\\GL_{n+1}(F)/K1.  The reduction brings x to

    [[diag(w^e), col(w^v)], [0, w^c]]

with e non-increasing and v the min-plus closure of the last column, and
records the determinant of every row operation so that the H-element
carrying the normal-form representative to g can be recovered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from loguru import logger

from groups import GroupElement, Mat, embed_iota
from localfield import FieldElem
from utils import DomainError, InternalError


@dataclass(frozen=True)
class NormalForm:
    """Representative (diag(w^a) with last column (1, ..., 1, w^c), diag(w^b))."""
    c: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    def representative(self, q: int) -> GroupElement:
        n = self.n
        rows = Mat.w_diag(list(self.a) + [self.c], q).to_lists()
        for i in range(n):
            rows[i][n] = FieldElem.one(q)
        first = Mat(tuple(tuple(r) for r in rows), q)
        return GroupElement(first, Mat.w_diag(self.b, q))

    def token(self) -> str:
        return f"c={self.c}; a={_ints(self.a)}; b={_ints(self.b)}"


@dataclass(frozen=True)
class Witness:
    """det h for the H-element h with g in Delta(h) * representative * K."""
    shift: int
    unit: FieldElem

    @property
    def det(self) -> FieldElem:
        return self.unit.shift(self.shift)


@dataclass(frozen=True)
class ClassInvariant:
    """(c, d = a - b, b); c and d are the classical pair, b separates the remaining classes."""
    c: int
    d: Tuple[int, ...]
    b: Tuple[int, ...]

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(di + bi for di, bi in zip(self.d, self.b))

    @property
    def n(self) -> int:
        return len(self.d)

    def token(self) -> str:
        return f"c={self.c}; d={_ints(self.d)}; b={_ints(self.b)}"


def _ints(values) -> str:
    return ",".join(str(v) for v in values)


class _Reducer:
    """Row and column operations on x with the row determinant tracked.

    Row operations stay inside rows 0..n-1 (the image of iota(K2));
    column operations are arbitrary elements of K1.
    """

    def __init__(self, x: Mat):
        self.q = x.q
        self.n = x.size - 1
        self.rows: List[List[FieldElem]] = x.to_lists()
        self.left_det = FieldElem.one(self.q)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self._check_row(i)
        self._check_row(j)
        self.rows[i], self.rows[j] = self.rows[j], self.rows[i]
        self.left_det = -self.left_det

    def negate_row(self, i: int) -> None:
        self._check_row(i)
        self.rows[i] = [-a for a in self.rows[i]]
        self.left_det = -self.left_det

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.rows:
            row[i], row[j] = row[j], row[i]

    def add_row(self, dst: int, src: int, factor: FieldElem) -> None:
        """row_dst += factor * row_src, factor integral."""
        self._check_row(dst)
        self._check_row(src)
        self._check_integral(factor)
        if factor.is_zero():
            return
        self.rows[dst] = [a + factor * b for a, b in zip(self.rows[dst], self.rows[src])]

    def add_col(self, dst: int, src: int, factor: FieldElem) -> None:
        """col_dst += factor * col_src, factor integral."""
        self._check_integral(factor)
        if factor.is_zero():
            return
        for row in self.rows:
            if not row[src].is_zero():
                row[dst] = row[dst] + factor * row[src]

    def scale_col(self, j: int, unit: FieldElem) -> None:
        for row in self.rows:
            row[j] = row[j] * unit

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise InternalError(f"row operation on row {i} leaves iota(K2)")

    @staticmethod
    def _check_integral(factor: FieldElem) -> None:
        if not factor.is_integral():
            raise InternalError(f"non-integral elementary factor {factor}")


def _clear_last_row(r: _Reducer) -> int:
    n = r.n
    last = r.rows[n]
    j = min(range(n + 1), key=lambda col: (last[col].valuation, col))
    if last[j].is_zero():
        raise DomainError("matrix is not invertible")
    r.swap_cols(j, n)
    c = int(r.rows[n][n].valuation)
    r.scale_col(n, FieldElem.w_power(c, r.q) / r.rows[n][n])
    pivot = r.rows[n][n]
    for col in range(n):
        entry = r.rows[n][col]
        if not entry.is_zero():
            r.add_col(col, n, -(entry / pivot))
    return c


def _smith_upper_block(r: _Reducer) -> List[int]:
    """Diagonalize rows/cols 0..n-1 to diag(w^e), e ascending."""
    n = r.n
    exps = []
    for t in range(n):
        cells = [(r.rows[i][j].valuation, i, j) for i in range(t, n) for j in range(t, n)]
        val, i, j = min(cells)
        if val == float("inf"):
            raise DomainError("matrix is not invertible")
        r.swap_rows(i, t)
        r.swap_cols(j, t)
        r.scale_col(t, FieldElem.w_power(int(val), r.q) / r.rows[t][t])
        pivot = r.rows[t][t]
        for i2 in range(t + 1, n):
            if not r.rows[i2][t].is_zero():
                r.add_row(i2, t, -(r.rows[i2][t] / pivot))
        for j2 in range(t + 1, n):
            if not r.rows[t][j2].is_zero():
                r.add_col(j2, t, -(r.rows[t][j2] / pivot))
        exps.append(int(val))
    return exps


def _reverse_order(r: _Reducer, exps: List[int]) -> List[int]:
    n = r.n
    for i in range(n // 2):
        r.swap_rows(i, n - 1 - i)
        r.swap_cols(i, n - 1 - i)
        # det-one swap
        r.negate_row(i)
        r.scale_col(i, -FieldElem.one(r.q))
    return exps[::-1]


class _Column:
    """The last column (w_i) against diag(w^e) together with the row determinant."""

    def __init__(self, exps: List[int], entries: List[FieldElem], left_det: FieldElem, q: int):
        self.e = exps
        self.w = entries
        self.left_det = left_det
        self.q = q
        self.v: List[int] = [0] * len(exps)

    def renormalize(self, i: int) -> None:
        """Reduce w_i modulo w^{e_i} and scale it to a pure power of w."""
        poly = self.w[i].series_truncate(self.e[i])
        if poly.is_zero():
            self.v[i] = self.e[i]
            self.w[i] = FieldElem.w_power(self.e[i], self.q)
            return
        v = int(poly.valuation)
        unit = FieldElem.from_poly(poly.unit_part())
        # row i scaled by unit^-1, column i by unit
        self.left_det = self.left_det / unit
        self.v[i] = v
        self.w[i] = FieldElem.w_power(v, self.q)

    def move(self) -> bool:
        """Apply the first available lowering move; False once stable."""
        n = len(self.e)
        for k in range(n):
            for l in range(k + 1, n):
                if self.v[k] < self.v[l]:
                    self.w[l] = self.w[l] + self.w[k]
                    self.renormalize(l)
                    return True
        for k in range(n):
            for l in range(k + 1, n):
                if self.v[l] + self.e[k] - self.e[l] < self.v[k]:
                    self.w[k] = self.w[k] + self.w[l].shift(self.e[k] - self.e[l])
                    self.renormalize(k)
                    return True
        return False


def reduce_matrix(x: Mat) -> Tuple[int, List[int], List[int], FieldElem]:
    """(c, e, v, det of the row operations) for x in iota(K2)\\GL_{n+1}(F)/K1."""
    r = _Reducer(x)
    c = _clear_last_row(r)
    exps = _reverse_order(r, _smith_upper_block(r))
    n = r.n
    column = _Column(exps, [r.rows[i][n] for i in range(n)], r.left_det, r.q)
    for i in range(n):
        column.renormalize(i)
    moves = 0
    while column.move():
        moves += 1
        if moves > 10_000:
            raise InternalError(f"normal-form moves do not terminate for e={exps}")
    return c, exps, column.v, column.left_det


def normal_form(g: GroupElement) -> Tuple[NormalForm, Witness]:
    """Normal form of HgK and det of the H-element h with g in h * representative * K."""
    if not g.is_invertible():
        raise DomainError("normal_form needs an invertible element")
    q = g.q
    det2 = g.g2.det()
    x = embed_iota(g.g2.inverse()) * g.g1
    c, e, v, left_det = reduce_matrix(x)
    a = tuple(ei - vi for ei, vi in zip(e, v))
    b = tuple(-vi for vi in v)
    shift = int(det2.valuation) + sum(v)
    unit = det2.unit_part() / left_det
    if not unit.is_unit():
        raise InternalError(f"witness unit {unit} is not a unit")
    nf = NormalForm(c, a, b)
    logger.debug(f"Normal form {nf.token()}, shift {shift}")
    return nf, Witness(shift, unit)


def class_invariant(nf: NormalForm) -> ClassInvariant:
    """(c, a - b, b) of a normal form."""
    return ClassInvariant(nf.c, tuple(ai - bi for ai, bi in zip(nf.a, nf.b)), nf.b)


def invariant_of(g: GroupElement) -> ClassInvariant:
    return class_invariant(normal_form(g)[0])


def normal_form_from_invariant(inv: ClassInvariant) -> NormalForm:
    return NormalForm(inv.c, inv.a, inv.b)
