"""
Square matrices over F_q((w)) and the product group GL_{n+1} x GL_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from localfield import FieldElem, LaurentPoly, check_prime
from utils import DomainError

Row = Tuple[FieldElem, ...]


@dataclass(frozen=True)
class Mat:
    """Immutable m x m matrix with FieldElem entries."""
    rows: Tuple[Row, ...]
    q: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], q: int) -> "Mat":
        built = []
        for row in rows:
            built.append(tuple(_as_elem(x, q) for x in row))
        size = len(built)
        if any(len(r) != size for r in built):
            raise DomainError("matrix rows must form a square array")
        return cls(tuple(built), q)

    @classmethod
    def identity(cls, size: int, q: int) -> "Mat":
        one, zero = FieldElem.one(q), FieldElem.zero(q)
        return cls(tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size)), q)

    @classmethod
    def diag(cls, entries: Sequence, q: int) -> "Mat":
        zero = FieldElem.zero(q)
        elems = [_as_elem(x, q) for x in entries]
        size = len(elems)
        return cls(tuple(tuple(elems[i] if i == j else zero for j in range(size)) for i in range(size)), q)

    @classmethod
    def w_diag(cls, exponents: Sequence[int], q: int) -> "Mat":
        """diag(w^e_1, ..., w^e_m)."""
        return cls.diag([FieldElem.w_power(e, q) for e in exponents], q)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: Tuple[int, int]) -> FieldElem:
        i, j = idx
        return self.rows[i][j]

    def to_lists(self) -> List[List[FieldElem]]:
        return [list(r) for r in self.rows]

    def __mul__(self, other: "Mat") -> "Mat":
        if other.size != self.size:
            raise DomainError(f"size mismatch {self.size} x {other.size}")
        zero = FieldElem.zero(self.q)
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                new_row.append(acc)
            out.append(tuple(new_row))
        return Mat(tuple(out), self.q)

    def det(self) -> FieldElem:
        """Determinant by Gaussian elimination in the fraction field."""
        a = self.to_lists()
        m = self.size
        result = FieldElem.one(self.q)
        for col in range(m):
            pivot = next((r for r in range(col, m) if not a[r][col].is_zero()), None)
            if pivot is None:
                return FieldElem.zero(self.q)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                result = -result
            p = a[col][col]
            result = result * p
            for r in range(col + 1, m):
                if a[r][col].is_zero():
                    continue
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return result

    def minor(self, i: int, j: int) -> "Mat":
        return Mat(tuple(tuple(x for c, x in enumerate(row) if c != j)
                         for r, row in enumerate(self.rows) if r != i), self.q)

    def inverse(self) -> "Mat":
        """Adjugate divided by the determinant."""
        d = self.det()
        if d.is_zero():
            raise DomainError("singular matrix has no inverse")
        m = self.size
        if m == 1:
            return Mat(((d.inverse(),),), self.q)
        cof = [[None] * m for _ in range(m)]
        for i in range(m):
            for j in range(m):
                c = self.minor(i, j).det()
                cof[j][i] = (c if (i + j) % 2 == 0 else -c) / d
        return Mat(tuple(tuple(r) for r in cof), self.q)

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def render(self) -> str:
        return "\n".join(" ".join(x.render() for x in row) for row in self.rows)


def _as_elem(x, q: int) -> FieldElem:
    if isinstance(x, FieldElem):
        return x
    if isinstance(x, LaurentPoly):
        return FieldElem.from_poly(x)
    if isinstance(x, int):
        return FieldElem.from_int(x, q)
    raise DomainError(f"cannot use {x!r} as a matrix entry")


def elementary(size: int, i: int, j: int, value, q: int) -> Mat:
    """Identity plus value at (i, j), i != j."""
    rows = Mat.identity(size, q).to_lists()
    rows[i][j] = _as_elem(value, q)
    return Mat(tuple(tuple(r) for r in rows), q)


def embed_iota(h: Mat) -> Mat:
    """Block matrix with h in the upper-left corner and 1 in the last slot."""
    n = h.size
    zero, one = FieldElem.zero(h.q), FieldElem.one(h.q)
    rows = [tuple(h.rows[i]) + (zero,) for i in range(n)]
    rows.append(tuple(zero for _ in range(n)) + (one,))
    return Mat(tuple(rows), h.q)


@dataclass(frozen=True)
class GroupElement:
    """An element (g1, g2) of GL_{n+1}(F) x GL_n(F)."""
    g1: Mat
    g2: Mat

    def __post_init__(self):
        if self.g1.size != self.g2.size + 1:
            raise DomainError(f"factor sizes {self.g1.size}, {self.g2.size} do not form GL_(n+1) x GL_n")

    @property
    def n(self) -> int:
        return self.g2.size

    @property
    def q(self) -> int:
        return self.g1.q

    @classmethod
    def identity(cls, n: int, q: int) -> "GroupElement":
        check_prime(q)
        return cls(Mat.identity(n + 1, q), Mat.identity(n, q))

    @classmethod
    def delta(cls, h: Mat) -> "GroupElement":
        """The diagonal embedding h -> (iota(h), h) of H = GL_n."""
        return cls(embed_iota(h), h)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.g1 * other.g1, self.g2 * other.g2)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.g1.inverse(), self.g2.inverse())

    def is_invertible(self) -> bool:
        return self.g1.is_invertible() and self.g2.is_invertible()
