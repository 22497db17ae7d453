"""
Laurent polynomials in the uniformizer w over F_q.

Terms are stored as an exponent-sorted tuple of (exponent, coefficient)
pairs with coefficients in 1..q-1; zero coefficients are never stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_div, gf_gcd, gf_strip

from utils import DomainError

from .residue import inverse_mod

Term = Tuple[int, int]


def _normalize(items: Iterable[Term], q: int) -> Tuple[Term, ...]:
    acc: Dict[int, int] = {}
    for exp, coeff in items:
        acc[exp] = (acc.get(exp, 0) + coeff) % q
    return tuple(sorted((e, c) for e, c in acc.items() if c))


@dataclass(frozen=True)
class LaurentPoly:
    """Finitely supported sum of c * w^e with c in F_q."""
    terms: Tuple[Term, ...]
    q: int

    # Constructors

    @classmethod
    def from_items(cls, items: Iterable[Term], q: int) -> "LaurentPoly":
        return cls(_normalize(items, q), q)

    @classmethod
    def zero(cls, q: int) -> "LaurentPoly":
        return cls((), q)

    @classmethod
    def monomial(cls, exp: int, q: int, coeff: int = 1) -> "LaurentPoly":
        coeff %= q
        return cls(((exp, coeff),) if coeff else (), q)

    @classmethod
    def constant(cls, coeff: int, q: int) -> "LaurentPoly":
        return cls.monomial(0, q, coeff)

    @classmethod
    def from_digits(cls, digits: Iterable[int], q: int, start: int = 0) -> "LaurentPoly":
        """Polynomial sum(d_i * w^(start+i)), used for lifts of O/w^k."""
        return cls.from_items(((start + i, d) for i, d in enumerate(digits)), q)

    # Inspection

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self) -> Union[int, float]:
        """Lowest exponent; +inf for the zero polynomial."""
        return self.terms[0][0] if self.terms else math.inf

    @property
    def degree(self) -> Union[int, float]:
        return self.terms[-1][0] if self.terms else -math.inf

    @property
    def lowest_coefficient(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no lowest coefficient")
        return self.terms[0][1]

    def coefficient(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    # Arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not other.terms:
            return self
        if not self.terms:
            return other
        return LaurentPoly(_normalize(self.terms + other.terms, self.q), self.q)

    def __neg__(self) -> "LaurentPoly":
        q = self.q
        return LaurentPoly(tuple((e, q - c) for e, c in self.terms), q)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.q)
        if len(other.terms) == 1:
            e2, c2 = other.terms[0]
            return LaurentPoly(tuple((e + e2, c * c2 % self.q) for e, c in self.terms), self.q)
        if len(self.terms) == 1:
            return other * self
        items = [(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms]
        return LaurentPoly(_normalize(items, self.q), self.q)

    def scale(self, coeff: int) -> "LaurentPoly":
        coeff %= self.q
        if not coeff:
            return LaurentPoly.zero(self.q)
        return LaurentPoly(tuple((e, c * coeff % self.q) for e, c in self.terms), self.q)

    def shift(self, exp: int) -> "LaurentPoly":
        """Multiply by w^exp."""
        if not exp:
            return self
        return LaurentPoly(tuple((e + exp, c) for e, c in self.terms), self.q)

    def truncate(self, bound: Union[int, float]) -> "LaurentPoly":
        """Drop every term of exponent >= bound."""
        return LaurentPoly(tuple(t for t in self.terms if t[0] < bound), self.q)

    def unit_part(self) -> "LaurentPoly":
        """Divide out w^valuation so the result has a nonzero constant term."""
        if not self.terms:
            raise DomainError("zero polynomial has no unit part")
        return self.shift(-self.terms[0][0])

    def inverse_series(self, precision: int) -> "LaurentPoly":
        """Inverse modulo w^precision of a polynomial with nonzero constant term."""
        if self.valuation != 0:
            raise DomainError(f"series inverse needs valuation 0, got {self.valuation}")
        q = self.q
        dense = self.to_dense()
        inv0 = inverse_mod(dense[0], q)
        out: List[int] = []
        for i in range(precision):
            acc = 1 if i == 0 else 0
            for j in range(1, min(i, len(dense) - 1) + 1):
                acc -= dense[j] * out[i - j]
            out.append(acc * inv0 % q)
        return LaurentPoly.from_digits(out, q)

    # Dense conversion for ordinary polynomial algorithms

    def to_dense(self) -> List[int]:
        """Coefficients from w^0 up to the degree; requires valuation >= 0."""
        if not self.terms:
            return []
        if self.terms[0][0] < 0:
            raise DomainError("dense form needs non-negative exponents")
        dense = [0] * (self.terms[-1][0] + 1)
        for e, c in self.terms:
            dense[e] = c
        return dense

    @classmethod
    def from_dense(cls, dense: List[int], q: int) -> "LaurentPoly":
        return cls.from_digits(dense, q)

    # Rendering

    def render(self) -> str:
        """Text such as ``1+2*w+w^-1`` with exponents ascending."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
                continue
            power = "w" if e == 1 else f"w^{e}"
            parts.append(power if c == 1 else f"{c}*{power}")
        return "+".join(parts)

    def __str__(self) -> str:
        return self.render()


def _trim(dense: List[int]) -> List[int]:
    while dense and dense[-1] == 0:
        dense.pop()
    return dense


def _to_gf(dense: List[int], q: int) -> List[int]:
    """Ascending dense list to sympy's descending GF(q) list."""
    return gf_strip([ZZ(c % q) for c in reversed(dense)])


def _from_gf(f: List[int]) -> List[int]:
    return _trim([int(c) for c in reversed(f)])


def poly_divmod(a: List[int], b: List[int], q: int) -> Tuple[List[int], List[int]]:
    """Euclidean division of dense polynomials over F_q, lowest degree first."""
    divisor = _to_gf(b, q)
    if not divisor:
        raise DomainError("polynomial division by zero")
    quotient, rem = gf_div(_to_gf(a, q), divisor, q, ZZ)
    return _from_gf(quotient), _from_gf(rem)


def poly_gcd(a: List[int], b: List[int], q: int) -> List[int]:
    """Greatest common divisor of dense polynomials, normalized to constant term 1 when possible."""
    g = _from_gf(gf_gcd(_to_gf(a, q), _to_gf(b, q), q, ZZ))
    if not g:
        return g
    norm = g[0] if g[0] else g[-1]
    inv = inverse_mod(norm, q)
    return [c * inv % q for c in g]
