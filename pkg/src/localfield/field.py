"""
Exact elements of F = F_q((w)) as fractions of Laurent polynomials.

Canonical form: the denominator is an ordinary polynomial with constant
term 1 and every power of w lives in the numerator, so equality of field
elements is equality of representations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from utils import DomainError

from .laurent import LaurentPoly, poly_divmod, poly_gcd
from .residue import check_prime, inverse_mod

Valuation = Union[int, float]


def _canonical(num: LaurentPoly, den: LaurentPoly) -> "FieldElem":
    q = num.q
    if den.is_zero():
        raise DomainError("division by zero in F_q((w))")
    if num.is_zero():
        return FieldElem(num, LaurentPoly.constant(1, q), q)
    d = den.valuation
    if d:
        den = den.shift(-d)
        num = num.shift(-d)
    if den.is_monomial():
        return FieldElem(num.scale(inverse_mod(den.lowest_coefficient, q)), LaurentPoly.constant(1, q), q)
    e = num.valuation
    num_dense = num.shift(-e).to_dense()
    den_dense = den.to_dense()
    g = poly_gcd(num_dense, den_dense, q)
    if len(g) > 1:
        num_dense, _ = poly_divmod(num_dense, g, q)
        den_dense, _ = poly_divmod(den_dense, g, q)
    inv = inverse_mod(den_dense[0], q)
    num = LaurentPoly.from_dense([c * inv for c in num_dense], q).shift(e)
    den = LaurentPoly.from_dense([c * inv for c in den_dense], q)
    return FieldElem(num, den, q)


@dataclass(frozen=True)
class FieldElem:
    """numerator / denominator with the denominator in canonical form."""
    num: LaurentPoly
    den: LaurentPoly
    q: int

    # Constructors

    @classmethod
    def fraction(cls, num: LaurentPoly, den: LaurentPoly) -> "FieldElem":
        return _canonical(num, den)

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "FieldElem":
        return cls(poly, LaurentPoly.constant(1, poly.q), poly.q)

    @classmethod
    def from_int(cls, value: int, q: int) -> "FieldElem":
        return cls.from_poly(LaurentPoly.constant(value, q))

    @classmethod
    def zero(cls, q: int) -> "FieldElem":
        return cls.from_int(0, q)

    @classmethod
    def one(cls, q: int) -> "FieldElem":
        return cls.from_int(1, q)

    @classmethod
    def w_power(cls, exp: int, q: int, coeff: int = 1) -> "FieldElem":
        """coeff * w^exp."""
        return cls.from_poly(LaurentPoly.monomial(exp, q, coeff))

    # Inspection

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def valuation(self) -> Valuation:
        """val(num) - val(den); the denominator always has valuation 0."""
        return self.num.valuation

    def is_integral(self) -> bool:
        return self.valuation >= 0

    def is_unit(self) -> bool:
        return self.valuation == 0

    @property
    def leading_residue(self) -> int:
        """Coefficient of w^val in the expansion, an element of F_q^x."""
        if self.is_zero():
            raise DomainError("zero has no leading residue")
        return self.num.lowest_coefficient

    # Arithmetic

    def _lift(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.q != self.q:
                raise DomainError(f"cannot combine elements of F_{self.q}((w)) and F_{other.q}((w))")
            return other
        if isinstance(other, int):
            return FieldElem.from_int(other, self.q)
        if isinstance(other, LaurentPoly):
            return FieldElem.from_poly(other)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other) -> "FieldElem":
        other = self._lift(other)
        if self.den.is_one() and other.den.is_one():
            return FieldElem.from_poly(self.num + other.num)
        if self.den == other.den:
            return _canonical(self.num + other.num, self.den)
        return _canonical(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.num, self.den, self.q)

    def __sub__(self, other) -> "FieldElem":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "FieldElem":
        return self._lift(other) - self

    def __mul__(self, other) -> "FieldElem":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return FieldElem.zero(self.q)
        if self.den.is_one() and other.den.is_one():
            return FieldElem.from_poly(self.num * other.num)
        return _canonical(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DomainError("division by zero in F_q((w))")
        return _canonical(self.den, self.num)

    def __truediv__(self, other) -> "FieldElem":
        other = self._lift(other)
        if other.is_zero():
            raise DomainError("division by zero in F_q((w))")
        if other.num.is_monomial() and other.den.is_one():
            e, c = other.num.terms[0]
            return FieldElem(self.num.shift(-e).scale(inverse_mod(c, self.q)), self.den, self.q)
        return _canonical(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "FieldElem":
        return self._lift(other) / self

    def __pow__(self, exp: int) -> "FieldElem":
        if exp < 0:
            return self.inverse() ** (-exp)
        result = FieldElem.one(self.q)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def shift(self, exp: int) -> "FieldElem":
        """Multiply by w^exp."""
        return FieldElem(self.num.shift(exp), self.den, self.q)

    def unit_part(self) -> "FieldElem":
        """x / w^val(x)."""
        if self.is_zero():
            raise DomainError("zero has no unit part")
        return self.shift(-self.valuation)

    def series_truncate(self, bound: int) -> LaurentPoly:
        """The Laurent polynomial congruent to self modulo w^bound O with support in [val, bound)."""
        v = self.valuation
        if v == math.inf or bound <= v:
            return LaurentPoly.zero(self.q)
        if self.den.is_one():
            return self.num.truncate(bound)
        length = bound - v
        unit = self.num.shift(-v) * self.den.inverse_series(length)
        return unit.truncate(length).shift(v)

    # Rendering

    def render(self) -> str:
        """Reduced fraction text, e.g. ``(1+2*w)/(w^2)``."""
        if self.is_zero():
            return "0"
        v = self.valuation
        num = self.num.shift(-v) if v < 0 else self.num
        den = self.den.shift(-v) if v < 0 else self.den
        if den.is_one():
            return num.render()
        return f"({num.render()})/({den.render()})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"FieldElem({self.render()!r}, q={self.q})"


def field_arith(x: FieldElem, y: FieldElem, op: str) -> FieldElem:
    """Apply one of add, sub, mul, div."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise DomainError(f"unknown field operation {op!r}")


def valuation(x: FieldElem) -> Valuation:
    return x.valuation


def series_truncate(x: FieldElem, bound: int) -> LaurentPoly:
    return x.series_truncate(bound)


def w(q: int) -> FieldElem:
    """The uniformizer of F_q((w))."""
    check_prime(q)
    return FieldElem.w_power(1, q)
