"""
Hecke polynomials in z with coefficients in the spherical Hecke algebra,
and their plain-text fixture format.

A coefficient of z^p maps a monomial, the exponent tuple of
(T_{1,V}, ..., T_{n+1,V}, T_{1,W}, ..., T_{n,W}), to a scalar: an SLaurent
before specialization, a Fraction after.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from utils import DomainError, NormalizationError

from .coefficients import SLaurent

Monomial = Tuple[int, ...]
Scalar = Union[SLaurent, Fraction]


@dataclass
class SymPoly:
    """Polynomial in z over Z[s, 1/s][X_1..X_{n+1}, Y_1..Y_n]."""
    n: int
    coefficients: Dict[int, Dict[Monomial, SLaurent]] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return max((p for p, c in self.coefficients.items() if c), default=0)


@dataclass
class HeckePolynomial:
    """Polynomial in z with Hecke-algebra coefficients; ``q`` is set once specialized."""
    n: int
    coefficients: Dict[int, Dict[Monomial, Scalar]] = field(default_factory=dict)
    q: Optional[int] = None

    @property
    def degree(self) -> int:
        return max((p for p, c in self.coefficients.items() if c), default=0)

    @property
    def expected_degree(self) -> int:
        return self.n * (self.n + 1)

    def coefficient(self, power: int) -> Dict[Monomial, Scalar]:
        return self.coefficients.get(power, {})

    def is_monic(self) -> bool:
        lead = self.coefficient(self.expected_degree)
        one = Fraction(1) if self.q is not None else SLaurent.constant(1)
        unit = (0,) * (2 * self.n + 1)
        return self.degree == self.expected_degree and lead == {unit: one}

    def s_exponents(self) -> List[int]:
        if self.q is not None:
            return []
        return sorted({e for c in self.coefficients.values() for v in c.values() for e, _ in v.terms})

    def render(self) -> str:
        return render_polynomial(self)


def monomial_text(monomial: Monomial, n: int) -> str:
    """``T1V^2*T2W`` style text; empty for the unit monomial."""
    parts = []
    for idx, power in enumerate(monomial):
        if not power:
            continue
        name = f"T{idx + 1}V" if idx <= n else f"T{idx - n}W"
        parts.append(name if power == 1 else f"{name}^{power}")
    return "*".join(parts)


def _term_sort_key(monomial: Monomial, n: int, exp: int):
    return (-sum(monomial[:n + 1]), -sum(monomial[n + 1:]), monomial_text(monomial, n), exp)


def _scalar_terms(value: Scalar) -> List[Tuple[int, Union[int, Fraction]]]:
    if isinstance(value, SLaurent):
        return list(value.terms)
    return [(0, value)]


def render_coefficient(element: Dict[Monomial, Scalar], n: int) -> str:
    """One z-coefficient in fixture syntax."""
    rows = []
    for monomial, value in element.items():
        for exp, coeff in _scalar_terms(value):
            rows.append((_term_sort_key(monomial, n, exp), monomial, exp, coeff))
    rows.sort(key=lambda r: r[0])
    if not rows:
        return "0"
    out = ""
    for idx, (_, monomial, exp, coeff) in enumerate(rows):
        body_parts = []
        if exp:
            body_parts.append("s" if exp == 1 else f"s^{exp}")
        mono = monomial_text(monomial, n)
        if mono:
            body_parts.append(mono)
        body = "*".join(body_parts)
        magnitude = abs(coeff)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        negative = coeff < 0
        if idx == 0:
            out = ("-" if negative else "") + text
        else:
            out += (" - " if negative else " + ") + text
    return out


def render_polynomial(poly: HeckePolynomial) -> str:
    """Fixture text: one ``z^p : expr`` line per power from z^{n(n+1)} down to z^0."""
    lines = []
    top = max(poly.expected_degree, poly.degree)
    for p in range(top, -1, -1):
        lines.append(f"z^{p} : {render_coefficient(poly.coefficient(p), poly.n)}")
    return "\n".join(lines) + "\n"


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^T(\d+)([VW])(?:\^(\d+))?$")
_S_FACTOR = re.compile(r"^s(?:\^(-?\d+))?$")


def _parse_term(text: str, n: int) -> Tuple[Monomial, int, int]:
    monomial = [0] * (2 * n + 1)
    coeff, exp = 1, 0
    for factor in text.split("*"):
        factor = factor.strip()
        if factor.isdigit():
            coeff *= int(factor)
            continue
        s_match = _S_FACTOR.match(factor)
        if s_match:
            exp += int(s_match.group(1) or 1)
            continue
        t_match = _FACTOR.match(factor)
        if not t_match:
            raise DomainError(f"unrecognized factor {factor!r} in fixture term {text!r}")
        k, side, power = int(t_match.group(1)), t_match.group(2), int(t_match.group(3) or 1)
        limit = n + 1 if side == "V" else n
        if not 1 <= k <= limit:
            raise DomainError(f"generator T{k}{side} does not exist for n={n}")
        idx = k - 1 if side == "V" else n + k
        monomial[idx] += power
    return tuple(monomial), exp, coeff


def parse_coefficient(text: str, n: int) -> Dict[Monomial, SLaurent]:
    text = text.strip()
    if text == "0":
        return {}
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    out: Dict[Monomial, SLaurent] = {}
    for s, term in zip(signs, pieces[0::2]):
        monomial, exp, coeff = _parse_term(term, n)
        out[monomial] = out.get(monomial, SLaurent()) + SLaurent.monomial(exp, s * coeff)
    return {m: v for m, v in out.items() if v}


def parse_polynomial(text: str, n: int) -> HeckePolynomial:
    """Inverse of render_polynomial for symbolic polynomials; '#' lines are comments."""
    coefficients: Dict[int, Dict[Monomial, SLaurent]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, body = line.partition(":")
        match = re.match(r"^z\^(\d+)$", head.strip())
        if not sep or not match:
            raise DomainError(f"malformed fixture line {raw!r}")
        element = parse_coefficient(body, n)
        if element:
            coefficients[int(match.group(1))] = element
    return HeckePolynomial(n, coefficients)


def specialize(poly: HeckePolynomial, q: int) -> HeckePolynomial:
    """Substitute s^2 = q in every coefficient."""
    if poly.q is not None:
        return poly
    out: Dict[int, Dict[Monomial, Fraction]] = {}
    for p, element in poly.coefficients.items():
        values = {}
        for monomial, value in element.items():
            try:
                values[monomial] = value.specialize(q)
            except NormalizationError as e:
                raise NormalizationError(f"z^{p}, {monomial_text(monomial, poly.n)}: {e}") from e
        values = {m: v for m, v in values.items() if v}
        if values:
            out[p] = values
    return HeckePolynomial(poly.n, out, q)


def tilde_specialize(poly: HeckePolynomial, q: int) -> HeckePolynomial:
    """Coefficients of H(q^(n-1) X): the z^p coefficient scaled by q^(p(n-1))."""
    base = specialize(poly, q)
    scale = lambda p: Fraction(q) ** (p * (poly.n - 1))
    return HeckePolynomial(
        poly.n,
        {p: {m: v * scale(p) for m, v in element.items()} for p, element in base.coefficients.items()},
        q,
    )
