"""
Construction of the Hecke polynomial of (GL_{n+1} x GL_n, mu).

H_w(z) = prod_{i,j} (z - t x_i y_j) with t = s^(2n-1), rewritten in the
elementary symmetric functions X_k of the x_i and Y_k of the y_j, then
sent to the Hecke algebra by X_k -> s^(-k(n+1-k)) T_{k,V} and
Y_k -> s^(-k(n-k)) T_{k,W}.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from loguru import logger
from sympy import Poly, ZZ, symbols
from sympy.polys.polyerrors import ExactQuotientFailed

from utils import DomainError, InternalError, NormalizationError

from .coefficients import SLaurent
from .polynomial import HeckePolynomial, Monomial, SymPoly

MAX_N = 4


def basis_symbols(prefix: str, count: int) -> Tuple:
    """Symbols prefix1, ..., prefix<count>."""
    if count < 1:
        return ()
    return tuple(symbols(f"{prefix}1:{count + 1}"))


def t_exponent(n: int) -> int:
    """t = s^(2n-1), i.e. q^((2n-1)/2)."""
    return 2 * n - 1


@lru_cache(maxsize=None)
def newton_girard(k: int, n: int, prefix: str = "Y") -> Poly:
    """Power sum p_k of n variables as a polynomial Q_k in their elementary symmetric functions."""
    if k < 1:
        raise DomainError(f"power sums start at k=1, got {k}")
    gens = basis_symbols(prefix, n)
    result = Poly(0, *gens, domain=ZZ)
    for i in range(1, min(k - 1, n) + 1):
        sign = 1 if i % 2 == 1 else -1
        e_i = Poly(gens[i - 1], *gens, domain=ZZ)
        result = result + (e_i * newton_girard(k - i, n, prefix)).mul_ground(sign)
    if k <= n:
        sign = 1 if k % 2 == 1 else -1
        result = result + Poly(gens[k - 1], *gens, domain=ZZ).mul_ground(sign * k)
    return result


def _as_monomial_dict(poly: Poly) -> Dict[Monomial, int]:
    return {tuple(m): int(c) for m, c in poly.terms() if c}


@lru_cache(maxsize=None)
def elementary_of_products(n: int) -> Tuple[Dict[Monomial, int], ...]:
    """e_k(x_i y_j) for k = 0..n(n+1) in the X/Y basis, via power sums and Newton's identities."""
    xs = basis_symbols("X", n + 1)
    ys = basis_symbols("Y", n)
    gens = xs + ys
    big_n = n * (n + 1)
    power_sums = [None]
    for m in range(1, big_n + 1):
        expr = newton_girard(m, n + 1, "X").as_expr() * newton_girard(m, n, "Y").as_expr()
        power_sums.append(Poly(expr, *gens, domain=ZZ))
    elem = [Poly(1, *gens, domain=ZZ)]
    for k in range(1, big_n + 1):
        acc = Poly(0, *gens, domain=ZZ)
        for i in range(1, k + 1):
            term = elem[k - i] * power_sums[i]
            acc = acc + (term if i % 2 == 1 else -term)
        try:
            elem.append(acc.exquo_ground(k))
        except ExactQuotientFailed as e:
            raise InternalError(f"Newton identity for e_{k} is not integral at n={n}") from e
    return tuple(_as_monomial_dict(p) for p in elem)


def _product_poly(coefficient_of_k: Sequence[Dict[Monomial, int]], n: int) -> SymPoly:
    big_n = n * (n + 1)
    t = t_exponent(n)
    coefficients: Dict[int, Dict[Monomial, SLaurent]] = {}
    for k, elem in enumerate(coefficient_of_k):
        sign = 1 if k % 2 == 0 else -1
        row = {m: SLaurent.monomial(k * t, sign * c) for m, c in elem.items() if c}
        if row:
            coefficients[big_n - k] = row
    return SymPoly(n, coefficients)


def expand_product(n: int) -> SymPoly:
    """prod_{i<=n+1, j<=n} (z - t x_i y_j) in the X/Y basis, t kept as s^(2n-1)."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"expand_product supports 1 <= n <= {MAX_N}, got {n}")
    return _product_poly(elementary_of_products(n), n)


def _reduce_bisymmetric(poly: Poly, n: int) -> Dict[Monomial, int]:
    """Rewrite a polynomial symmetric in x and in y through elementary symmetric products."""
    gens = poly.gens
    xs, ys = gens[:n + 1], gens[n + 1:]
    ex = [Poly(1, *gens, domain=ZZ)] + [_elementary(xs, k, gens) for k in range(1, n + 2)]
    ey = [Poly(1, *gens, domain=ZZ)] + [_elementary(ys, k, gens) for k in range(1, n + 1)]
    out: Dict[Monomial, int] = {}
    while not poly.is_zero:
        monom, coeff = poly.terms(order="grlex")[0]
        mu, nu = list(monom[:n + 1]), list(monom[n + 1:])
        if mu != sorted(mu, reverse=True) or nu != sorted(nu, reverse=True):
            raise InternalError(f"non-symmetric residue with leading exponent {monom}")
        alpha = [mu[i] - (mu[i + 1] if i + 1 < len(mu) else 0) for i in range(len(mu))]
        beta = [nu[j] - (nu[j + 1] if j + 1 < len(nu) else 0) for j in range(len(nu))]
        product = Poly(int(coeff), *gens, domain=ZZ)
        for k, a in enumerate(alpha, start=1):
            if a:
                product = product * ex[k] ** a
        for k, b in enumerate(beta, start=1):
            if b:
                product = product * ey[k] ** b
        poly = poly - product
        out[tuple(alpha) + tuple(beta)] = out.get(tuple(alpha) + tuple(beta), 0) + int(coeff)
    return {m: c for m, c in out.items() if c}


def _elementary(variables: Sequence, k: int, gens) -> Poly:
    acc = [Poly(1, *gens, domain=ZZ)] + [Poly(0, *gens, domain=ZZ)] * k
    for v in variables:
        pv = Poly(v, *gens, domain=ZZ)
        for j in range(k, 0, -1):
            acc[j] = acc[j] + acc[j - 1] * pv
    return acc[k]


def expand_product_raw(n: int) -> SymPoly:
    """Same product expanded in the raw x_i, y_j and reduced by leading-monomial elimination."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"expand_product_raw supports 1 <= n <= {MAX_N}, got {n}")
    xs = basis_symbols("x", n + 1)
    ys = basis_symbols("y", n)
    gens = xs + ys
    big_n = n * (n + 1)
    coeffs: List[Poly] = [Poly(1, *gens, domain=ZZ)] + [Poly(0, *gens, domain=ZZ)] * big_n
    for x in xs:
        for y in ys:
            factor = Poly(x * y, *gens, domain=ZZ)
            for k in range(big_n, 0, -1):
                coeffs[k] = coeffs[k] + coeffs[k - 1] * factor
    reduced = [_reduce_bisymmetric(c, n) for c in coeffs]
    return _product_poly(reduced, n)


def satake_shift(monomial: Monomial, n: int) -> int:
    """s-exponent picked up by X^alpha Y^beta under the Satake dictionary."""
    alpha, beta = monomial[:n + 1], monomial[n + 1:]
    shift = -sum(a * k * (n + 1 - k) for k, a in enumerate(alpha, start=1))
    shift -= sum(b * k * (n - k) for k, b in enumerate(beta, start=1))
    return shift


def satake_substitute(p: SymPoly) -> HeckePolynomial:
    """X_k -> s^(-k(n+1-k)) T_{k,V}, Y_k -> s^(-k(n-k)) T_{k,W}; every s-power must end even."""
    n = p.n
    coefficients = {}
    for power, element in p.coefficients.items():
        row = {}
        for monomial, value in element.items():
            shifted = value.shift(satake_shift(monomial, n))
            if not shifted.is_even():
                raise NormalizationError(f"odd power of s at z^{power}: {shifted.render()}")
            row[monomial] = shifted
        coefficients[power] = row
    return HeckePolynomial(n, coefficients)


@lru_cache(maxsize=None)
def build_hecke_polynomial(n: int) -> HeckePolynomial:
    """The Hecke polynomial H_w for the pair (GL_{n+1} x GL_n, mu)."""
    if not 1 <= n <= MAX_N:
        raise DomainError(f"Hecke polynomials are built for 1 <= n <= {MAX_N}, got {n}")
    poly = satake_substitute(expand_product(n))
    if not poly.is_monic():
        raise InternalError(f"Hecke polynomial for n={n} is not monic of degree {poly.expected_degree}")
    logger.info(f"Built Hecke polynomial for n={n}: degree {poly.degree}, "
                f"{sum(len(c) for c in poly.coefficients.values())} monomials")
    return poly
