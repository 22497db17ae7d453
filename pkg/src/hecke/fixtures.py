"""
Regression fixtures of the symbolic Hecke polynomials.
"""

from __future__ import annotations

from pathlib import Path
from typing import List, Union

from loguru import logger

from utils import DomainError

from .polynomial import HeckePolynomial, parse_polynomial, render_coefficient

HEADER = "# Hecke polynomial of (GL_{n+1} x GL_n, mu), s = q^(1/2), one line per power of z\n"


def fixture_path(n: int, directory: Union[str, Path]) -> Path:
    return Path(directory) / f"hecke_n{n}.txt"


def write_fixture(poly: HeckePolynomial, directory: Union[str, Path]) -> Path:
    if poly.q is not None:
        raise DomainError("fixtures hold the symbolic polynomial, not a specialization")
    path = fixture_path(poly.n, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(HEADER + f"# n = {poly.n}\n" + poly.render())
    logger.info(f"Wrote Hecke fixture {path}")
    return path


def load_fixture(path: Union[str, Path], n: int) -> HeckePolynomial:
    path = Path(path)
    if not path.exists():
        raise DomainError(f"fixture {path} does not exist")
    return parse_polynomial(path.read_text(), n)


def diff_against_fixture(poly: HeckePolynomial, path: Union[str, Path]) -> List[str]:
    """Human-readable list of z-coefficients that differ from the fixture; empty on a match."""
    expected = load_fixture(path, poly.n)
    problems = []
    powers = set(poly.coefficients) | set(expected.coefficients)
    for p in sorted(powers, reverse=True):
        got, want = poly.coefficient(p), expected.coefficient(p)
        if got != want:
            problems.append(
                f"z^{p}: computed {render_coefficient(got, poly.n)} but fixture has {render_coefficient(want, poly.n)}"
            )
    return problems
