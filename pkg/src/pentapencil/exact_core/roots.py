"""Rational roots of rational polynomials."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import sympy

from ..errors import DegenerateInput
from .poly import Polynomial, primitive_integer_form


def _float_prefilter(ints: list[int], cands: np.ndarray) -> np.ndarray:
    """Mask of candidates whose float residual is small relative to the term sizes."""
    val = np.zeros_like(cands)
    size = np.zeros_like(cands)
    absx = np.abs(cands)
    for c in reversed(ints):
        val = val * cands + float(c)
        size = size * absx + abs(float(c))
    return np.abs(val) <= 1e-7 * size


def find_rational_roots(p: Polynomial) -> set[Fraction]:
    """All rational roots of a nonzero rational polynomial.

    Rational root theorem on the primitive integer form: every root in
    lowest terms is r/s with r | a_0 and s | a_n. Candidates are screened in
    floating point and every survivor is confirmed by exact evaluation, so
    the result contains only true roots. Divisors come from sympy's
    integer factorisation.
    """
    if p.is_zero():
        raise DegenerateInput("the zero polynomial vanishes everywhere")
    if p.degree == 0:
        return set()
    ints = primitive_integer_form(p)
    roots: set[Fraction] = set()
    if ints[0] == 0:
        roots.add(Fraction(0))
        while ints[0] == 0:
            ints = ints[1:]
    if len(ints) == 1:
        return roots
    exact = Polynomial(ints)
    num_int = sympy.divisors(abs(ints[0]))
    den_int = sympy.divisors(abs(ints[-1]))
    nums = np.array([float(d) for d in num_int])
    dens = np.array([float(d) for d in den_int])
    grid = np.outer(nums, 1.0 / dens)
    for sign in (1, -1):
        mask = _float_prefilter(ints, sign * grid)
        for i, j in zip(*np.nonzero(mask)):
            r = Fraction(sign * num_int[i], den_int[j])
            if r not in roots and exact(r) == 0:
                roots.add(r)
    return roots


def deflate(p: Polynomial, root) -> Polynomial:
    """Quotient of p by (t - root); raises if root is not exact root."""
    q, r = divmod(p, Polynomial([-root, 1]))
    if not r.is_zero():
        raise ValueError(f"{root} is not a root of {p}")
    return q
