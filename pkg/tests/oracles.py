"""Independent reference computations and seeded input generators shared by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from pentapencil.poncelet import Conic


def random_rational(rng: random.Random, bound: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_conic_pair(rng: random.Random) -> tuple[Conic, Conic]:
    """Two random rational conics with nonsingular matrices and a squarefree pencil cubic."""
    while True:
        c = Conic.from_coeffs(*[random_rational(rng) for _ in range(6)])
        d = Conic.from_coeffs(*[random_rational(rng) for _ in range(6)])
        if c.det() == 0 or d.det() == 0:
            continue
        t = sp.symbols("t")
        g = sp.Matrix(3, 3, lambda i, j: t * c.m[i, j] + d.m[i, j]).det()
        if sp.discriminant(sp.Poly(g, t)) != 0:
            return c, d


def random_nested_ellipses(rng: random.Random) -> tuple[Conic, Conic]:
    """A rational ellipse C and a smaller rational ellipse D strictly inside it."""
    a = Fraction(rng.randint(1, 9), 10)
    b = Fraction(rng.randint(1, 9), 10)
    h = Fraction(rng.randint(-3, 3), 20)
    # C: a x^2 + 2 h x y + b y^2 = 1, positive definite since |h| < min(a, b) is not required;
    # force it by adding |h| to both diagonals
    a += abs(h)
    b += abs(h)
    s = Fraction(rng.randint(15, 40), 10)
    u = Fraction(rng.randint(-2, 2), 20)
    v = Fraction(rng.randint(-2, 2), 20)
    c = Conic.from_coeffs(a, h, 0, b, 0, -1)
    # D: the same shape scaled by 1/sqrt(s), translated by (u, v)
    da, dh, db = s * a, s * h, s * b
    d13 = -(da * u + dh * v)
    d23 = -(dh * u + db * v)
    d33 = da * u * u + 2 * dh * u * v + db * v * v - 1
    d = Conic.from_coeffs(da, dh, d13, db, d23, d33)
    return c, d


def binomial_sqrt_coeffs(c: Fraction, n: int) -> list[Fraction]:
    """Coefficients of (1 + c t)^(1/2) via C(1/2, k) c^k."""
    out = []
    binom = Fraction(1)
    for k in range(n + 1):
        out.append(binom * c**k)
        binom = binom * (Fraction(1, 2) - k) / (k + 1)
    return out


def sympy_det(rows) -> Fraction:
    return Fraction(str(sp.Matrix(rows).det()))
