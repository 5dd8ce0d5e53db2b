"""Gauss's characteristic cubic t(2t-1)^2 = (t-1) omega and the Legendre modulus."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotRealizable, OutOfDomain
from ..exact_core import Polynomial, QuadraticSurd, deflate, find_rational_roots, is_exact
from ..exact_core.scalars import DEFAULT_TOL
from .frieze import Pentagram, fibonacci, fibonacci_omega, omega as pentagram_omega


def gauss_cubic(omega) -> Polynomial:
    """4t^3 - 4t^2 + (1 - omega) t + omega."""
    if is_exact(omega):
        omega = Fraction(omega)
    return Polynomial([omega, 1 - omega, -4, 4])


@dataclass(frozen=True)
class GaussRoots:
    """Sorted roots G < 0 < Gp <= Gpp of the Gauss cubic.

    In the exact case the roots are :class:`QuadraticSurd` values of one
    real quadratic field Q(sqrt(d)); ``rational`` names the root(s) that are
    rational and ``d`` is the radicand of the irrational pair (1 if none).
    In the numeric case they are floats and ``d`` is None.
    """

    G: object
    Gp: object
    Gpp: object
    omega: object
    exact: bool
    d: int | None = None
    rational: tuple[str, ...] = ()

    def as_tuple(self):
        return (self.G, self.Gp, self.Gpp)

    def as_floats(self) -> tuple[float, float, float]:
        return tuple(float(r) for r in self.as_tuple())


def _exact_gauss_roots(omega: Fraction) -> GaussRoots | None:
    cubic = gauss_cubic(omega)
    rational = sorted(find_rational_roots(cubic))
    if not rational:
        return None
    r = rational[0]
    a, b, c = (deflate(cubic, r)[k] for k in (2, 1, 0))
    disc = b * b - 4 * a * c
    if disc < 0:
        raise NotRealizable(f"omega = {omega}: two roots of the Gauss cubic are complex")
    half = Fraction(1) / (2 * a)
    pair = [QuadraticSurd(-b * half, -half, disc), QuadraticSurd(-b * half, half, disc)]
    roots = sorted([QuadraticSurd.rational(r)] + pair)
    names = ("G", "Gp", "Gpp")
    rational_names = tuple(n for n, v in zip(names, roots) if v.is_rational())
    d = pair[1].d if not pair[1].is_rational() else 1
    return GaussRoots(*roots, omega=omega, exact=True, d=d, rational=rational_names)


def _numeric_gauss_roots(omega: float, tol: float) -> GaussRoots:
    cubic = gauss_cubic(float(omega))
    approx = cubic.roots()
    neg = [z for z in approx if z.real < 0 and abs(z.imag) <= 1e-6 * (1 + abs(z))]
    if len(neg) != 1:
        raise NotRealizable(f"omega = {omega}: expected exactly one negative real root")
    g = neg[0].real
    dcubic = cubic.derivative()
    for _ in range(8):
        step = cubic(g) / dcubic(g)
        g -= step
        if abs(step) <= 1e-16 * max(1.0, abs(g)):
            break
    # deflate by (t - g): 4t^2 + b t + c
    a = 4.0
    b = -4.0 + 4.0 * g
    c = (1.0 - omega) + g * b
    disc = b * b - 4 * a * c
    if disc < -tol * b * b:
        raise NotRealizable(f"omega = {omega}: two roots of the Gauss cubic are complex")
    if abs(disc) <= tol * b * b:
        gp = gpp = -b / (2 * a)
    else:
        s = math.sqrt(disc)
        # stable quadratic formula
        q = -0.5 * (b + math.copysign(s, b))
        gp, gpp = sorted((q / a, c / q))
    return GaussRoots(float(g), float(gp), float(gpp), omega=omega, exact=False)


def gauss_roots(omega, tol: float = DEFAULT_TOL) -> GaussRoots:
    """Roots of t(2t-1)^2 = (t-1) omega, sorted G < 0 < G' <= G''.

    For rational omega a rational root is extracted exactly and the other two
    are solved over Q(sqrt(d)); if the cubic is irreducible over Q, or omega is
    a float, the roots are computed numerically. Near-double roots
    (discriminant below ``tol`` relative) are merged.
    """
    if not (omega > 0):
        raise OutOfDomain("omega must be positive")
    if is_exact(omega):
        roots = _exact_gauss_roots(Fraction(omega))
        if roots is not None:
            return roots
        omega = float(omega)
    return _numeric_gauss_roots(float(omega), tol)


@dataclass(frozen=True)
class FibonacciRoot:
    n: int
    value: Fraction
    which: str  # "Gpp" (largest) or "Gp" (middle)


def fib_rational_root(n: int) -> FibonacciRoot:
    """F_{n+3} / (2 F_{n+1}) and which positive root of the cubic for P_n it is."""
    if n < 1:
        raise ValueError("n must be at least 1")
    value = Fraction(fibonacci(n + 3), 2 * fibonacci(n + 1))
    roots = gauss_roots(fibonacci_omega(n))
    if not roots.exact:
        raise NotRealizable(f"cubic for P_{n} has no rational root")
    for name in ("Gp", "Gpp", "G"):
        if getattr(roots, name) == value:
            return FibonacciRoot(n, value, name)
    raise NotRealizable(f"{value} is not a root of the Gauss cubic for P_{n}")


def remaining_quadratic(n: int) -> Polynomial:
    """2t^2 + (F_n/F_{n+1}) t - F_{n+1}/F_n - F_n/F_{n+1} - 2."""
    r = Fraction(fibonacci(n), fibonacci(n + 1))
    return Polynomial([-1 / r - r - 2, r, 2])


def remaining_roots_closed_form(n: int) -> tuple[QuadraticSurd, QuadraticSurd]:
    """-r/4 -+ (1/4) sqrt(r^2 + 8r + 8/r + 16) with r = F_n / F_{n+1}, in increasing order."""
    r = Fraction(fibonacci(n), fibonacci(n + 1))
    radicand = r * r + 8 * r + 8 / r + 16
    lo = QuadraticSurd(-r / 4, Fraction(-1, 4), radicand)
    hi = QuadraticSurd(-r / 4, Fraction(1, 4), radicand)
    return lo, hi


def legendre_k2(p, tol: float = DEFAULT_TOL):
    """k^2 = (G'^-2 - G''^-2) / (G'^-2 - G^-2).

    ``p`` may be a :class:`Pentagram`, an omega value, or precomputed
    :class:`GaussRoots`. Exact roots give an exact element of Q(sqrt(d));
    numeric roots give a float, with a double root G' = G'' mapped to 0.
    """
    if isinstance(p, GaussRoots):
        roots = p
    elif isinstance(p, Pentagram):
        roots = gauss_roots(pentagram_omega(p), tol)
    else:
        roots = gauss_roots(p, tol)
    g, gp, gpp = roots.as_tuple()
    if roots.exact:
        if gp == gpp:
            return QuadraticSurd.rational(0)
        if gp == 0 or gpp == 0:
            raise NotRealizable("a positive root vanishes")
        num = gp ** -2 - gpp ** -2
        den = gp ** -2 - g ** -2
        return num / den
    if abs(gp - gpp) <= tol * max(1.0, abs(gpp)):
        return 0.0
    return (gp ** -2 - gpp ** -2) / (gp ** -2 - g ** -2)
