"""Cross-ratios on the projective line and j-invariants of genus-one double covers."""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateConfiguration, DegenerateCurve
from .poly import Polynomial
from .scalars import DEFAULT_TOL, is_exact, is_zero


class _Infinity:
    """The point at infinity of the projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"

    def __reduce__(self):
        return (_Infinity, ())


oo = _Infinity()


def _homog(p):
    return (1, 0) if p is oo else (p, 1)


def _bracket(a, b):
    return a[0] * b[1] - a[1] * b[0]


def cross_ratio(p1, p2, p3, p4, tol: float | None = None):
    """Cross-ratio normalised so that (0, 1, oo, z) -> z.

    lambda = [p4,p1][p2,p3] / ([p4,p3][p2,p1]) in homogeneous brackets,
    i.e. the image of p4 under the Moebius map sending p1, p2, p3 to 0, 1, oo.
    Points may be exact, float/complex, or :data:`oo`.
    """
    pts = [_homog(p) for p in (p1, p2, p3, p4)]
    exact = all(is_exact(*h) for h in pts)
    for i in range(4):
        for j in range(i + 1, 4):
            br = _bracket(pts[i], pts[j])
            scale = 1.0 if exact else max(1.0, *(abs(x) for x in pts[i] + pts[j]))
            if is_zero(br, DEFAULT_TOL if tol is None else tol, scale):
                raise DegenerateConfiguration(f"points {i + 1} and {j + 1} coincide")
    h1, h2, h3, h4 = pts
    num = _bracket(h4, h1) * _bracket(h2, h3)
    den = _bracket(h4, h3) * _bracket(h2, h1)
    if exact:
        return Fraction(num) / Fraction(den)
    return num / den


def j_from_lambda(lam, tol: float | None = None):
    """j = 256 (l^2 - l + 1)^3 / (l^2 (1 - l)^2) of the Legendre curve y^2 = x(x-1)(x-l)."""
    if lam is oo:
        raise DegenerateCurve("lambda = oo gives a singular curve")
    if is_exact(lam):
        lam = Fraction(lam)
    if is_zero(lam, tol) or is_zero(lam - 1, tol):
        raise DegenerateCurve(f"lambda = {lam} gives a singular curve")
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (1 - lam) ** 2)


def lambda_orbit(lam) -> list:
    """The six cross-ratios obtained by permuting four points."""
    return [lam, 1 - lam, 1 / lam, 1 / (1 - lam), (lam - 1) / lam, lam / (lam - 1)]


def j_from_branch_points(points, tol: float | None = None):
    """j-invariant of the double cover of P^1 branched at four points."""
    if len(points) != 4:
        raise ValueError("need exactly four branch points")
    return j_from_lambda(cross_ratio(*points, tol=tol), tol)


def cubic_j(g: Polynomial, tol: float | None = None) -> complex:
    """Numeric j-invariant of y^2 = g(t) for a cubic g (roots of g plus oo)."""
    if g.degree != 3:
        raise DegenerateCurve(f"expected a cubic, got degree {g.degree}")
    r = list(g.roots())
    return j_from_branch_points([r[0], r[1], r[2], oo], tol)


def quartic_branch_j(q: Polynomial, tol: float | None = None) -> complex:
    """Numeric j of y^2 = q(s) for a binary quartic (a cubic means one root at oo)."""
    if q.degree == 3:
        return cubic_j(q, tol)
    if q.degree != 4:
        raise DegenerateCurve(f"expected degree 3 or 4, got {q.degree}")
    return j_from_branch_points(list(q.roots()), tol)


def quartic_invariants(q: Polynomial):
    """Invariants I, J of the binary quartic a s^4 + b s^3 + c s^2 + d s + e."""
    e, d, c, b, a = (q[k] for k in range(5))
    inv_i = 12 * a * e - 3 * b * d + c * c
    inv_j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c**3
    return inv_i, inv_j


def quartic_j(q: Polynomial):
    """j = 6912 I^3 / (4 I^3 - J^2); exact for rational coefficients.

    Accepts degree 3 or 4 (a cubic is a quartic with a root at infinity).
    """
    if q.degree not in (3, 4):
        raise DegenerateCurve(f"expected degree 3 or 4, got {q.degree}")
    inv_i, inv_j = quartic_invariants(q)
    if is_exact(inv_i, inv_j):
        inv_i, inv_j = Fraction(inv_i), Fraction(inv_j)
    disc = 4 * inv_i**3 - inv_j**2
    if is_zero(disc, tol=None, scale=abs(4 * inv_i**3) + abs(inv_j**2) if not is_exact(disc) else 1):
        raise DegenerateCurve("binary form has a repeated root")
    return 6912 * inv_i**3 / disc
