"""Conic pencils, Cayley's closure test, a numeric Poncelet iterator and Jacobi j-invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DegenerateConic,
    DegenerateIntersection,
    DegeneratePencilBase,
    FlagError,
    NonGenericPencil,
)
from .exact_core import (
    DEFAULT_TOL,
    Polynomial,
    SquareMatrix,
    TruncatedSeries,
    deflate,
    find_rational_roots,
    fmt,
    hankel_det,
    is_exact,
    is_zero,
    j_from_lambda,
    oo,
    series_sqrt,
)
from .exact_core.projective import cross_ratio

_UPPER = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


class Conic:
    """A plane conic x^T M x = 0 with M a symmetric 3x3 matrix."""

    __slots__ = ("m",)

    def __init__(self, m, tol: float | None = None):
        if not isinstance(m, SquareMatrix):
            m = SquareMatrix([[Fraction(x) if isinstance(x, (int, str)) else x for x in r] for r in m])
        if m.n != 3:
            raise ValueError("a conic needs a 3x3 matrix")
        if not m.is_symmetric(tol):
            raise ValueError("conic matrix must be symmetric")
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    @classmethod
    def from_coeffs(cls, c11, c12, c13, c22, c23, c33) -> "Conic":
        """Matrix entries of the upper triangle, row by row."""
        c = [Fraction(v) if isinstance(v, (int, str)) else v for v in (c11, c12, c13, c22, c23, c33)]
        return cls([[c[0], c[1], c[2]], [c[1], c[3], c[4]], [c[2], c[4], c[5]]])

    @classmethod
    def diag(cls, a, b, c) -> "Conic":
        return cls.from_coeffs(a, 0, 0, b, 0, c)

    def coeffs(self) -> tuple:
        return tuple(self.m[ij] for ij in _UPPER)

    def __eq__(self, other):
        return isinstance(other, Conic) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"Conic{self.coeffs()!r}"

    def __call__(self, p):
        return self.m.quadratic_form(p)

    def det(self):
        return self.m.det()

    @property
    def exact(self) -> bool:
        return self.m.is_exact()

    def scale(self, c) -> "Conic":
        return Conic(self.m.scale(c))

    def __add__(self, other: "Conic") -> "Conic":
        return Conic(self.m + other.m)

    def transform(self, a) -> "Conic":
        """The conic A^T M A (image under the point map x -> A^{-1} x)."""
        a = SquareMatrix(a)
        return Conic(a.transpose() @ self.m @ a)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in r] for r in self.m.rows])

    def to_json(self) -> list:
        return [fmt(v) for v in self.coeffs()]


def _pencil_coeffs(c: Conic, d: Conic) -> Polynomial:
    # det(tC + D) = det D + tr(C adj D) t + tr(adj C D) t^2 + det C t^3
    adj_c, adj_d = c.m.adjugate(), d.m.adjugate()
    return Polynomial([d.det(), (c.m @ adj_d).trace(), (adj_c @ d.m).trace(), c.det()])


def pencil_cubic(c: Conic, d: Conic, tol: float | None = None) -> Polynomial:
    """g(t) = det(tC + D)."""
    g = _pencil_coeffs(c, d)
    if is_zero(g[0], tol, _scale(d)):
        raise DegeneratePencilBase("det D = 0")
    return g


def _scale(c: Conic) -> float:
    return max(abs(x) for x in c.coeffs()) ** 3


def pencil_series(c: Conic, d: Conic, order: int) -> TruncatedSeries:
    """sqrt(g(t)/g(0)) to the given order."""
    g = pencil_cubic(c, d)
    g0 = g[0]
    s = TruncatedSeries.from_polynomial(g * (1 / Fraction(g0) if is_exact(g0) else 1 / g0), order)
    return series_sqrt(s, order)


def _check_generic(g: Polynomial, tol: float | None = None):
    if g.is_exact():
        if g.gcd(g.derivative()).degree > 0:
            raise NonGenericPencil("g(t) has a repeated root: the conics are tangent")
        return
    roots = g.roots()
    span = max(1.0, *(abs(r) for r in roots))
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= max(tol or DEFAULT_TOL, 1e-7) * span:
                raise NonGenericPencil("g(t) has a repeated root: the conics are tangent")


def _cayley_index(k: int) -> tuple[int, int]:
    if k < 3:
        raise ValueError("Cayley's test needs k >= 3")
    if k % 2:
        return 2, (k - 1) // 2 - 1
    return 3, k // 2 - 2


def cayley_determinant(c: Conic, d: Conic, k: int, series: TruncatedSeries | None = None):
    """N_{2,m-1} for k = 2m+1 and N_{3,m-2} for k = 2m, on the normalized series."""
    n, m = _cayley_index(k)
    if series is None:
        series = pencil_series(c, d, k - 1)
    return hankel_det(series.coeffs, n, m)


def _nondegenerate(*conics: Conic):
    for q in conics:
        if is_zero(q.det(), None, _scale(q)):
            raise DegenerateConic(f"{q!r} is singular")


def _hankel_zero(value, series: TruncatedSeries, m: int, tol: float | None) -> bool:
    if is_exact(value):
        return value == 0
    size = max(1.0, *(abs(a) for a in series.coeffs))
    return is_zero(value, tol, size ** (m + 1))


def cayley_closes(c: Conic, d: Conic, k: int, tol: float | None = None) -> bool:
    """Whether a Poncelet k-gon inscribed in C and circumscribed about D exists.

    Evaluated exactly for rational conics. Tangent pencils (repeated roots of
    g, e.g. concentric circles) are accepted here; the Hankel test itself
    stays meaningful for them.
    """
    _nondegenerate(c, d)
    series = pencil_series(c, d, k - 1)
    value = cayley_determinant(c, d, k, series)
    return _hankel_zero(value, series, _cayley_index(k)[1], tol)


def min_closure(c: Conic, d: Conic, kmax: int = 12, tol: float | None = None) -> int | None:
    """Smallest 3 <= k <= kmax passing Cayley's test, or None."""
    _nondegenerate(c, d)
    series = pencil_series(c, d, kmax - 1)
    for k in range(3, kmax + 1):
        value = cayley_determinant(c, d, k, series)
        if _hankel_zero(value, series, _cayley_index(k)[1], tol):
            return k
    return None


def dual_conic(c: Conic) -> Conic:
    """The adjugate: the conic of lines tangent to C."""
    _nondegenerate(c)
    return Conic(c.m.adjugate())


# numeric projective helpers


def _normalize(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    k = int(np.argmax(np.abs(v)))
    v = v / v[k]
    return v / np.linalg.norm(v)


def projective_distance(a, b) -> float:
    """Distance between two projective points after unit normalization, scale-free."""
    a = _normalize(a)
    b = _normalize(b)
    return float(np.linalg.norm(a - b))


def _cross_matrix(p: np.ndarray) -> np.ndarray:
    return np.array([[0, p[2], -p[1]], [-p[2], 0, p[0]], [p[1], -p[0], 0]])


def _split_degenerate(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Two lines whose product is the rank-2 symmetric matrix m."""
    b = np.array([[np.linalg.det(np.delete(np.delete(m, j, 0), i, 1)) * (-1) ** (i + j)
                   for j in range(3)] for i in range(3)])
    i = int(np.argmax(np.abs(np.diag(b))))
    if abs(b[i, i]) == 0:
        raise DegenerateIntersection("pencil member is a double line")
    beta = np.sqrt(-b[i, i] + 0j)
    p = b[:, i] / beta
    a = m + _cross_matrix(p)
    r, s = np.unravel_index(int(np.argmax(np.abs(a))), a.shape)
    return a[r, :], a[:, s]


def _solve_binary_quadratic(a, b, c) -> list[tuple[complex, complex]]:
    """Roots (lambda : mu) of a lambda^2 + 2 b lambda mu + c mu^2."""
    a, b, c = complex(a), complex(b), complex(c)
    disc = np.sqrt(b * b - a * c)
    if abs(a) >= abs(c):
        if a == 0:
            return [(1, 0), (1, 0)]
        return [((-b + disc) / a, 1), ((-b - disc) / a, 1)]
    return [(1, (-b + disc) / c), (1, (-b - disc) / c)]


def _line_basis(line: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Two points spanning the line."""
    order = np.argsort(np.abs(line))
    e1, e2 = np.eye(3)[order[0]], np.eye(3)[order[1]]
    a = np.cross(line, e1)
    b = np.cross(line, e2)
    return a, b


def line_conic_points(line: np.ndarray, m: np.ndarray) -> list[np.ndarray]:
    """The two points where a line meets the conic m."""
    a, b = _line_basis(line)
    roots = _solve_binary_quadratic(a @ m @ a, a @ m @ b, b @ m @ b)
    return [_normalize(lam * a + mu * b) for lam, mu in roots]


def _pencil_roots(g: Polynomial) -> list:
    # rational roots are taken exactly so that double roots do not smear
    exact = []
    if g.is_exact():
        for r in sorted(find_rational_roots(g)):
            exact.append(r)
            g = deflate(g, r)
    rest = np.roots([complex(c) for c in reversed(g.coeffs)]) if g.degree > 0 else []
    return [complex(r) for r in exact] + list(rest)


def conic_intersection(c: Conic, d: Conic, tol: float | None = None, generic_only: bool = True) -> list[np.ndarray]:
    """The four common points of C and D as unit-normalized complex vectors.

    A singular member of the pencil tC + D is split into two lines and each
    line is intersected with C. With ``generic_only=False`` tangent pencils
    are allowed and points come out with multiplicity.
    """
    g = _pencil_coeffs(c, d)
    if g.degree < 3 or is_zero(g[3], tol, _scale(c)):
        raise DegenerateConic("C must be nondegenerate")
    if generic_only:
        _check_generic(g, tol)
    cm, dm = c.to_numpy(), d.to_numpy()
    roots = _pencil_roots(g)
    # prefer the singular member farthest from a double line
    members = [t * cm + dm for t in roots]

    def rank2_quality(m):
        sv = np.linalg.svd(m, compute_uv=False)
        return sv[1] / sv[0]

    member = max(members, key=rank2_quality)
    if rank2_quality(member) < 1e-9:
        raise DegenerateIntersection("every singular pencil member is a double line")
    l1, l2 = _split_degenerate(member)
    return line_conic_points(l1, cm) + line_conic_points(l2, cm)


# Poncelet flags and the iterator


@dataclass(frozen=True)
class PonceletFlag:
    """A point on C together with a line through it tangent to D."""

    point: np.ndarray
    line: np.ndarray

    def distance(self, other: "PonceletFlag") -> float:
        return projective_distance(self.point, other.point) + projective_distance(self.line, other.line)


def _real_if_close(v: np.ndarray) -> np.ndarray:
    return np.real_if_close(_normalize(v), tol=1e6)


def _check_flag(cm, adj_d, flag: PonceletFlag, tol: float):
    p = _normalize(flag.point)
    ell = _normalize(flag.line)
    scale_c = np.max(np.abs(cm))
    scale_d = np.max(np.abs(adj_d))
    if abs(p @ cm @ p) > tol * scale_c:
        raise FlagError("flag point is not on C")
    if abs(ell @ adj_d @ ell) > tol * scale_d:
        raise FlagError("flag line is not tangent to D")
    if abs(ell @ p) > tol:
        raise FlagError("flag point is not on the flag line")


def make_flag(c: Conic, d: Conic, point, branch: int = 0, tol: float = 1e-9) -> PonceletFlag:
    """The flag at ``point`` (on C) using one of the two tangents from it to D."""
    cm = c.to_numpy()
    adj_d = dual_conic(d).to_numpy()
    p = _normalize(np.asarray(point, dtype=complex))
    if abs(p @ cm @ p) > tol * np.max(np.abs(cm)):
        raise FlagError("point is not on C")
    # lines through p are spanned by p x e_i, p x e_j
    a, b = _line_basis(p)
    roots = _solve_binary_quadratic(a @ adj_d @ a, a @ adj_d @ b, b @ adj_d @ b)
    lam, mu = roots[branch % 2]
    flag = PonceletFlag(_real_if_close(p), _real_if_close(lam * a + mu * b))
    _check_flag(cm, adj_d, flag, tol)
    return flag


def flip_point(c: Conic, flag: PonceletFlag) -> PonceletFlag:
    """Second intersection of the flag line with C (the involution on points)."""
    cm = c.to_numpy()
    p, ell = _normalize(flag.point), _normalize(flag.line)
    q = np.cross(ell, p)
    new = (q @ cm @ q) * p - 2 * (p @ cm @ q) * q
    return PonceletFlag(_real_if_close(new), flag.line)


def flip_line(d: Conic, flag: PonceletFlag) -> PonceletFlag:
    """Second tangent to D through the flag point (the involution on lines)."""
    adj_d = dual_conic(d).to_numpy()
    p, ell = _normalize(flag.point), _normalize(flag.line)
    m = np.cross(p, ell)
    new = (m @ adj_d @ m) * ell - 2 * (ell @ adj_d @ m) * m
    return PonceletFlag(flag.point, _real_if_close(new))


def poncelet_step(c: Conic, d: Conic, flag: PonceletFlag) -> PonceletFlag:
    return flip_line(d, flip_point(c, flag))


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    steps: int
    gap: float
    gaps: tuple = ()
    vertices: tuple = ()

    def to_json(self) -> dict:
        return {"closed": self.closed, "steps": self.steps, "gap": self.gap, "gaps": list(self.gaps)}


def poncelet_iterate(c: Conic, d: Conic, start: PonceletFlag, max_steps: int = 12,
                     tol: float = 1e-9) -> ClosureReport:
    """Iterate the Poncelet map from ``start`` until the flag (point and line) returns."""
    cm = c.to_numpy()
    adj_d = dual_conic(d).to_numpy()
    _check_flag(cm, adj_d, start, max(tol, 1e-9))
    flag = start
    gaps = []
    vertices = [start.point]
    for step in range(1, max_steps + 1):
        flag = poncelet_step(c, d, flag)
        gap = flag.distance(start)
        gaps.append(gap)
        if gap < tol:
            return ClosureReport(True, step, gap, tuple(gaps), tuple(vertices))
        vertices.append(flag.point)
    return ClosureReport(False, max_steps, min(gaps), tuple(gaps), tuple(vertices))


# j-invariants


def point_on_conic(c: Conic, seed: int = 0) -> np.ndarray:
    """A (possibly complex) point of C, from a seeded random line."""
    rng = np.random.default_rng(seed)
    line = rng.normal(size=3)
    return line_conic_points(line, c.to_numpy())[0]


def conic_parameters(c: Conic, points, base=None, seed: int = 0) -> list:
    """Stereographic parameters of points of C, projecting from a base point on C."""
    cm = c.to_numpy()
    o = point_on_conic(c, seed) if base is None else _normalize(base)
    rng = np.random.default_rng(seed + 1)
    a, b = rng.normal(size=3), rng.normal(size=3)
    out = []
    for p in points:
        if projective_distance(p, o) < 1e-12:
            ell = cm @ o
        else:
            ell = np.cross(o, p)
        la, lb = ell @ a, ell @ b
        if abs(lb) <= 1e-14 * abs(la):
            out.append(oo)
        else:
            out.append(-la / lb)
    return out


def _branch_j(c: Conic, points, seed: int = 0):
    params = conic_parameters(c, points, seed=seed)
    return complex(j_from_lambda(cross_ratio(*params, tol=1e-12), tol=1e-12))


def jacobi_j(c: Conic, d: Conic, seed: int = 0, tol: float | None = None) -> complex:
    """j of the double cover of C branched at the four points of C and D."""
    pts = conic_intersection(c, d, tol)
    return _branch_j(c, pts, seed)


def dual_family_j(ct: Conic, d: Conic, seed: int = 0, tol: float | None = None) -> complex:
    """j of the double cover of D* branched at the four common tangents of C_t and D."""
    dual_ct, dual_d = dual_conic(ct), dual_conic(d)
    lines = conic_intersection(dual_d, dual_ct, tol)
    return _branch_j(dual_d, lines, seed)


def polygon_vertices(c: Conic, d: Conic, start: PonceletFlag, steps: int) -> list[np.ndarray]:
    """Affine vertices of the Poncelet polygon (for plotting)."""
    out = []
    flag = start
    for _ in range(steps):
        p = np.real(_normalize(flag.point))
        out.append(p[:2] / p[2] if abs(p[2]) > 1e-12 else p[:2] * np.inf)
        flag = poncelet_step(c, d, flag)
    return out
