"""Spherical realization of a pentagram and its orthocentric central projection."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from ..errors import ProjectionAtInfinity, RealizationError
from .frieze import Pentagram


@dataclass(frozen=True)
class SphericalPentagram:
    """Five unit vectors with v_i . v_{i+2} = 0 (a self-polar spherical pentagon).

    The pentagram's part x_i is tan^2 of the arc from v_i to v_{i+1}.
    """

    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.array(self.v, dtype=float)
        if v.shape != (5, 3):
            raise ValueError("expected five vectors in 3-space")
        v.setflags(write=False)
        object.__setattr__(self, "v", v)

    def parts(self) -> np.ndarray:
        """tan^2 of the five consecutive arcs."""
        c = np.array([self.v[i] @ self.v[(i + 1) % 5] for i in range(5)])
        return (1 - c * c) / (c * c)

    def polarity_residual(self) -> float:
        return max(abs(self.v[i] @ self.v[(i + 2) % 5]) for i in range(5))

    def norm_residual(self) -> float:
        return float(np.max(np.abs(np.linalg.norm(self.v, axis=1) - 1)))

    def part_residual(self, p: Pentagram) -> float:
        x = np.array([float(t) for t in p.x])
        return float(np.max(np.abs(self.parts() - x) / np.maximum(1.0, x)))


def _gram_seed(c: np.ndarray) -> np.ndarray:
    # Gram matrix of the five vectors: 1 on the diagonal, c_i between neighbours
    gram = np.eye(5)
    for i in range(5):
        gram[i, (i + 1) % 5] = gram[(i + 1) % 5, i] = c[i]
    w, q = np.linalg.eigh(gram)
    top = np.argsort(w)[::-1][:3]
    return q[:, top] * np.sqrt(np.clip(w[top], 0, None))


def _gauge(v: np.ndarray) -> np.ndarray:
    # rotate so that v1 = e1 and v2 lies in the e1e2-plane
    e1 = v[0] / np.linalg.norm(v[0])
    e2 = v[1] - (v[1] @ e1) * e1
    e2 /= np.linalg.norm(e2)
    e3 = np.cross(e1, e2)
    if np.linalg.det(np.array([e1, e2, e3])) < 0:
        e3 = -e3
    return v @ np.array([e1, e2, e3]).T


def spherical_realization(p: Pentagram, tol: float = 1e-12) -> SphericalPentagram:
    """Unit vectors v_1..v_5 realizing ``p`` as a right-angled spherical star.

    A Gram-matrix factorization gives the seed; a least-squares polish then
    drives the 15 constraints (unit norms, self-polarity, parts) to zero.
    """
    x = np.array([float(t) for t in p.x])
    c = 1 / np.sqrt(1 + x)
    seed = _gauge(_gram_seed(c))

    def residuals(flat):
        v = flat.reshape(5, 3)
        out = [v[i] @ v[i] - 1 for i in range(5)]
        out += [v[i] @ v[(i + 2) % 5] for i in range(5)]
        out += [v[i] @ v[(i + 1) % 5] - c[i] for i in range(5)]
        return np.array(out)

    sol = least_squares(residuals, seed.ravel(), xtol=1e-15, ftol=1e-15, gtol=1e-15)
    if not sol.success or np.max(np.abs(sol.fun)) > 1e3 * tol:
        raise RealizationError(f"spherical solve did not converge (residual {np.max(np.abs(sol.fun)):.3g})")
    v = sol.x.reshape(5, 3)
    v /= np.linalg.norm(v, axis=1)[:, None]
    return SphericalPentagram(_gauge(v))


def inner_pentagon(s: SphericalPentagram) -> np.ndarray:
    """Unit vectors at the crossings of diagonals (v_i, v_{i+2}) and (v_{i+1}, v_{i+3})."""
    v = s.v
    hemi = v.sum(axis=0)
    out = []
    for i in range(5):
        n1 = np.cross(v[i], v[(i + 2) % 5])
        n2 = np.cross(v[(i + 1) % 5], v[(i + 3) % 5])
        q = np.cross(n1, n2)
        q /= np.linalg.norm(q)
        out.append(q if q @ hemi >= 0 else -q)
    return np.array(out)


def default_center(s: SphericalPentagram) -> np.ndarray:
    c = inner_pentagon(s).sum(axis=0)
    return c / np.linalg.norm(c)


@dataclass(frozen=True)
class ProjectionReport:
    points: np.ndarray  # 5 x 2 planar coordinates in the tangent plane at the center
    intersections: np.ndarray  # 10 x 2 pairwise altitude intersections
    deviation: float  # max pairwise distance between the intersections
    center_offset: float  # distance from their mean to the projected center (the origin)

    def to_json(self) -> dict:
        return {
            "points": self.points.tolist(),
            "deviation": self.deviation,
            "center_offset": self.center_offset,
        }


def _line_intersection(p, d, q, e):
    # p + s d = q + t e
    m = np.array([d, -e]).T
    s, _ = np.linalg.solve(m, q - p)
    return p + s * d


def orthocentric_projection(s: SphericalPentagram, center=None, tol: float = 1e-12) -> ProjectionReport:
    """Central projection onto the tangent plane at ``center`` and the altitude concurrency check.

    The altitude from vertex i is the perpendicular to the side joining the
    images of v_{i+2} and v_{i+3}.
    """
    c = default_center(s) if center is None else np.asarray(center, dtype=float)
    c = c / np.linalg.norm(c)
    dots = s.v @ c
    bad = [i for i in range(5) if abs(dots[i]) <= tol]
    if bad:
        raise ProjectionAtInfinity(f"vertex {bad[0] + 1} is 90 degrees from the center")
    # orthonormal basis of the tangent plane
    a = np.array([1.0, 0, 0]) if abs(c[0]) < 0.9 else np.array([0, 1.0, 0])
    b1 = a - (a @ c) * c
    b1 /= np.linalg.norm(b1)
    b2 = np.cross(c, b1)
    proj = s.v / dots[:, None]
    pts = np.array([[q @ b1, q @ b2] for q in proj])

    def perp(u):
        return np.array([-u[1], u[0]])

    altitudes = [(pts[i], perp(pts[(i + 3) % 5] - pts[(i + 2) % 5])) for i in range(5)]
    inter = []
    for i in range(5):
        for j in range(i + 1, 5):
            inter.append(_line_intersection(*altitudes[i], *altitudes[j]))
    inter = np.array(inter)
    dev = max(np.linalg.norm(inter[i] - inter[j]) for i in range(10) for j in range(i + 1, 10))
    offset = float(np.linalg.norm(inter.mean(axis=0)))
    return ProjectionReport(pts, inter, float(dev), offset)
