"""Projection of the quartic curve to a plane cubic and Fermat's ascent."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BadBasePoint, DegenerateCubic, IndeterminacyPoint, OutOfDomain
from ..exact_core import quartic_j
from .cubic import PlaneCubic
from .equations import DoubleEquation, OmegaPoint, primitive, quadric_pencil_poly


def _matvec(m, v):
    return [sum(m[i, j] * v[j] for j in range(4)) for i in range(4)]


def _form(m, v):
    return sum(v[i] * m[i, j] * v[j] for i in range(4) for j in range(4))


@dataclass(frozen=True)
class CubicModel:
    """Plane cubic obtained by projecting the curve from ``base`` onto the chart X_k = 0."""

    de: DoubleEquation
    base: OmegaPoint
    chart: int
    cubic: PlaneCubic

    def _embed(self, d) -> list:
        x = list(d)
        x.insert(self.chart, 0)
        return x

    def omega_to_cubic(self, p: OmegaPoint) -> tuple[int, ...]:
        if not p.satisfies(self.de):
            raise OutOfDomain(f"{p} is not a solution")
        if p == self.base:
            return self.cubic.origin
        p0 = list(self.base)
        k = self.chart
        x = [p[i] * p0[k] - p[k] * p0[i] for i in range(4)]
        del x[k]
        return primitive(x)

    def cubic_to_omega(self, d, index: int | None = None) -> OmegaPoint:
        """Residual intersection of the line (base, d) with both quadrics."""
        phi, psi = self.de.quadrics()
        p0 = list(self.base)
        e = self._embed(d)
        for m in (phi, psi):
            n = _matvec(m, p0)
            lin = sum(n[i] * e[i] for i in range(4))
            x = [-_form(m, e) * p0[i] + 2 * lin * e[i] for i in range(4)]
            if any(v != 0 for v in x):
                pt = OmegaPoint(*primitive(x))
                if pt.satisfies(self.de):
                    return pt
        raise IndeterminacyPoint(f"the inverse map is undefined at {tuple(d)}", index)

    def j_invariant(self):
        return self.cubic.j_invariant()


def project_to_cubic(de: DoubleEquation, p0: OmegaPoint) -> CubicModel:
    """Project the curve from the rational point p0 to a plane cubic.

    With n1 = Phi p0, n2 = Psi p0 restricted to the chart, the image is
    (n1.d) Psi(d) - (n2.d) Phi(d) = 0 and p0 itself maps to n1 x n2.
    """
    if not p0.satisfies(de):
        raise OutOfDomain(f"{p0} is not a solution")
    phi, psi = de.quadrics()
    base = list(p0)
    chart = next(i for i in range(4) if base[i] != 0)
    keep = [i for i in range(4) if i != chart]
    n1 = _matvec(phi, base)
    n2 = _matvec(psi, base)
    l1 = [n1[i] for i in keep]
    l2 = [n2[i] for i in keep]
    phi_h = [[phi[i, j] for j in keep] for i in keep]
    psi_h = [[psi[i, j] for j in keep] for i in keep]
    origin = (l1[1] * l2[2] - l1[2] * l2[1], l1[2] * l2[0] - l1[0] * l2[2], l1[0] * l2[1] - l1[1] * l2[0])
    if all(v == 0 for v in origin):
        raise BadBasePoint(f"{p0} is a singular point of the intersection")
    try:
        cubic = PlaneCubic.from_product([(1, l1, psi_h), (-1, l2, phi_h)], origin)
    except DegenerateCubic as exc:
        raise BadBasePoint(str(exc)) from exc
    model = CubicModel(de, p0, chart, cubic)
    model.j_invariant()  # raises BadBasePoint when the cubic is singular
    return model


def omega_j(de: DoubleEquation):
    """Exact j of eta^2 = F(xi), the quadric pencil determinant (root at infinity included)."""
    return quartic_j(quadric_pencil_poly(de))


@dataclass(frozen=True)
class AscentResult:
    points: tuple  # OmegaPoint or None where the inverse map is undefined
    cubic_points: tuple
    step: tuple  # P1' - P0' on the cubic
    order: int | None  # order of the step class, if at most 24
    indeterminate: tuple = field(default=())

    @property
    def finite_order(self) -> bool:
        return self.order is not None

    @property
    def period(self) -> int | None:
        return self.order

    def distinct_points(self) -> list[OmegaPoint]:
        out = []
        for p in self.points:
            if p is not None and p not in out:
                out.append(p)
        return out

    def to_json(self) -> dict:
        return {
            "points": [None if p is None else p.to_json() for p in self.points],
            "cubic_points": [list(p) for p in self.cubic_points],
            "order": self.order,
            "finite_order": self.finite_order,
            "indeterminate": list(self.indeterminate),
        }


def fermat_ascend(de: DoubleEquation, r0: OmegaPoint, p0: OmegaPoint, p1: OmegaPoint, n: int,
                  torsion_limit: int = 24) -> AscentResult:
    """R_k ~ R_0 + k (P_1 - P_0) for k = 0..n, computed on the projected cubic."""
    for p in (r0, p0, p1):
        if not p.satisfies(de):
            raise OutOfDomain(f"{p} is not a solution")
    if len({r0, p0, p1}) < 3:
        raise OutOfDomain("R0, P0 and P1 must be distinct")
    model = project_to_cubic(de, p0)
    cubic = model.cubic
    step = cubic.sub(model.omega_to_cubic(p1), model.omega_to_cubic(p0))
    order = cubic.order(step, torsion_limit)
    current = model.omega_to_cubic(r0)
    points, cubic_points, bad = [], [], []
    for k in range(n + 1):
        cubic_points.append(current)
        try:
            points.append(model.cubic_to_omega(current, k))
        except IndeterminacyPoint:
            points.append(None)
            bad.append(k)
        current = cubic.add(current, step)
    return AscentResult(tuple(points), tuple(cubic_points), step, order, tuple(bad))
