"""Ternary cubics with a marked point and the chord-tangent group law."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from ..errors import BadBasePoint, DegenerateCubic, DegenerateCurve
from ..exact_core import Polynomial, quartic_j
from .equations import primitive

MONOMIALS = tuple(
    tuple(sum(1 for v in combo if v == i) for i in range(3))
    for combo in combinations_with_replacement(range(3), 3)
)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class PlaneCubic:
    """A homogeneous cubic K(d0, d1, d2) with a marked base point O on it.

    Coefficients are kept as a dict from exponent triples to rationals.
    """

    __slots__ = ("coeffs", "origin")

    def __init__(self, coeffs: dict, origin):
        cs = {m: Fraction(coeffs.get(m, 0)) for m in MONOMIALS}
        if all(v == 0 for v in cs.values()):
            raise DegenerateCubic("the zero form is not a cubic")
        object.__setattr__(self, "coeffs", cs)
        origin = primitive(origin)
        object.__setattr__(self, "origin", origin)
        if self(origin) != 0:
            raise DegenerateCubic("the base point is not on the cubic")

    def __setattr__(self, name, value):
        raise AttributeError("PlaneCubic is immutable")

    @classmethod
    def from_product(cls, terms, origin) -> "PlaneCubic":
        """Build sum of (linear form) * (quadratic form) terms.

        ``terms`` is a list of (sign, lin, quad) with lin a 3-vector and quad
        a symmetric 3x3 nested list.
        """
        out: dict = {}
        for sign, lin, quad in terms:
            for i in range(3):
                if lin[i] == 0:
                    continue
                for j in range(3):
                    for k in range(3):
                        if quad[j][k] == 0:
                            continue
                        e = [0, 0, 0]
                        e[i] += 1
                        e[j] += 1
                        e[k] += 1
                        key = tuple(e)
                        out[key] = out.get(key, 0) + sign * lin[i] * quad[j][k]
        return cls(out, origin)

    def __call__(self, p):
        total = 0
        for (i, j, k), c in self.coeffs.items():
            if c:
                total += c * p[0] ** i * p[1] ** j * p[2] ** k
        return total

    def gradient(self, p) -> tuple:
        g = [0, 0, 0]
        for (i, j, k), c in self.coeffs.items():
            if not c:
                continue
            if i:
                g[0] += c * i * p[0] ** (i - 1) * p[1] ** j * p[2] ** k
            if j:
                g[1] += c * j * p[0] ** i * p[1] ** (j - 1) * p[2] ** k
            if k:
                g[2] += c * k * p[0] ** i * p[1] ** j * p[2] ** (k - 1)
        return tuple(g)

    def contains(self, p) -> bool:
        return self(p) == 0

    def to_json(self) -> dict:
        return {
            "coefficients": {"".join(map(str, m)): str(c) for m, c in sorted(self.coeffs.items()) if c},
            "origin": list(self.origin),
        }

    # group law

    def third_point(self, p, q) -> tuple[int, ...]:
        """The third intersection of the line pq (tangent if p = q) with the cubic."""
        p, q = primitive(p), primitive(q)
        if p == q:
            t = self.gradient(p)
            if all(x == 0 for x in t):
                raise DegenerateCubic(f"{p} is a singular point")
            q2 = _cross(t, p)
            lam, mu = self(q2), -_dot(self.gradient(q2), p)
            if lam == 0 and mu == 0:
                raise DegenerateCubic("tangent line is contained in the cubic")
            return primitive([lam * a + mu * b for a, b in zip(p, q2)])
        lam = _dot(self.gradient(q), p)
        mu = -_dot(self.gradient(p), q)
        if lam == 0 and mu == 0:
            raise DegenerateCubic("chord is contained in the cubic")
        return primitive([lam * a + mu * b for a, b in zip(p, q)])

    def add(self, p, q) -> tuple[int, ...]:
        return self.third_point(self.origin, self.third_point(p, q))

    def neg(self, p) -> tuple[int, ...]:
        return self.third_point(p, self.third_point(self.origin, self.origin))

    def sub(self, p, q) -> tuple[int, ...]:
        return self.add(p, self.neg(q))

    def mul(self, n: int, p) -> tuple[int, ...]:
        """n * p by double-and-add."""
        if n < 0:
            return self.mul(-n, self.neg(p))
        result = self.origin
        base = primitive(p)
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def order(self, p, limit: int = 24) -> int | None:
        """Smallest m <= limit with m * p = O, else None."""
        q = primitive(p)
        for m in range(1, limit + 1):
            if q == self.origin:
                return m
            q = self.add(q, p)
        return None

    # invariants

    def branch_quartic(self) -> Polynomial:
        """Discriminant quartic of the projection from O.

        A point m(s) = A + s B on a fixed line; the line O m(s) meets the
        cubic again where a1 l^2 + a2 l mu + a3 mu^2 = 0, so the double cover
        of the s-line is branched at the roots of a2^2 - 4 a1 a3.
        """
        o = self.origin
        k = max(range(3), key=lambda i: abs(o[i]))
        i, j = [t for t in range(3) if t != k]
        a = [0, 0, 0]
        b = [0, 0, 0]
        a[i] = 1
        b[j] = 1
        # sample each a_r(s) at enough points and interpolate exactly
        xs = [Fraction(n) for n in range(5)]
        a1s, a2s, a3s = [], [], []
        grad_o = self.gradient(o)
        for s in xs:
            m = [a[t] + s * b[t] for t in range(3)]
            a1s.append(_dot(grad_o, m))
            a2s.append(_dot(self.gradient(m), o))
            a3s.append(self(m))
        a1 = Polynomial.interpolate(xs, a1s)
        a2 = Polynomial.interpolate(xs, a2s)
        a3 = Polynomial.interpolate(xs, a3s)
        return a2 * a2 - 4 * a1 * a3

    def j_invariant(self):
        """Exact j of the cubic via its branch quartic; BadBasePoint if singular."""
        q = self.branch_quartic()
        if q.degree < 3:
            raise BadBasePoint("projection from the base point is degenerate")
        try:
            return quartic_j(q)
        except DegenerateCurve as exc:
            raise BadBasePoint(f"singular cubic: {exc}") from exc
