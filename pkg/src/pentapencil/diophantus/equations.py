"""Double equations a x^2 + b x w + c w^2 = u^2, a' x^2 + b' x w + c' w^2 = v^2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import CoincidenceFailure, DegenerateCurve, DegenerateIntersection, OutOfDomain
from ..exact_core import Polynomial, SquareMatrix, rational_sqrt, to_fraction
from ..poncelet import Conic, pencil_cubic


def primitive(vec) -> tuple[int, ...]:
    """Primitive integer representative of a projective point, first nonzero entry positive."""
    fr = [Fraction(x) for x in vec]
    if all(x == 0 for x in fr):
        raise ValueError("the zero vector is not a projective point")
    den = 1
    for x in fr:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class DoubleEquation:
    """q1(x, w) = u^2 and q2(x, w) = v^2 with q1 = a x^2 + b x w + c w^2, q2 likewise primed."""

    a: Fraction
    b: Fraction
    c: Fraction
    ap: Fraction
    bp: Fraction
    cp: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "ap", "bp", "cp"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if self.b**2 - 4 * self.a * self.c == 0 or self.bp**2 - 4 * self.ap * self.cp == 0:
            raise DegenerateCurve("each quadratic must have nonzero discriminant")
        q1, q2 = (self.a, self.b, self.c), (self.ap, self.bp, self.cp)
        # proportional iff all 2x2 minors vanish
        if all(q1[i] * q2[j] == q1[j] * q2[i] for i in range(3) for j in range(i + 1, 3)):
            raise DegenerateIntersection("the two quadratics are proportional")

    @classmethod
    def parse(cls, text: str) -> "DoubleEquation":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise ValueError("expected six comma-separated coefficients a,b,c,a',b',c'")
        return cls(*(Fraction(p) for p in parts))

    def coeffs(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.ap, self.bp, self.cp)

    def scale(self, k) -> "DoubleEquation":
        return DoubleEquation(*(k * v for v in self.coeffs()))

    def q1(self, x, w=1):
        return self.a * x * x + self.b * x * w + self.c * w * w

    def q2(self, x, w=1):
        return self.ap * x * x + self.bp * x * w + self.cp * w * w

    def binary_forms(self) -> tuple[SquareMatrix, SquareMatrix]:
        """Gram matrices of q1, q2 in the variables (w, x)."""
        q1 = SquareMatrix([[self.c, self.b / 2], [self.b / 2, self.a]])
        q2 = SquareMatrix([[self.cp, self.bp / 2], [self.bp / 2, self.ap]])
        return q1, q2

    def quadrics(self) -> tuple[SquareMatrix, SquareMatrix]:
        """Phi (for q1 - u^2) and Psi (for q2 - v^2) in the coordinates (w, x, u, v)."""
        q1, q2 = self.binary_forms()

        def block(q, uu, vv):
            z = Fraction(0)
            return SquareMatrix([
                [q[0, 0], q[0, 1], z, z],
                [q[1, 0], q[1, 1], z, z],
                [z, z, Fraction(uu), z],
                [z, z, z, Fraction(vv)],
            ])

        return block(q1, -1, 0), block(q2, 0, -1)

    def plane_conics(self) -> tuple[Conic, Conic]:
        """The conics q1 = u^2 in (w:x:u) and q2 = v^2 in (w:x:v)."""
        q1, q2 = self.binary_forms()
        c = Conic([[q1[0, 0], q1[0, 1], 0], [q1[1, 0], q1[1, 1], 0], [0, 0, Fraction(-1)]])
        d = Conic([[q2[0, 0], q2[0, 1], 0], [q2[1, 0], q2[1, 1], 0], [0, 0, Fraction(-1)]])
        return c, d

    def point(self, w, x, u, v) -> "OmegaPoint":
        p = OmegaPoint(*primitive((w, x, u, v)))
        if not p.satisfies(self):
            raise OutOfDomain(f"{p} does not satisfy {self}")
        return p

    def to_json(self) -> list:
        return [str(v) for v in self.coeffs()]


@dataclass(frozen=True, order=True)
class OmegaPoint:
    """A projective solution (w : x : u : v), stored as a primitive integer vector."""

    w: int
    x: int
    u: int
    v: int

    def __iter__(self):
        return iter((self.w, self.x, self.u, self.v))

    def __getitem__(self, i):
        return (self.w, self.x, self.u, self.v)[i]

    def satisfies(self, de: DoubleEquation) -> bool:
        return (self.u * self.u == de.q1(self.x, self.w)
                and self.v * self.v == de.q2(self.x, self.w))

    def x_ratio(self):
        """x / w, or None at infinity."""
        return None if self.w == 0 else Fraction(self.x, self.w)

    def __str__(self):
        return f"({self.w}:{self.x}:{self.u}:{self.v})"

    def to_json(self) -> list:
        return [self.w, self.x, self.u, self.v]

    @classmethod
    def parse(cls, text: str) -> "OmegaPoint":
        parts = text.replace(",", ":").split(":")
        if len(parts) != 4:
            raise ValueError(f"expected w:x:u:v, got {text!r}")
        return cls(*primitive([Fraction(p) for p in parts]))


def quadric_pencil_poly(de: DoubleEquation) -> Polynomial:
    """F(xi) = det(Phi - xi Psi) = -xi det(Q1 - xi Q2), a cubic in xi."""
    q1, q2 = de.binary_forms()
    # det(Q1 - xi Q2) for 2x2 symmetric blocks
    p11 = Polynomial([q1[0, 0], -q2[0, 0]])
    p12 = Polynomial([q1[0, 1], -q2[0, 1]])
    p22 = Polynomial([q1[1, 1], -q2[1, 1]])
    d2 = p11 * p22 - p12 * p12
    f = Polynomial([0, -1]) * d2
    if f.degree != 3:
        raise DegenerateIntersection("the quadric pencil determinant is not a cubic")
    return f


def conic_pencil_cubic(de: DoubleEquation) -> Polynomial:
    """g(t) = det(tC + D) for the two plane conics of the double equation."""
    c, d = de.plane_conics()
    return pencil_cubic(c, d)


@dataclass(frozen=True)
class Certificate:
    kappa: Fraction
    F: Polynomial
    g: Polynomial


def pencil_coincidence(de: DoubleEquation) -> Certificate:
    """A constant kappa with F(xi) = kappa g(-xi), or CoincidenceFailure."""
    f = quadric_pencil_poly(de)
    g_neg = conic_pencil_cubic(de).scale_argument(-1)
    if g_neg.degree != f.degree:
        raise CoincidenceFailure(f"F = {f} and g(-xi) = {g_neg} have different degrees")
    kappa = f.lead / g_neg.lead
    if f != g_neg * kappa:
        raise CoincidenceFailure(f"F(xi) = {f} is not proportional to g(-xi) = {g_neg}")
    return Certificate(kappa, f, g_neg)


@dataclass(frozen=True)
class PencilRelation:
    """(xi - 1) F(xi) = xi^4 g(-1/xi), verified exactly."""

    F: Polynomial
    g: Polynomial
    lhs: Polynomial
    rhs: Polynomial


def pencil_relation(de: DoubleEquation) -> PencilRelation:
    """The exact identity tying the quadric pencil to the conic pencil.

    The two cubics share the roots of det(Q1 - xi Q2) after xi -> -1/xi; the
    extra factors (xi - 1) and xi come from the u and v directions.
    """
    f = quadric_pencil_poly(de)
    g = conic_pencil_cubic(de)
    lhs = Polynomial([-1, 1]) * f
    rhs = Polynomial.x() * g.scale_argument(-1).reversed(3)
    if lhs != rhs:
        raise CoincidenceFailure(f"(xi-1)F = {lhs} but xi^4 g(-1/xi) = {rhs}")
    return PencilRelation(f, g, lhs, rhs)


def involutions(p: OmegaPoint) -> tuple[OmegaPoint, OmegaPoint, OmegaPoint]:
    """(i(p), j(p), pmap(p)): negate v, negate u, negate both."""
    w, x, u, v = p
    return (
        OmegaPoint(*primitive((w, x, u, -v))),
        OmegaPoint(*primitive((w, x, -u, v))),
        OmegaPoint(*primitive((w, x, -u, -v))),
    )


def _lifts(de: DoubleEquation, x, w) -> list[OmegaPoint]:
    r1 = rational_sqrt(de.q1(x, w))
    r2 = rational_sqrt(de.q2(x, w))
    if r1 is None or r2 is None:
        return []
    out = set()
    for su in (1, -1):
        for sv in (1, -1):
            out.add(OmegaPoint(*primitive((w, x, su * r1, sv * r2))))
    return sorted(out)


def search_solutions(de: DoubleEquation, bound: int) -> list[OmegaPoint]:
    """All solutions with x/w of height at most ``bound``, plus those at w = 0."""
    if bound < 1:
        raise ValueError("height bound must be at least 1")
    found: set[OmegaPoint] = set(_lifts(de, 1, 0))
    for w in range(1, bound + 1):
        for x in range(-bound, bound + 1):
            if math.gcd(x, w) != 1:
                continue
            found.update(_lifts(de, x, w))
    return sorted(found)
