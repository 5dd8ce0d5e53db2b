"""Elements p + q*sqrt(d) of a real quadratic field Q(sqrt(d))."""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import rational_sqrt, to_fraction

_SMALL_PRIMES = [p for p in range(2, 200) if all(p % q for q in range(2, int(p**0.5) + 1))]


def _normalize_radicand(d: Fraction) -> tuple[int, Fraction]:
    """Write sqrt(d) = k * sqrt(m) with m an integer free of small square factors."""
    m = d.numerator * d.denominator
    k = Fraction(1, d.denominator)
    for p in _SMALL_PRIMES:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
    r = math.isqrt(m)
    if r * r == m:
        k *= r
        m = 1
    return m, k


class QuadraticSurd:
    """Exact value p + q*sqrt(d) with p, q rational and d a nonnegative rational.

    The radicand is stored as an integer ``d`` with small square factors
    removed; when sqrt(d) is rational the value collapses to a rational
    (``q == 0``, ``d == 1``). Arithmetic is closed inside one field; mixing
    different fields raises TypeError except for equality and ordering.
    """

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d=1):
        p, q, d = to_fraction(p), to_fraction(q), to_fraction(d)
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if q == 0 or d == 0:
            q, m = Fraction(0), 1
        else:
            m, k = _normalize_radicand(d)
            q = q * k
            if m == 1:
                p, q = p + q, Fraction(0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", m)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticSurd is immutable")

    @classmethod
    def rational(cls, r) -> "QuadraticSurd":
        return cls(r, 0, 1)

    def is_rational(self) -> bool:
        return self.q == 0

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        return self.p * self.p - self.q * self.q * self.d

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.d)

    def __repr__(self):
        if self.q == 0:
            return f"QuadraticSurd({self.p})"
        return f"QuadraticSurd({self.p} + {self.q}*sqrt({self.d}))"

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + ({self.q})*sqrt({self.d})"

    def _common(self, other) -> tuple["QuadraticSurd", "QuadraticSurd"]:
        if not isinstance(other, QuadraticSurd):
            other = QuadraticSurd.rational(other)
        if self.q == 0 or other.q == 0 or self.d == other.d:
            d = self.d if self.q != 0 else other.d
            return (QuadraticSurd._raw(self.p, self.q, d), QuadraticSurd._raw(other.p, other.q, d))
        ratio = rational_sqrt(Fraction(self.d, other.d))
        if ratio is not None:
            return self, QuadraticSurd._raw(other.p, other.q / ratio, self.d)
        raise TypeError(f"sqrt({self.d}) and sqrt({other.d}) generate different fields")

    @classmethod
    def _raw(cls, p, q, d):
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "d", d)
        return obj

    def __add__(self, other):
        a, b = self._common(other)
        return QuadraticSurd(a.p + b.p, a.q + b.q, a.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadraticSurd) else -to_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        return QuadraticSurd(a.p * b.p + a.q * b.q * a.d, a.p * b.q + a.q * b.p, a.d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticSurd":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in a quadratic field")
        return QuadraticSurd(self.p / n, -self.q / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, QuadraticSurd):
            other = QuadraticSurd.rational(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticSurd.rational(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticSurd.rational(1)
        for _ in range(n):
            result = result * self
        return result

    def sign(self) -> int:
        """Exact sign of p + q*sqrt(d)."""
        sp = (self.p > 0) - (self.p < 0)
        sq = (self.q > 0) - (self.q < 0)
        if sq == 0:
            return sp
        if sp == 0 or sp == sq:
            return sq
        # opposite signs: compare p^2 with q^2 d
        lhs, rhs = self.p * self.p, self.q * self.q * self.d
        if lhs == rhs:
            return 0
        return sp if lhs > rhs else sq

    def __eq__(self, other):
        if not isinstance(other, (QuadraticSurd, int, Fraction)):
            return NotImplemented
        if not isinstance(other, QuadraticSurd):
            other = QuadraticSurd.rational(other)
        # with irrational sqrt(d), p + q sqrt(d) determines (p, q*q*d, sign q)
        return (self.p == other.p and self.q * self.q * self.d == other.q * other.q * other.d
                and (self.q > 0) == (other.q > 0) and (self.q < 0) == (other.q < 0))

    def __hash__(self):
        return hash((self.p, self.q * self.q * self.d, self.q > 0))

    def _cmp(self, other) -> int:
        try:
            return (self - other).sign()
        except TypeError:
            diff = float(self) - float(other)
            return (diff > 0) - (diff < 0)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0
