"""Dense univariate polynomials over the package scalars."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..errors import DegenerateInput
from .scalars import is_exact


class Polynomial:
    """Immutable dense polynomial, coefficients lowest degree first.

    Trailing zeros are stripped, so ``coeffs[-1]`` is the leading
    coefficient unless the polynomial is zero (``coeffs == ()``).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots, lead=1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-r, 1])
        return p

    @classmethod
    def interpolate(cls, xs, ys) -> "Polynomial":
        """Lagrange interpolation; exact when the data are exact."""
        result = cls()
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            term = cls([yi])
            for j, xj in enumerate(xs):
                if j != i:
                    term = term * cls([-xj, 1]) * (Fraction(1) / (xi - xj) if is_exact(xi, xj) else 1.0 / (xi - xj))
            result = result + term
        return result

    # basic data

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return is_exact(*self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # arithmetic

    @staticmethod
    def _wrap(other):
        return other if isinstance(other, Polynomial) else Polynomial([other])

    def __add__(self, other):
        other = self._wrap(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other):
        other = self._wrap(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        exact = self.is_exact() and other.is_exact()
        rem = list(self.coeffs)
        dq = other.degree
        lead = Fraction(other.lead) if exact else other.lead
        quot = [0] * max(len(rem) - dq, 1)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # calculus and transforms

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Polynomial":
        lead = Fraction(self.lead) if self.is_exact() else self.lead
        return Polynomial([c / lead for c in self.coeffs])

    def scale_argument(self, a) -> "Polynomial":
        """p(a*t)."""
        return Polynomial([c * a**k for k, c in enumerate(self.coeffs)])

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """t^degree * p(1/t); ``degree`` defaults to the actual degree."""
        d = self.degree if degree is None else degree
        cs = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Polynomial(cs[::-1])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd by the Euclidean algorithm (exact coefficients only)."""
        a, b = self, other
        if not (a.is_exact() and b.is_exact()):
            raise TypeError("gcd needs exact coefficients")
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def is_squarefree(self) -> bool:
        return self.gcd(self.derivative()).degree == 0

    def roots(self) -> np.ndarray:
        """All complex roots, numerically (numpy companion matrix)."""
        if self.degree < 1:
            return np.array([], dtype=complex)
        cs = [complex(c) for c in reversed(self.coeffs)]
        return np.roots(cs).astype(complex)


def primitive_integer_form(p: Polynomial) -> list[int]:
    """Integer coefficients with gcd 1 and positive leading coefficient."""
    if p.is_zero():
        raise DegenerateInput("zero polynomial has no primitive form")
    cs = [Fraction(c) for c in p.coeffs]
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints
