"""Gauss coordinates of miraculous pentagrams and the period-five frieze."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import DegenerateOrbit, OutOfDomain
from ..exact_core.scalars import DEFAULT_TOL, fmt, is_exact

GOLDEN = (1 + math.sqrt(5)) / 2


def frieze_residuals(x) -> list:
    """The five values x_{i+2} x_{i+3} - 1 - x_i (indices mod 5), zero on solutions."""
    return [x[(i + 2) % 5] * x[(i + 3) % 5] - 1 - x[i] for i in range(5)]


def _coerce(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    return v


@dataclass(frozen=True)
class Pentagram:
    """Five positive Gauss coordinates (alpha, beta, gamma, delta, epsilon).

    Construction checks 1 + x_i = x_{i+2} x_{i+3} for all i: exactly for
    rational coordinates, within ``tol`` (relative) for floats.
    """

    x: tuple
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        x = tuple(_coerce(v) for v in self.x)
        if len(x) != 5:
            raise ValueError("a pentagram has exactly five coordinates")
        object.__setattr__(self, "x", x)
        if any(not (v > 0) for v in x):
            raise OutOfDomain(f"Gauss coordinates must be positive: {x}")
        res = frieze_residuals(x)
        if self.exact:
            bad = [i for i, r in enumerate(res) if r != 0]
        else:
            bad = [i for i, r in enumerate(res) if abs(r) > self.tol * max(1.0, abs(x[i]))]
        if bad:
            raise OutOfDomain(f"frieze relations {[i + 1 for i in bad]} fail for {x}")

    @property
    def exact(self) -> bool:
        return is_exact(*self.x)

    alpha = property(lambda self: self.x[0])
    beta = property(lambda self: self.x[1])
    gamma = property(lambda self: self.x[2])
    delta = property(lambda self: self.x[3])
    epsilon = property(lambda self: self.x[4])

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, i):
        return self.x[i]

    def shift(self, k: int = 1) -> "Pentagram":
        """Cyclic relabelling x_i -> x_{i+k}; again a pentagram."""
        return Pentagram(tuple(self.x[(i + k) % 5] for i in range(5)), self.tol)

    def to_float(self) -> "Pentagram":
        return Pentagram(tuple(float(v) for v in self.x), self.tol)

    def to_json(self) -> list:
        return [fmt(v) for v in self.x]

    @classmethod
    def from_json(cls, values) -> "Pentagram":
        return cls(tuple(Fraction(v) if isinstance(v, str) else v for v in values))

    def lyness_order(self) -> tuple:
        """Coordinates in orbit order (x1, x4, x2, x5, x3) of y_{n+1} y_{n-1} = 1 + y_n."""
        x = self.x
        return (x[0], x[3], x[1], x[4], x[2])


def complete_frieze(x1, x2, tol: float = DEFAULT_TOL) -> Pentagram:
    """The pentagram with alpha = x1, beta = x2.

    x4 = x1 x2 - 1, x5 = (1 + x2)/x4, x3 = (1 + x5)/x2; the two relations not
    used in the construction are re-checked by :class:`Pentagram`.
    """
    x1, x2 = _coerce(x1), _coerce(x2)
    if not (x1 > 0 and x2 > 0):
        raise OutOfDomain("x1 and x2 must be positive")
    if not (x1 * x2 > 1):
        raise OutOfDomain("x1*x2 must exceed 1")
    x4 = x1 * x2 - 1
    x5 = (1 + x2) / x4
    x3 = (1 + x5) / x2
    return Pentagram((x1, x2, x3, x4, x5), tol)


def complete_frieze_gamma_epsilon(gamma, epsilon, tol: float = DEFAULT_TOL) -> Pentagram:
    """The pentagram with given gamma = x3 and epsilon = x5.

    alpha = (1 + gamma)/epsilon and beta = (1 + epsilon)/gamma, then the
    (alpha, beta) chart finishes the job.
    """
    gamma, epsilon = _coerce(gamma), _coerce(epsilon)
    if not (gamma > 0 and epsilon > 0):
        raise OutOfDomain("gamma and epsilon must be positive")
    return complete_frieze((1 + gamma) / epsilon, (1 + epsilon) / gamma, tol)


def lyness_orbit(y1, y2, k: int) -> list:
    """First k terms of y_{n+1} = (1 + y_n) / y_{n-1}."""
    y1, y2 = _coerce(y1), _coerce(y2)
    if not (y1 > 0 and y2 > 0):
        raise OutOfDomain("Lyness seeds must be positive")
    seq = [y1, y2][:k]
    while len(seq) < k:
        prev = seq[-2]
        if prev == 0:
            raise DegenerateOrbit(f"zero term at index {len(seq) - 2}")
        seq.append((1 + seq[-1]) / prev)
    return seq


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1 (and F_0 = 0)."""
    if n < 0:
        raise ValueError("negative index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def convergent(n: int) -> Fraction:
    """phi_n = F_{n+1} / F_n, the n-th continued-fraction convergent of the golden ratio."""
    if n < 1:
        raise ValueError("convergents start at n = 1")
    return Fraction(fibonacci(n + 1), fibonacci(n))


def fibonacci_pentagram(n: int) -> Pentagram:
    """P_n = (phi_{n+1}, phi_{n+1}, phi_n, phi_{n+2} phi_{n+1} / phi_n, phi_n)."""
    if n < 1:
        raise ValueError("Fibonacci pentagrams are indexed from n = 1")
    a, b, c = convergent(n), convergent(n + 1), convergent(n + 2)
    return Pentagram((b, b, a, c * b / a, a))


def regular_pentagram() -> Pentagram:
    """All five coordinates equal to the golden ratio (numeric)."""
    return Pentagram((GOLDEN,) * 5)


def omega(p: Pentagram):
    """The product alpha*beta*gamma*delta*epsilon."""
    out = 1
    for v in p.x:
        out = out * v
    return out


def fibonacci_omega(n: int) -> Fraction:
    """omega(P_n) = F_{n+2}^2 F_{n+3} / (F_{n+1}^2 F_n) in closed form."""
    f = fibonacci
    return Fraction(f(n + 2) ** 2 * f(n + 3), f(n + 1) ** 2 * f(n))

