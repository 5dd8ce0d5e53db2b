"""Truncated power series, the square root, and Hankel determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import LengthError, NormalizationError
from .linalg import det
from .poly import Polynomial
from .scalars import DEFAULT_TOL, all_exact, is_zero


class TruncatedSeries:
    """The prefix a_0 + a_1 t + ... + a_N t^N of a formal power series.

    Arithmetic is carried out modulo t^(N+1); the order of a result is the
    smaller of the operands' orders.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "TruncatedSeries":
        return cls([p[k] for k in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise LengthError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self[k] + other[k] for k in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self[k] - other[k] for k in range(n + 1)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries([sum((a[i] * b[k - i] for i in range(k + 1)), 0) for k in range(n + 1)])

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries([c * a for a in self.coeffs])


def series_sqrt(s: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Square root h of a series with constant term exactly 1, with h_0 = 1.

    Solves h*h = s coefficient by coefficient:
    2 h_n = s_n - sum_{k=1}^{n-1} h_k h_{n-k}.
    Exact on rational input; ``h*h - s`` vanishes through ``order``.
    """
    if order is None:
        order = s.order
    if order > s.order:
        raise LengthError(f"series known to order {s.order}, asked for {order}")
    c0 = s[0]
    if not (c0 == 1):
        raise NormalizationError(f"constant term must be 1, got {c0}")
    exact = all_exact(s.coeffs)
    half = Fraction(1, 2) if exact else 0.5
    h = [Fraction(1) if exact else 1.0]
    for n in range(1, order + 1):
        acc = s[n]
        for k in range(1, n):
            acc -= h[k] * h[n - k]
        h.append(acc * half)
    return TruncatedSeries(h)


def hankel_matrix(coeffs: Sequence, n: int, m: int) -> list[list]:
    """The (m+1) x (m+1) matrix with entry (i, j) = a_{n+i+j}."""
    if n < 0 or m < 0:
        raise ValueError("Hankel indices must be nonnegative")
    need = n + 2 * m
    if len(coeffs) <= need:
        raise LengthError(f"need coefficients a_{n}..a_{need}, have {len(coeffs)}")
    return [[coeffs[n + i + j] for j in range(m + 1)] for i in range(m + 1)]


def hankel_det(coeffs: Sequence, n: int, m: int):
    """N_{n,m} = det of the Hankel window starting at a_n of size m+1.

    Exact coefficient streams are handled fraction-free.
    """
    return det(hankel_matrix(list(coeffs), n, m))


@dataclass(frozen=True)
class BorelReport:
    rational: bool
    m: int
    checked: tuple[int, ...]
    witness: tuple[int, object] | None = None

    def __bool__(self):
        return self.rational


def borel_is_rational(coeffs: Sequence, m: int, n0: int, window: int,
                      tol: float | None = None) -> BorelReport:
    """Check N_{n,m} = 0 for every n0 <= n <= n0 + window.

    A finite window cannot certify rationality of an infinite stream; the
    report only says whether this window vanishes, with the first nonzero
    determinant as witness otherwise.
    """
    coeffs = list(coeffs)
    if len(coeffs) <= n0 + window + 2 * m:
        raise LengthError(
            f"window up to n={n0 + window} with m={m} needs {n0 + window + 2 * m + 1} coefficients")
    exact = all_exact(coeffs)
    scale = max((abs(c) for c in coeffs), default=1.0) if not exact else 1
    checked = []
    for n in range(n0, n0 + window + 1):
        value = hankel_det(coeffs, n, m)
        checked.append(n)
        if not is_zero(value, DEFAULT_TOL if tol is None else tol, scale ** (m + 1) if not exact else 1):
            return BorelReport(False, m, tuple(checked), (n, value))
    return BorelReport(True, m, tuple(checked))

