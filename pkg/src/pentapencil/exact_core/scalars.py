"""Scalar conventions shared by the whole package.

Two instantiations of the scalar field are supported:

* exact: ``int`` and ``fractions.Fraction``; comparisons are exact.
* numeric: ``float`` and ``complex``; zero tests use a relative tolerance.

Values are never mixed silently: any float/complex operand switches an
operation to the numeric path.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Iterable

DEFAULT_TOL = 1e-9


def is_exact(*values) -> bool:
    """True if every value is an int or a Fraction (bools excluded)."""
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
            return False
    return True


def all_exact(values: Iterable) -> bool:
    return is_exact(*values)


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"-3/7"`` to Fraction.

    Floats are rejected: a float is not an exact rational input.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def parse_scalar(text: str, mode: str = "exact"):
    """Parse a command-line scalar. ``mode`` is ``"exact"`` or ``"float"``."""
    text = text.strip()
    if mode == "exact":
        return Fraction(text)
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def is_zero(value, tol: float | None = None, scale: float = 1.0) -> bool:
    """Exact zero test for exact values, ``|value| <= tol*max(scale, 1)`` otherwise."""
    if is_exact(value):
        return value == 0
    if tol is None:
        tol = DEFAULT_TOL
    return abs(value) <= tol * max(abs(scale), 1.0)


def close(a, b, tol: float | None = None) -> bool:
    """Equality for exact values, relative closeness for numeric ones."""
    if is_exact(a, b):
        return a == b
    if tol is None:
        tol = DEFAULT_TOL
    return abs(a - b) <= tol * max(abs(a), abs(b), 1.0)


def as_float(value) -> float:
    if isinstance(value, numbers.Complex) and not isinstance(value, numbers.Real):
        return value.real
    return float(value)


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = to_fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def fmt(value) -> str | float | list:
    """JSON-friendly rendering: exact values as ``"p/q"`` strings."""
    if is_exact(value):
        return str(Fraction(value))
    if isinstance(value, complex):
        return [value.real, value.imag]
    return float(value)
