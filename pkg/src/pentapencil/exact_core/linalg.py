"""Small square matrices with exact (fraction-free) and numeric determinants."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .scalars import DEFAULT_TOL, all_exact


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination.

    Every intermediate entry is itself a minor of the input, so sizes stay
    bounded by Hadamard's inequality and all divisions are exact.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rational_det(rows: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix.

    Each row is scaled to integers by the lcm of its denominators, the
    integer determinant is taken fraction-free, and the scales divided out.
    """
    scale = 1
    int_rows = []
    for r in rows:
        fr = [Fraction(x) for x in r]
        m = 1
        for x in fr:
            m = m * x.denominator // math.gcd(m, x.denominator)
        scale *= m
        int_rows.append([int(x * m) for x in fr])
    return Fraction(bareiss_det(int_rows), scale)


def float_det(rows: Sequence[Sequence]):
    """Determinant by Gaussian elimination with partial pivoting.

    Works for float and complex entries. Returns 0 when a pivot column is
    identically zero; tolerance decisions are left to the caller.
    """
    a = [list(r) for r in rows]
    n = len(a)
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda r: abs(a[r][k]))
        if a[p][k] == 0:
            return 0.0 * det
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        akk = a[k][k]
        det = det * akk
        for i in range(k + 1, n):
            f = a[i][k] / akk
            if f != 0:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return det


def det(rows: Sequence[Sequence]):
    """Determinant, dispatching on exactness of the entries."""
    if all_exact(x for r in rows for x in r):
        return rational_det(rows)
    return float_det(rows)


class SquareMatrix:
    """Immutable n x n matrix over the package scalars, stored row-major."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ValueError("SquareMatrix needs n >= 1 rows of length n")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    @classmethod
    def symmetric(cls, rows, tol: float | None = None) -> "SquareMatrix":
        m = cls(rows)
        if not m.is_symmetric(tol):
            raise ValueError("matrix is not symmetric")
        return m

    @classmethod
    def diag(cls, *entries) -> "SquareMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls.diag(*([1] * n))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, SquareMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SquareMatrix({[list(r) for r in self.rows]!r})"

    def is_exact(self) -> bool:
        return all_exact(x for r in self.rows for x in r)

    def is_symmetric(self, tol: float | None = None) -> bool:
        n = self.n
        for i in range(n):
            for j in range(i + 1, n):
                a, b = self.rows[i][j], self.rows[j][i]
                if all_exact((a, b)):
                    if a != b:
                        return False
                elif abs(a - b) > (DEFAULT_TOL if tol is None else tol) * max(abs(a), abs(b), 1.0):
                    return False
        return True

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(list(zip(*self.rows)))

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        return SquareMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        return SquareMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SquareMatrix":
        return SquareMatrix([[c * a for a in r] for r in self.rows])

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, SquareMatrix):
            cols = list(zip(*other.rows))
            return SquareMatrix([[sum((a * b for a, b in zip(r, c)), 0) for c in cols] for r in self.rows])
        return tuple(sum((a * b for a, b in zip(r, other)), 0) for r in self.rows)

    def quadratic_form(self, v):
        return sum((vi * wi for vi, wi in zip(v, self @ v)), 0)

    def bilinear(self, v, w):
        return sum((vi * wi for vi, wi in zip(v, self @ w)), 0)

    def det(self):
        return det(self.rows)

    def minor(self, i: int, j: int) -> "SquareMatrix":
        return SquareMatrix([[x for c, x in enumerate(r) if c != j] for k, r in enumerate(self.rows) if k != i])

    def adjugate(self) -> "SquareMatrix":
        """Transpose of the cofactor matrix; ``M @ adj(M) = det(M) * I``."""
        n = self.n
        if n == 1:
            return SquareMatrix([[1]])
        cof = [[(-1) ** (i + j) * self.minor(i, j).det() for j in range(n)] for i in range(n)]
        return SquareMatrix(cof).transpose()

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.n)), 0)

    def to_numpy(self, dtype=complex):
        import numpy as np

        return np.array([[complex(x) if dtype is complex else float(x) for x in r] for r in self.rows], dtype=dtype)
