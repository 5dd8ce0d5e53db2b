"""Field-generic scalar arithmetic: polynomials, series, determinants, cross-ratios."""

from .linalg import SquareMatrix, bareiss_det, det, float_det, rational_det
from .poly import Polynomial, primitive_integer_form
from .projective import (
    cross_ratio,
    cubic_j,
    j_from_branch_points,
    j_from_lambda,
    lambda_orbit,
    oo,
    quartic_branch_j,
    quartic_invariants,
    quartic_j,
)
from .roots import deflate, find_rational_roots
from .scalars import DEFAULT_TOL, close, fmt, is_exact, is_zero, parse_scalar, rational_sqrt, to_fraction
from .series import BorelReport, TruncatedSeries, borel_is_rational, hankel_det, hankel_matrix, series_sqrt
from .surd import QuadraticSurd

__all__ = [
    "BorelReport",
    "DEFAULT_TOL",
    "Polynomial",
    "QuadraticSurd",
    "SquareMatrix",
    "TruncatedSeries",
    "bareiss_det",
    "borel_is_rational",
    "close",
    "cross_ratio",
    "cubic_j",
    "deflate",
    "det",
    "find_rational_roots",
    "float_det",
    "fmt",
    "hankel_det",
    "hankel_matrix",
    "is_exact",
    "is_zero",
    "j_from_branch_points",
    "j_from_lambda",
    "lambda_orbit",
    "oo",
    "parse_scalar",
    "primitive_integer_form",
    "quartic_branch_j",
    "quartic_invariants",
    "quartic_j",
    "rational_det",
    "rational_sqrt",
    "series_sqrt",
    "to_fraction",
]
