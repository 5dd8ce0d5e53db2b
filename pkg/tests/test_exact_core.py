import math
import random
from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from pentapencil.errors import (
    DegenerateConfiguration,
    DegenerateCurve,
    DegenerateInput,
    LengthError,
    NormalizationError,
)
from pentapencil.exact_core import (
    Polynomial,
    QuadraticSurd,
    SquareMatrix,
    TruncatedSeries,
    bareiss_det,
    borel_is_rational,
    cross_ratio,
    deflate,
    find_rational_roots,
    float_det,
    hankel_det,
    j_from_lambda,
    lambda_orbit,
    oo,
    quartic_j,
    rational_det,
    series_sqrt,
)
from oracles import binomial_sqrt_coeffs, sympy_det

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# series_sqrt

def test_sqrt_of_one_plus_4t():
    h = series_sqrt(TruncatedSeries([1, 4], order=4))
    assert list(h) == [1, 2, -2, 4, -10]
    assert list(h) == binomial_sqrt_coeffs(F(4), 4)


def test_sqrt_of_one_is_one():
    for n in (0, 3, 7):
        assert list(series_sqrt(TruncatedSeries([1], order=n))) == [1] + [0] * n


def test_sqrt_of_perfect_square():
    h = series_sqrt(TruncatedSeries([1, 2, 1], order=5))
    assert list(h) == [1, 1, 0, 0, 0, 0]


def test_sqrt_needs_unit_constant():
    with pytest.raises(NormalizationError):
        series_sqrt(TruncatedSeries([4, 1]))


def test_sqrt_order_beyond_input():
    with pytest.raises(LengthError):
        series_sqrt(TruncatedSeries([1, 1]), 5)


@settings(max_examples=60, deadline=None)
@given(st.lists(fractions, min_size=1, max_size=8))
def test_sqrt_squares_back(tail):
    s = TruncatedSeries([F(1)] + tail)
    h = series_sqrt(s)
    assert list(h * h) == list(s)


def test_sqrt_numeric():
    h = series_sqrt(TruncatedSeries([1.0, 4.0], order=4))
    assert all(abs(a - b) < 1e-12 for a, b in zip(h, [1, 2, -2, 4, -10]))


# determinants

def test_bareiss_matches_sympy():
    rng = random.Random(3)
    for n in range(1, 7):
        rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(rows) == int(sp.Matrix(rows).det())


def test_rational_det_matches_sympy():
    rng = random.Random(4)
    for n in range(1, 6):
        rows = [[F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(n)] for _ in range(n)]
        assert rational_det(rows) == sympy_det(rows)


def test_float_det_partial_pivot():
    rows = [[1e-20, 1.0], [1.0, 1.0]]
    assert abs(float_det(rows) + 1.0) < 1e-12
    assert float_det([[0.0, 0.0], [1.0, 2.0]]) == 0


def test_adjugate_identity():
    m = SquareMatrix([[F(2), F(1), F(0)], [F(1), F(3), F(1)], [F(0), F(1), F(4)]])
    prod = m @ m.adjugate()
    d = m.det()
    assert prod == SquareMatrix([[d if i == j else 0 for j in range(3)] for i in range(3)])


def test_symmetric_constructor_rejects():
    with pytest.raises(ValueError):
        SquareMatrix.symmetric([[1, 2], [3, 4]])


# Hankel and Borel

def test_hankel_geometric_rank_one():
    assert hankel_det([2**i for i in range(5)], 0, 1) == 0


def test_hankel_size_zero_is_entry():
    coeffs = [F(3), F(-7, 2), F(5)]
    for n in range(3):
        assert hankel_det(coeffs, n, 0) == coeffs[n]


def test_hankel_of_product_series():
    # (1+t)(1+4t)^(1/2) = 1 + 3t + 0t^2 + 2t^3 - 6t^4
    b = binomial_sqrt_coeffs(F(4), 5)
    prod = [b[k] + (b[k - 1] if k else 0) for k in range(6)]
    assert prod[:5] == [1, 3, 0, 2, -6]
    assert hankel_det(prod, 2, 0) == 0


def test_hankel_too_short():
    with pytest.raises(LengthError):
        hankel_det([1, 2, 3], 1, 1)


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=7, max_size=7), fractions.filter(lambda c: c != 0))
def test_hankel_scaling(coeffs, c):
    m = 2
    assert hankel_det([c * a for a in coeffs], 1, m) == c ** (m + 1) * hankel_det(coeffs, 1, m)


def test_borel_geometric():
    assert borel_is_rational([2**i for i in range(13)], 1, 0, 4)


def test_borel_exponential_not_rational():
    coeffs = [F(1, math.factorial(i)) for i in range(13)]
    rep = borel_is_rational(coeffs, 1, 0, 4)
    assert not rep
    n, value = rep.witness
    assert n == 0
    assert value == F(1, 1) * F(1, 2) - F(1, 1) * F(1, 1)


def test_borel_one_plus_t_over_one_minus_t():
    coeffs = [1] + [2] * 12
    assert borel_is_rational(coeffs, 1, 1, 5)


def test_borel_forward_direction_random_rational_functions():
    rng = random.Random(11)
    t = sp.symbols("t")
    for _ in range(20):
        d = rng.randint(1, 3)
        num = sum(rng.randint(-5, 5) * t**k for k in range(rng.randint(0, 2) + 1))
        den = 1 + sum(rng.choice([-3, -2, -1, 1, 2, 3]) * t**k for k in range(1, d + 1))
        ser = sp.series(num / den, t, 0, 20).removeO()
        coeffs = [F(str(ser.coeff(t, k))) for k in range(20)]
        numdeg = sp.degree(num, t) if num != 0 else 0
        # N_{n,d} vanishes once n exceeds the numerator degree
        assert borel_is_rational(coeffs, d, numdeg + 1, 4)


# rational roots

def test_rational_roots_examples():
    assert find_rational_roots(Polynomial([12, -11, -4, 4])) == {F(3, 2)}
    assert find_rational_roots(Polynomial([-1, 0, 1])) == {F(1), F(-1)}
    assert find_rational_roots(Polynomial([-2, 0, 1])) == set()


def test_rational_roots_zero_polynomial():
    with pytest.raises(DegenerateInput):
        find_rational_roots(Polynomial([]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9), min_size=1, max_size=4),
       st.integers(min_value=1, max_value=3))
def test_rational_roots_recovered(roots, extra):
    # product of the linear factors times an irreducible quadratic
    p = Polynomial.from_roots(roots) * Polynomial([extra, 0, 1])
    found = find_rational_roots(p)
    assert found == set(roots)
    for r in found:
        assert p(r) == 0


def test_deflate():
    q = deflate(Polynomial([12, -11, -4, 4]), F(3, 2))
    assert q == Polynomial([-8, 2, 4])


# quadratic surds

def test_surd_arithmetic():
    a = QuadraticSurd(F(1, 2), F(3, 4), 33)
    b = QuadraticSurd(F(-1), F(1, 2), 132)  # sqrt(132) = 2 sqrt(33)
    assert b.d == 33 and b.q == 1
    prod = a * b
    assert abs(float(prod) - float(a) * float(b)) < 1e-12
    assert a / a == QuadraticSurd(1)
    assert (a - a).sign() == 0
    assert QuadraticSurd(0, 1, 4) == 2


def test_surd_ordering():
    r = QuadraticSurd(F(-1, 4), F(1, 4), 33)
    assert QuadraticSurd(1) < r < QuadraticSurd(F(3, 2))


# cross-ratio and j

def test_cross_ratio_normalization():
    assert cross_ratio(0, 1, oo, F(7, 3)) == F(7, 3)
    assert cross_ratio(0, 2, oo, 1) == F(1, 2)


def test_cross_ratio_four_roots():
    lam = cross_ratio(-2, -1, 1, 2)
    # direct bracket evaluation of [p4,p1][p2,p3] / ([p4,p3][p2,p1])
    expected = F((2 - (-2)) * (-1 - 1), (2 - 1) * (-1 - (-2)))
    assert lam == expected == -8


def test_cross_ratio_coincident():
    with pytest.raises(DegenerateConfiguration):
        cross_ratio(0, 1, 1, 5)


def test_j_values():
    assert j_from_lambda(-1) == 1728
    assert j_from_lambda(2) == j_from_lambda(F(1, 2))
    assert j_from_lambda(3) == F(21952, 9)


def test_j_degenerate():
    for lam in (0, 1, oo):
        with pytest.raises(DegenerateCurve):
            j_from_lambda(lam)


@settings(max_examples=50, deadline=None)
@given(fractions.filter(lambda x: x not in (0, 1)))
def test_j_orbit_invariance(lam):
    j = j_from_lambda(lam)
    assert all(j_from_lambda(mu) == j for mu in lambda_orbit(lam))


def test_quartic_j_known_curves():
    # y^2 = x^3 - x has j = 1728, y^2 = x^3 + 1 has j = 0
    assert quartic_j(Polynomial([0, -1, 0, 1])) == 1728
    assert quartic_j(Polynomial([1, 0, 0, 1])) == 0
    with pytest.raises(DegenerateCurve):
        quartic_j(Polynomial([0, 0, -1, 1]))
