import math
import random
from fractions import Fraction as F

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from pentapencil.errors import DegenerateOrbit, NotRealizable, OutOfDomain, ProjectionAtInfinity
from pentapencil.exact_core import QuadraticSurd
from pentapencil.pentagram import (
    GOLDEN,
    Pentagram,
    complete_frieze,
    complete_frieze_gamma_epsilon,
    fib_rational_root,
    fibonacci,
    fibonacci_omega,
    fibonacci_pentagram,
    gauss_cubic,
    gauss_roots,
    legendre_k2,
    lyness_orbit,
    omega,
    orthocentric_projection,
    regular_pentagram,
    spherical_realization,
)
from pentapencil.pentagram.sphere import SphericalPentagram


def test_complete_frieze_examples():
    assert complete_frieze(2, 2).x == (2, 2, 1, 3, 1)
    assert complete_frieze(F(3, 2), F(3, 2)).x == (F(3, 2), F(3, 2), 2, F(5, 4), 2)
    gold = complete_frieze(GOLDEN, GOLDEN)
    assert all(abs(v - GOLDEN) < 1e-12 for v in gold.x)


def test_complete_frieze_domain():
    with pytest.raises(OutOfDomain, match="x1\\*x2 must exceed 1"):
        complete_frieze(F(1, 2), 1)
    with pytest.raises(OutOfDomain):
        complete_frieze(-1, -3)


def test_gamma_epsilon_chart():
    for n in range(1, 10):
        phi = F(fibonacci(n + 1), fibonacci(n))
        p = complete_frieze_gamma_epsilon(phi, phi)
        assert p == fibonacci_pentagram(n)
        assert p.x[2] == p.x[4] == phi


def test_invalid_pentagram_rejected():
    with pytest.raises(OutOfDomain):
        Pentagram((1, 2, 3, 4, 5))


positive = st.fractions(min_value=F(1, 20), max_value=20, max_denominator=30)


@settings(max_examples=200, deadline=None)
@given(positive, positive)
def test_completion_satisfies_all_relations(x1, x2):
    if x1 * x2 <= 1:
        with pytest.raises(OutOfDomain):
            complete_frieze(x1, x2)
        return
    p = complete_frieze(x1, x2)
    x = p.x
    for i in range(5):
        assert 1 + x[i] == x[(i + 2) % 5] * x[(i + 3) % 5]
    for k in range(5):
        assert p.shift(k).exact


def test_lyness_examples():
    assert lyness_orbit(1, 1, 7) == [1, 1, 2, 3, 2, 1, 1]
    gold = lyness_orbit(GOLDEN, GOLDEN, 8)
    assert all(abs(v - GOLDEN) < 1e-12 for v in gold)


@settings(max_examples=100, deadline=None)
@given(positive, positive)
def test_lyness_period_five(y1, y2):
    seq = lyness_orbit(y1, y2, 12)
    assert seq[5:] == seq[:7]


def test_lyness_domain():
    with pytest.raises(OutOfDomain):
        lyness_orbit(0, 1, 5)
    assert issubclass(DegenerateOrbit, Exception)


def test_lyness_is_pentagram_in_orbit_order():
    p = fibonacci_pentagram(3)
    orbit = lyness_orbit(p.x[0], p.x[3], 5)
    assert tuple(orbit) == p.lyness_order()


def test_fibonacci_pentagrams():
    assert fibonacci_pentagram(1).x == (2, 2, 1, 3, 1)
    assert fibonacci_pentagram(3).x == (F(5, 3), F(5, 3), F(3, 2), F(16, 9), F(3, 2))
    assert fibonacci_pentagram(4).x == (F(8, 5), F(8, 5), F(5, 3), F(39, 25), F(5, 3))


def test_fibonacci_via_completion():
    for n in range(1, 25):
        phi = F(fibonacci(n + 2), fibonacci(n + 1))
        assert complete_frieze(phi, phi) == fibonacci_pentagram(n)


def test_omega_values():
    assert omega(fibonacci_pentagram(1)) == 12
    for n in range(1, 21):
        phi = [F(fibonacci(k + 1), fibonacci(k)) for k in (n, n + 1, n + 2)]
        assert omega(fibonacci_pentagram(n)) == phi[0] * phi[1] ** 3 * phi[2] == fibonacci_omega(n)
    assert abs(omega(regular_pentagram()) - GOLDEN**5) < 1e-9
    assert abs(omega(regular_pentagram()) - 11.0902) < 1e-4


# Gauss cubic

def test_roots_for_omega_12():
    r = gauss_roots(12)
    assert r.exact and r.Gpp == F(3, 2)
    assert r.G == QuadraticSurd(F(-1, 4), F(-1, 4), 33)
    assert r.Gp == QuadraticSurd(F(-1, 4), F(1, 4), 33)
    assert r.d == 33


def test_roots_double_at_regular():
    r = gauss_roots(GOLDEN**5)
    assert abs(r.Gp - GOLDEN**2 / 2) < 1e-9
    assert abs(r.Gpp - GOLDEN**2 / 2) < 1e-9
    assert r.G < 0


def test_roots_omega_4():
    r = gauss_roots(fibonacci_omega(4))
    assert F(13, 10) in (r.G, r.Gp, r.Gpp)


def test_roots_not_realizable():
    with pytest.raises(NotRealizable):
        gauss_roots(F(1, 100))
    with pytest.raises(OutOfDomain):
        gauss_roots(-1)


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=11.1, max_value=500))
def test_roots_vieta_numeric(w):
    r = gauss_roots(w)
    g, gp, gpp = r.as_floats()
    assert g < 0 < gp <= gpp
    assert abs(g + gp + gpp - 1) < 1e-9
    assert abs(g * gp * gpp + w / 4) < 1e-9 * w
    assert abs(g * gp + g * gpp + gp * gpp - (1 - w) / 4) < 1e-9 * w


def test_roots_vieta_exact():
    for n in range(1, 12):
        r = gauss_roots(fibonacci_omega(n))
        w = r.omega
        assert r.G + r.Gp + r.Gpp == 1
        assert r.G * r.Gp * r.Gpp == -w / 4
        assert r.G * r.Gp + r.G * r.Gpp + r.Gp * r.Gpp == (1 - w) / 4


def test_roots_against_sympy():
    t = sp.symbols("t")
    for n in (1, 2, 5):
        w = fibonacci_omega(n)
        ref = sorted(float(z) for z in sp.Poly(t * (2 * t - 1) ** 2 - (t - 1) * sp.Rational(w.numerator, w.denominator), t).nroots())
        assert np.allclose(gauss_roots(w).as_floats(), ref, atol=1e-12)


def test_rational_root_values():
    assert fib_rational_root(1).value == F(3, 2)
    assert fib_rational_root(2).value == F(5, 4)
    assert fib_rational_root(7).value == F(55, 42)
    assert fib_rational_root(10).value == F(233, 178)


def test_rational_root_substitutes_to_zero():
    for n in range(1, 31):
        r = fib_rational_root(n)
        assert gauss_cubic(fibonacci_omega(n))(r.value) == 0
        assert r.which == ("Gpp" if n % 2 else "Gp")


# Legendre modulus

def test_k2_regular_is_zero():
    assert legendre_k2(regular_pentagram()) < 1e-10


def test_k2_p1_oracle():
    # plug the n = 1 roots (-1 -+ sqrt 33)/4 and 3/2 into the formula
    s = math.sqrt(33)
    g, gp, gpp = (-1 - s) / 4, (-1 + s) / 4, 1.5
    expected = (gp**-2 - gpp**-2) / (gp**-2 - g**-2)
    k2 = legendre_k2(fibonacci_pentagram(1))
    assert isinstance(k2, QuadraticSurd)
    assert abs(float(k2) - expected) < 1e-14
    assert 0 < float(k2) < 1


def test_k2_numeric_path_agrees():
    for n in (1, 4, 9):
        exact = float(legendre_k2(fibonacci_pentagram(n)))
        numeric = legendre_k2(fibonacci_pentagram(n).to_float())
        assert abs(exact - numeric) < 1e-9


def test_k2_decreasing():
    ks = [float(legendre_k2(fibonacci_pentagram(n))) for n in range(1, 16)]
    assert all(a > b for a, b in zip(ks, ks[1:]))


# spherical realization

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spherical_realization(n):
    p = fibonacci_pentagram(n)
    s = spherical_realization(p)
    assert s.polarity_residual() < 1e-10
    assert s.norm_residual() < 1e-12
    assert s.part_residual(p) < 1e-9
    for i in range(5):
        assert abs(s.v[i] @ s.v[(i + 3) % 5]) < 1e-10


def test_regular_realization_is_cyclic_orbit():
    v = spherical_realization(regular_pentagram()).v
    gram = v @ v.T
    for i in range(5):
        for j in range(5):
            assert abs(gram[i, j] - gram[(i + 1) % 5, (j + 1) % 5]) < 1e-10
    # the linear map v_i -> v_(i+1) is orthogonal of order five
    m = np.linalg.lstsq(v[:3], np.roll(v, -1, axis=0)[:3], rcond=None)[0].T
    assert np.allclose(m @ v.T, np.roll(v, -1, axis=0).T, atol=1e-10)
    assert np.allclose(m.T @ m, np.eye(3), atol=1e-10)
    assert np.allclose(np.linalg.matrix_power(m, 5), np.eye(3), atol=1e-9)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orthocentric_projection(n):
    rep = orthocentric_projection(spherical_realization(fibonacci_pentagram(n)))
    assert rep.deviation < 1e-8
    assert rep.center_offset < 1e-8


def test_regular_projection_on_axis():
    s = spherical_realization(regular_pentagram())
    axis = s.v.sum(axis=0)
    rep = orthocentric_projection(s, axis)
    assert rep.deviation < 1e-9
    # the altitudes meet at the projected axis, the origin of the tangent plane
    assert np.linalg.norm(rep.intersections, axis=1).max() < 1e-9


def test_projection_at_infinity():
    s = spherical_realization(fibonacci_pentagram(1))
    polar = np.cross(s.v[0], s.v[1])  # 90 degrees from v1 and v2
    polar = s.v[2] if abs(s.v[2] @ s.v[0]) < 1e-12 else polar
    with pytest.raises(ProjectionAtInfinity):
        orthocentric_projection(s, polar)


def test_spherical_type_checks_shape():
    with pytest.raises(ValueError):
        SphericalPentagram(np.zeros((4, 3)))


def test_realization_random_pentagrams():
    rng = random.Random(5)
    for _ in range(10):
        x1 = F(rng.randint(2, 40), rng.randint(1, 10))
        x2 = F(rng.randint(1, 40), rng.randint(1, 10))
        if x1 * x2 <= 1:
            continue
        p = complete_frieze(x1, x2)
        s = spherical_realization(p)
        assert s.polarity_residual() < 1e-10 and s.part_residual(p) < 1e-9
        assert orthocentric_projection(s).deviation < 1e-7
