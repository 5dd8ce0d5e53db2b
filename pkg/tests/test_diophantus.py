import random
from fractions import Fraction as F

import pytest
import sympy as sp

from pentapencil.errors import (
    BadBasePoint,
    CoincidenceFailure,
    DegenerateCurve,
    DegenerateIntersection,
    OutOfDomain,
)
from pentapencil.diophantus import (
    DoubleEquation,
    OmegaPoint,
    conic_pencil_cubic,
    fermat_ascend,
    involutions,
    omega_j,
    pencil_coincidence,
    pencil_relation,
    project_to_cubic,
    quadric_pencil_poly,
    search_solutions,
)

EXAMPLE = DoubleEquation(1, 1, 1, 1, -1, 1)
ASCENT = DoubleEquation(1, -4, 1, 1, -3, 1)
ASCENT_SEED = [OmegaPoint.parse(s) for s in ("1:0:-1:-1", "0:1:-1:-1", "0:1:-1:1")]


def random_de(rng, squares=False):
    while True:
        co = [rng.randint(-6, 6) for _ in range(6)]
        if squares:
            co[0], co[3] = rng.randint(1, 4) ** 2, rng.randint(1, 4) ** 2
        try:
            return DoubleEquation(*co)
        except (DegenerateCurve, DegenerateIntersection):
            continue


def test_quadric_pencil_example():
    xi = sp.symbols("xi")
    f = quadric_pencil_poly(EXAMPLE)
    expected = sp.Poly(-xi * ((1 - xi) ** 2 - (1 + xi) ** 2 / 4), xi)
    assert list(f.coeffs) == [F(str(c)) for c in expected.all_coeffs()[::-1]]


def test_quadric_pencil_is_4x4_det():
    xi = sp.symbols("xi")
    rng = random.Random(30)
    for _ in range(10):
        de = random_de(rng)
        phi, psi = de.quadrics()
        m = sp.Matrix(4, 4, lambda i, j: sp.Rational(str(phi[i, j])) - xi * sp.Rational(str(psi[i, j])))
        ref = sp.Poly(m.det(), xi).all_coeffs()[::-1]
        assert list(quadric_pencil_poly(de).coeffs) == [F(str(c)) for c in ref]


def test_degree_three_on_random():
    rng = random.Random(31)
    for _ in range(100):
        assert quadric_pencil_poly(random_de(rng)).degree == 3


def test_invalid_double_equations():
    with pytest.raises(DegenerateIntersection):
        DoubleEquation(1, 1, 1, 1, 1, 1)
    with pytest.raises(DegenerateIntersection):
        DoubleEquation(1, 2, 3, 2, 4, 6)
    with pytest.raises(DegenerateCurve):
        DoubleEquation(1, 2, 1, 1, 0, -1)


def test_pencil_relation_on_random():
    rng = random.Random(32)
    for _ in range(100):
        de = random_de(rng)
        rel = pencil_relation(de)
        assert rel.lhs == rel.rhs
        # the roots of F other than 0 are -1/t for the roots t != -1 of g
        assert rel.F(0) == 0


def test_coincidence_with_negated_argument_fails():
    # F(xi) and g(-xi) are not proportional: the exact relation is the reversed one above
    with pytest.raises(CoincidenceFailure):
        pencil_coincidence(EXAMPLE)


def test_scaling_both_quadratics():
    f, g = quadric_pencil_poly(EXAMPLE), conic_pencil_cubic(EXAMPLE)
    scaled = EXAMPLE.scale(7)
    assert quadric_pencil_poly(scaled) == f * 49
    assert conic_pencil_cubic(scaled) == g * 49
    assert pencil_relation(scaled).lhs == pencil_relation(EXAMPLE).lhs * 49


def test_involutions():
    pts = search_solutions(ASCENT, 30)
    assert pts
    for p in pts:
        i, j, pm = involutions(p)
        for q in (i, j, pm):
            assert q.satisfies(ASCENT)
        assert involutions(i)[0] == p
        assert involutions(j)[1] == p
        assert involutions(pm)[2] == p
        assert involutions(j)[0] == involutions(i)[1] == pm
        assert (i == p) == (p.v == 0)


def test_search_examples():
    sols = search_solutions(EXAMPLE, 10)
    assert OmegaPoint(1, 0, 1, 1) in sols
    assert OmegaPoint(0, 1, 1, 1) in sols and OmegaPoint(0, 1, 1, -1) in sols
    for p in sols:
        assert p.satisfies(EXAMPLE)
    with pytest.raises(ValueError):
        search_solutions(EXAMPLE, 0)


def test_point_validation():
    assert EXAMPLE.point(2, 0, 2, 2) == OmegaPoint(1, 0, 1, 1)
    with pytest.raises(OutOfDomain):
        EXAMPLE.point(1, 1, 1, 1)


# projection and the plane cubic

def _model():
    return project_to_cubic(ASCENT, ASCENT_SEED[1])


def _cubic_points(model, count, rng):
    cubic = model.cubic
    a = model.omega_to_cubic(ASCENT_SEED[0])
    b = model.omega_to_cubic(ASCENT_SEED[2])
    out = []
    while len(out) < count:
        p = cubic.add(cubic.mul(rng.randint(-2, 2), a), cubic.mul(rng.randint(-2, 2), b))
        out.append(p)
    return out


def test_round_trip_lifted_points():
    model = _model()
    rng = random.Random(34)
    checked = 0
    for d in _cubic_points(model, 20, rng):
        assert model.cubic.contains(d)
        if d == model.cubic.origin:
            continue
        p = model.cubic_to_omega(d)
        assert p.satisfies(ASCENT)
        assert model.omega_to_cubic(p) == d
        assert model.cubic_to_omega(model.omega_to_cubic(p)) == p
        checked += 1
    assert checked >= 10


def test_search_points_land_on_cubic():
    model = _model()
    for p in search_solutions(ASCENT, 20):
        assert model.cubic.contains(model.omega_to_cubic(p))


def test_group_law_identity_and_commutativity():
    model = _model()
    cubic = model.cubic
    rng = random.Random(35)
    pts = _cubic_points(model, 60, rng)
    for p in pts[:10]:
        assert cubic.add(p, cubic.origin) == p
        assert cubic.add(p, cubic.neg(p)) == cubic.origin
    for p, q in zip(pts[:50], pts[10:60]):
        assert cubic.add(p, q) == cubic.add(q, p)


def test_group_law_associativity():
    model = _model()
    cubic = model.cubic
    rng = random.Random(36)
    pts = _cubic_points(model, 60, rng)
    for k in range(20):
        p, q, r = pts[3 * k: 3 * k + 3]
        assert cubic.add(cubic.add(p, q), r) == cubic.add(p, cubic.add(q, r))


def test_cubic_j_matches_quartic_j():
    rng = random.Random(37)
    done = 0
    while done < 10:
        de = random_de(rng, squares=True)
        s, sp_ = int(de.a.numerator ** 0.5), int(de.ap.numerator ** 0.5)
        for base in ((0, 1, s, sp_), (0, 1, s, -sp_)):
            try:
                model = project_to_cubic(de, OmegaPoint(*base))
            except BadBasePoint:
                continue
            assert model.j_invariant() == omega_j(de)
            done += 1
            break


def test_projection_rejects_non_solution():
    with pytest.raises(OutOfDomain):
        project_to_cubic(EXAMPLE, OmegaPoint(1, 1, 1, 1))


# ascent

def test_ascent_zero_steps():
    res = fermat_ascend(ASCENT, *ASCENT_SEED, 0)
    assert res.points == (ASCENT_SEED[0],)


def test_ascent_infinite_order():
    res = fermat_ascend(ASCENT, *ASCENT_SEED, 4)
    assert res.order is None and not res.finite_order
    pts = res.points
    assert len(set(pts)) == 5 and None not in pts
    for p in pts:
        assert p.satisfies(ASCENT)
    bits = [abs(p.x_ratio().numerator).bit_length() for p in pts]
    assert all(a < b for a, b in zip(bits, bits[1:]))


def test_ascent_two_torsion():
    p0 = OmegaPoint.parse("0:1:-1:-1")
    p1 = involutions(p0)[2]
    r0 = OmegaPoint(1, 0, 1, 1)
    res = fermat_ascend(EXAMPLE, r0, p0, p1, 6)
    assert res.finite_order and res.period == 2
    pts = [p for p in res.points if p is not None]
    assert all(p.satisfies(EXAMPLE) for p in pts)
    assert res.cubic_points[0] == res.cubic_points[2] == res.cubic_points[4]
    assert res.cubic_points[0] != res.cubic_points[1]


def test_ascent_requires_distinct_points():
    with pytest.raises(OutOfDomain):
        fermat_ascend(ASCENT, ASCENT_SEED[0], ASCENT_SEED[0], ASCENT_SEED[2], 3)

