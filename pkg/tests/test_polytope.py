"""Kernel tests: hulls, support, volume, area measures, splits.

Expected values are frozen from independent derivations: simplex volumes via
the determinant formula |det|/n!, facet normals by hand enumeration, and a
fan-triangulation volume oracle for random bodies.
"""

from fractions import Fraction
import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from minkval.linalg import det, vec_sub
from minkval.polytope import (
    Polytope,
    affine_transform,
    convex_hull,
    minkowski_sum,
    split_by_hyperplane,
)

F = Fraction


def unit_cube(dim=4):
    return convex_hull(list(itertools.product((0, 1), repeat=dim)))


def standard_simplex(dim=4):
    pts = [(0,) * dim]
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        pts.append(tuple(e))
    return convex_hull(pts)


def rand_rational(rng, span=4, max_den=8):
    num = rng.randint(-span * max_den, span * max_den)
    den = rng.randint(1, max_den)
    return F(num, den)


def rand_points(rng, dim, count):
    return [tuple(rand_rational(rng) for _ in range(dim)) for _ in range(count)]


# -- convex_hull ------------------------------------------------------------


def test_hull_collinear_midpoint_dropped():
    P = convex_hull([(0, 0, 0, 0), (1, 0, 0, 0), (F(1, 2), 0, 0, 0)])
    assert P.affine_dim == 1
    assert P.vertices == ((F(0), F(0), F(0), F(0)), (F(1), F(0), F(0), F(0)))


def test_hull_cube_interior_point_removed():
    pts = list(itertools.product((0, 1), repeat=4)) + [(F(1, 2),) * 4]
    P = convex_hull(pts)
    assert P.affine_dim == 4
    assert len(P.vertices) == 16
    assert len(P.facets) == 8
    assert (F(1, 2),) * 4 not in P.vertices


def test_hull_simplex_facets():
    P = standard_simplex(4)
    assert P.affine_dim == 4
    assert len(P.vertices) == 5
    normals = sorted(f.normal for f in P.facets)
    expected = sorted(
        [(-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1), (1, 1, 1, 1)]
    )
    assert normals == expected
    offsets = {f.normal: f.offset for f in P.facets}
    assert offsets[(1, 1, 1, 1)] == 1
    assert offsets[(-1, 0, 0, 0)] == 0


def test_hull_rejects_empty_and_mismatched():
    with pytest.raises(ValueError):
        convex_hull([])
    with pytest.raises(ValueError):
        convex_hull([(0, 0), (0, 0, 0)])


def test_hull_order_independence():
    rng = random.Random(7)
    pts = rand_points(rng, 3, 9)
    P = convex_hull(pts)
    for _ in range(5):
        rng.shuffle(pts)
        Q = convex_hull(pts + pts[:3])
        assert Q == P
        assert sorted(f.normal for f in Q.facets) == sorted(f.normal for f in P.facets)


def test_hull_idempotence():
    rng = random.Random(11)
    for _ in range(10):
        P = convex_hull(rand_points(rng, 4, 8))
        assert convex_hull(P.vertices) == P


# -- affine_transform --------------------------------------------------------


def test_translate_preserves_volume():
    P = unit_cube(4)
    Q = P.translate((F(3, 7), -2, F(1, 3), 5))
    assert Q.volume() == 1
    assert len(Q.vertices) == 16


def test_reflection_of_cube():
    P = unit_cube(4)
    minus_i = [[-1 if i == j else 0 for j in range(4)] for i in range(4)]
    Q = affine_transform(P, minus_i)
    assert Q == convex_hull([tuple(-x for x in v) for v in P.vertices])
    assert Q.support((1, 0, 0, 0)) == 0
    assert Q.support((-1, 0, 0, 0)) == 1


def test_coordinate_projection_to_plane():
    P = unit_cube(4)
    A = [[1, 0, 0, 0], [0, 1, 0, 0]]
    Q = affine_transform(P, A)
    assert Q.ambient_dim == 2
    assert Q == unit_cube(2)


def test_affine_shape_mismatch():
    with pytest.raises(ValueError):
        affine_transform(unit_cube(4), [[1, 0], [0, 1]])


# -- minkowski_sum -----------------------------------------------------------


def test_sum_with_point_translates():
    P = unit_cube(4)
    Q = Polytope.point((1, 2, 3, 4))
    assert minkowski_sum(P, Q) == P.translate((1, 2, 3, 4))


def test_box_as_zonotope():
    segs = [Polytope.segment((0, 0, 0, 0), tuple(1 if j == i else 0 for j in range(4))) for i in range(4)]
    total = segs[0]
    for s in segs[1:]:
        total = minkowski_sum(total, s)
    assert total == unit_cube(4)


def test_difference_body_support_oracle():
    K = standard_simplex(4)
    D = minkowski_sum(K, -K)
    rng = random.Random(3)
    for _ in range(20):
        xi = tuple(rand_rational(rng) for _ in range(4))
        assert D.support(xi) == K.support(xi) + K.support(tuple(-x for x in xi))


# -- support ------------------------------------------------------------------


def test_support_cube_and_zero():
    P = unit_cube(4)
    assert P.support((1, 1, 1, 1)) == 4
    assert P.support((0, 0, 0, 0)) == 0


def test_support_simplex_direction():
    P = standard_simplex(4)
    assert P.support((1, -1, 2, 0)) == 2


def test_support_homogeneity_and_subadditivity():
    rng = random.Random(5)
    P = convex_hull(rand_points(rng, 4, 7))
    for _ in range(25):
        xi = tuple(rand_rational(rng) for _ in range(4))
        eta = tuple(rand_rational(rng) for _ in range(4))
        lam = F(rng.randint(1, 9), rng.randint(1, 5))
        assert P.support(tuple(lam * x for x in xi)) == lam * P.support(xi)
        assert P.support(tuple(a + b for a, b in zip(xi, eta))) <= P.support(xi) + P.support(eta)


# -- volume --------------------------------------------------------------------


def test_volume_cube():
    assert unit_cube(4).volume() == 1


def test_volume_simplex_determinant_oracle():
    # |det(e1,e2,e3,e4)| / 4! = 1/24
    assert standard_simplex(4).volume() == F(1, 24)
    # a skewed simplex, oracle by determinant
    verts = [(0, 0, 0, 0), (1, 2, 0, 1), (0, 1, 1, 0), (2, 0, 1, 1), (1, 1, 1, 3)]
    P = convex_hull(verts)
    rows = [vec_sub(v, verts[0]) for v in verts[1:]]
    assert P.volume() == abs(det(rows)) / 24


def test_volume_lower_dimensional_is_zero():
    P = convex_hull([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)])
    assert P.affine_dim == 2
    assert P.volume() == 0


def test_volume_gl_covariance():
    rng = random.Random(13)
    P = convex_hull(rand_points(rng, 4, 7))
    for _ in range(5):
        A = [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
        if det(A) == 0:
            continue
        Q = affine_transform(P, A)
        assert Q.volume() == abs(det(A)) * P.volume()


# -- area_measure ----------------------------------------------------------------


def test_area_measure_cube():
    atoms = set(unit_cube(4).area_measure().atoms)
    expected = set()
    for i in range(4):
        for s in (1, -1):
            a = [F(0)] * 4
            a[i] = F(s)
            expected.add(tuple(a))
    assert atoms == expected


def test_area_measure_unit_square():
    atoms = set(unit_cube(2).area_measure().atoms)
    assert atoms == {(F(0), F(-1)), (F(1), F(0)), (F(0), F(1)), (F(-1), F(0))}


@pytest.mark.parametrize(
    "gamma1,gamma2",
    [(F(0), F(0)), (F(1), F(1)), (F(2, 3), F(-1, 2))],
)
def test_area_measure_sheared_simplex(gamma1, gamma2):
    # simplex [0, e1, i*e1, gamma*e1 + e2] in coordinates (e1, i*e1, e2)
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (gamma1, gamma2, 1)])
    atoms = set(P.area_measure().atoms)
    expected = {
        (F(0), F(0), F(-1, 2)),
        (F(0), F(-1, 2), gamma2 / 2),
        (F(-1, 2), F(0), gamma1 / 2),
        (F(1, 2), F(1, 2), -(gamma1 + gamma2 - 1) / 2),
    }
    assert atoms == expected


def test_area_measure_codim1_two_atoms():
    # unit square inside the x3=x4=0 plane of R^4: a 2-dim body has no atoms
    P = convex_hull([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)])
    assert P.area_measure().atoms == ()
    # a 3-cube inside the x4=0 hyperplane: two opposite atoms of weight 1
    pts = [tuple(list(p) + [0]) for p in itertools.product((0, 1), repeat=3)]
    Q = convex_hull(pts)
    assert Q.affine_dim == 3
    atoms = set(Q.area_measure().atoms)
    assert atoms == {(F(0), F(0), F(0), F(1)), (F(0), F(0), F(0), F(-1))}


def test_area_measure_closure_random():
    rng = random.Random(17)
    for _ in range(12):
        P = convex_hull(rand_points(rng, 4, rng.randint(5, 9)))
        sums = P.area_measure().closure_sum()
        assert all(x == 0 for x in sums)


def test_divergence_identity_random():
    rng = random.Random(19)
    for _ in range(8):
        P = convex_hull(rand_points(rng, 4, 8))
        if P.affine_dim < 4:
            continue
        n = P.ambient_dim
        total = sum(P.support(a) for a in P.area_measure())
        assert P.volume() == total / n


# -- split_by_hyperplane -----------------------------------------------------------


def test_split_cube_in_half():
    P = unit_cube(4)
    low, high, mid = split_by_hyperplane(P, (1, 0, 0, 0), F(1, 2))
    assert low.volume() == F(1, 2)
    assert high.volume() == F(1, 2)
    assert mid.affine_dim == 3
    assert mid.volume() == 0


def test_split_missing_the_body():
    P = standard_simplex(4)
    low, high, mid = split_by_hyperplane(P, (1, 0, 0, 0), 2)
    assert low == P
    assert high.is_empty
    assert mid.is_empty


def test_split_simplex_volume_additivity():
    P = standard_simplex(4)
    low, high, mid = split_by_hyperplane(P, (1, 0, 0, 0), F(1, 2))
    assert mid.volume() == 0
    assert low.volume() + high.volume() == F(1, 24)
    # the piece beyond x1 >= 1/2 is a scaled copy of the simplex
    assert high.volume() == F(1, 24) / 16


def test_split_valuation_property_random():
    rng = random.Random(23)
    for _ in range(10):
        P = convex_hull(rand_points(rng, 4, 8))
        xi = tuple(rand_rational(rng) for _ in range(4))
        if all(x == 0 for x in xi):
            continue
        c = rand_rational(rng)
        low, high, mid = split_by_hyperplane(P, xi, c)
        vol = lambda Q: Q.volume() if not Q.is_empty else F(0)
        assert vol(low) + vol(high) == P.volume() + vol(mid)


# -- hypothesis property tests -------------------------------------------------------

small_rational = st.fractions(min_value=-3, max_value=3, max_denominator=8)


@st.composite
def point_lists(draw, dim, min_size=3, max_size=7):
    count = draw(st.integers(min_value=min_size, max_value=max_size))
    return [tuple(draw(small_rational) for _ in range(dim)) for _ in range(count)]


@settings(max_examples=30, deadline=None)
@given(point_lists(dim=3))
def test_hyp_hull_idempotent_3d(pts):
    P = convex_hull(pts)
    assert convex_hull(P.vertices) == P


@settings(max_examples=30, deadline=None)
@given(point_lists(dim=3), point_lists(dim=3), st.tuples(small_rational, small_rational, small_rational))
def test_hyp_support_additivity(pts1, pts2, xi):
    P = convex_hull(pts1)
    Q = convex_hull(pts2)
    S = minkowski_sum(P, Q)
    assert S.support(xi) == P.support(xi) + Q.support(xi)


@settings(max_examples=30, deadline=None)
@given(point_lists(dim=3, min_size=4, max_size=8))
def test_hyp_area_closure(pts):
    P = convex_hull(pts)
    assert all(x == 0 for x in P.area_measure().closure_sum())
