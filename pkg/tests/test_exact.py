from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quarticrings import exact


def test_det_examples():
    assert exact.det(exact.identity(3)) == 1
    assert exact.det(((0, -1, 0), (-1, 0, 0), (0, 0, -1))) == 1
    assert exact.det(((1, 0, 0), (1, 1, 1), (2, 0, 1))) == 1


def test_det_rational_and_integral_types():
    d = exact.det(((Fraction(1, 2), 0), (0, 2)))
    assert d == 1 and type(d) is int
    assert exact.det(((Fraction(1, 2), 0), (0, 1))) == Fraction(1, 2)


def test_det_4x4_against_cofactor():
    m = ((2, 0, 1, 3), (1, -1, 0, 2), (0, 4, 1, 1), (3, 1, 2, 0))
    # expansion along the first row by hand-assembled 3x3 minors
    total = 0
    for j in range(4):
        minor = tuple(tuple(r[k] for k in range(4) if k != j) for r in m[1:])
        total += (-1) ** j * m[0][j] * exact.det(minor)
    assert exact.det(m) == total


def test_mat_mul_examples():
    m = ((1, 2, 0), (0, 1, 3), (1, 0, 1))
    assert exact.mat_mul(exact.identity(3), m) == m
    s = ((0, 1), (1, 0))
    assert exact.mat_mul(s, s) == exact.identity(2)
    u = ((1, 0, 0), (1, 1, 1), (2, 0, 1))
    assert exact.mat_mul(u, exact.inverse(u)) == exact.identity(3)


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        exact.mat_mul(((1, 2),), ((1, 2),))


def test_is_unimodular_examples():
    assert exact.is_unimodular(exact.identity(3))
    assert exact.is_unimodular(((1, 1), (0, 1)))
    assert not exact.is_unimodular(((2, 0), (0, 1)))
    assert not exact.is_unimodular(((Fraction(1, 2), 0), (0, 2)))


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        exact.rat(0.5)


mats3 = st.lists(st.integers(-9, 9), min_size=9, max_size=9).map(
    lambda v: (tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9]))
)


@given(mats3, mats3)
def test_det_multiplicative(a, b):
    assert exact.det(exact.mat_mul(a, b)) == exact.det(a) * exact.det(b)


@given(mats3)
def test_adjugate_identity(m):
    d = exact.det(m)
    assert exact.mat_mul(m, exact.adjugate(m)) == tuple(
        tuple(d if i == j else 0 for j in range(3)) for i in range(3)
    )


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_ext_gcd(a, b):
    g, s, t = exact.ext_gcd(a, b)
    assert g >= 0 and s * a + t * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


@given(st.lists(st.integers(-20, 20), min_size=3, max_size=3))
def test_unimodular_completion(v):
    g = exact.vec_gcd(v)
    if g != 1:
        return
    m = exact.unimodular_completion(tuple(v))
    assert m[0] == tuple(v)
    assert exact.det(m) == 1
