from itertools import product

import pytest
from hypothesis import given, strategies as st

from quarticrings import exact
from quarticrings.forms import (
    A0,
    GENERATORS,
    BinaryCubicForm,
    BinaryQuarticForm,
    DomainError,
    GL2Elem,
    TQFPair,
    act_gl2_cubic_twisted,
    det_cubic_of_pair,
    disc_cubic,
    disc_quartic,
)
from quarticrings.rings import (
    BasedRing,
    MonogenizedCubic,
    associativity_defects,
    bcf_from_cubic_ring,
    canonicalize_monogenized,
    cubic_ring_from_bcf,
    disc_ring,
    is_monogenized_based,
    normalize_cubic_lifts,
    quartic_ring_from_bqf,
    rebase,
    trace,
    verify_ring_axioms,
)
from quarticrings.resolvent import psi

from .conftest import cubics, quartics
from .numberfield import cubic_basis, quartic_basis, table_from_field

Q = BinaryQuarticForm
C = BinaryCubicForm


def products(ring):
    return {ij: tuple(v) for ij, v in ring.products()}


def test_x4_plus_y4_table():
    # z1^2 = z2, z1 z2 = z3', z1 z3' = -1, z2^2 = -1, z2 z3' = -z1, z3'^2 = -z2
    assert products(quartic_ring_from_bqf(Q(1, 0, 0, 0, 1))) == {
        (1, 1): (0, 0, 1, 0),
        (1, 2): (0, 0, 0, 1),
        (1, 3): (-1, 0, 0, 0),
        (2, 2): (-1, 0, 0, 0),
        (2, 3): (0, -1, 0, 0),
        (3, 3): (0, 0, -1, 0),
    }


def test_zero_form_is_nilpotent():
    assert all(v == (0, 0, 0, 0) for v in products(quartic_ring_from_bqf(Q(0, 0, 0, 0, 0))).values())
    assert all(v == (0, 0, 0) for v in products(cubic_ring_from_bcf(C(0, 0, 0, 0))).values())
    assert disc_ring(cubic_ring_from_bcf(C(0, 0, 0, 0))) == 0


def test_x3y_plus_xy3_table():
    # associativity forces z3'^2 = z3' here (constant term -f2 f4 = 0)
    assert products(quartic_ring_from_bqf(Q(0, 1, 0, 1, 0))) == {
        (1, 1): (0, -1, 0, 0),
        (1, 2): (0, 0, 0, 0),
        (1, 3): (0, 0, 0, 0),
        (2, 2): (-1, -1, 0, 1),
        (2, 3): (0, 0, 0, 0),
        (3, 3): (0, 0, 0, 1),
    }


def test_printed_constant_would_break_associativity():
    f = Q(1, 1, 1, 1, 1)
    good = quartic_ring_from_bqf(f)
    m = {ij: list(v) for ij, v in good.products()}
    m[(3, 3)][0] -= f.f3 ** 2  # the alternative constant -f3^2 - f2 f4
    assert associativity_defects(BasedRing.from_products(4, m))


@given(quartics)
def test_quartic_table_matches_number_field(f):
    if f.f0 == 0 or disc_quartic(f) == 0:
        return
    basis, p = quartic_basis(f.coeffs)
    assert products(quartic_ring_from_bqf(f)) == {k: tuple(v) for k, v in table_from_field(p, basis).items()}


@given(cubics)
def test_cubic_table_matches_number_field(f):
    if f.a == 0 or disc_cubic(f) == 0:
        return
    basis, p = cubic_basis(f.coeffs)
    assert products(cubic_ring_from_bcf(f)) == {k: tuple(v) for k, v in table_from_field(p, basis).items()}


def test_cubic_table_examples():
    # -x^3 + xy^2: wt = 0, w^2 = 1 + t, t^2 = -t
    assert products(cubic_ring_from_bcf(C(-1, 0, 1, 0))) == {
        (1, 1): (1, 0, 1),
        (1, 2): (0, 0, 0),
        (2, 2): (0, 0, -1),
    }
    # x^3: wt = 0, w^2 = -t, t^2 = 0
    assert products(cubic_ring_from_bcf(C(1, 0, 0, 0))) == {
        (1, 1): (0, 0, -1),
        (1, 2): (0, 0, 0),
        (2, 2): (0, 0, 0),
    }


def test_bcf_from_cubic_ring_examples():
    assert bcf_from_cubic_ring(cubic_ring_from_bcf(C(-1, 0, 1, 0))) == C(-1, 0, 1, 0)
    ring = cubic_ring_from_bcf(C(0, 1, -1, 0))
    moved = rebase(ring, exact.identity(2), (1, 0))  # w -> w + 1
    assert moved != ring
    assert bcf_from_cubic_ring(moved) == C(0, 1, -1, 0)


def test_bcf_from_cubic_ring_rejects_corrupt_table():
    bad = BasedRing.from_products(3, {(1, 1): (0, 1, 0), (1, 2): (5, 0, 0), (2, 2): (0, 0, 1)})
    assert associativity_defects(bad)
    with pytest.raises(DomainError, match="not associative"):
        bcf_from_cubic_ring(bad)


def test_trace_examples():
    r = quartic_ring_from_bqf(Q(1, 0, 0, 0, 1))
    assert trace(r, (1, 0, 0, 0)) == 4
    assert trace(r, (0, 1, 0, 0)) == 0
    assert trace(cubic_ring_from_bcf(C(-1, 0, 1, 0)), (0, 1, 0)) == 0


def test_disc_ring_examples():
    assert disc_ring(quartic_ring_from_bqf(Q(1, 0, 0, 0, 1))) == 256
    assert disc_ring(cubic_ring_from_bcf(C(-1, 0, 1, 0))) == 4


def test_cubic_disc_equals_ring_disc_exhaustive():
    for coeffs in product(range(-3, 4), repeat=4):
        f = C(*coeffs)
        assert disc_ring(cubic_ring_from_bcf(f)) == disc_cubic(f)


def test_verify_ring_axioms_names_triple():
    r = quartic_ring_from_bqf(Q(1, 2, -1, 0, 1))
    assert verify_ring_axioms(r).ok
    m = {ij: list(v) for ij, v in r.products()}
    m[(1, 2)][0] += 1
    rep = verify_ring_axioms(BasedRing.from_products(4, m))
    assert not rep.ok
    assert "e" in rep.violations[0] and "!=" in rep.violations[0]


def test_rank3_rings_are_associative_exhaustive():
    for coeffs in product(range(-3, 4), repeat=4):
        assert verify_ring_axioms(cubic_ring_from_bcf(C(*coeffs))).ok


def test_based_ring_validation():
    with pytest.raises(DomainError):
        BasedRing(3, (((0, 0, 0), (0, 0, 0)), ((0, 0, 1), (0, 0, 0))))
    with pytest.raises(DomainError):
        BasedRing(3, (((0, 0), (0, 0)), ((0, 0), (0, 0))))


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_cubic_equivariance_on_generators(name):
    g = GENERATORS[name]
    for coeffs in product(range(-2, 3), repeat=4):
        f = C(*coeffs)
        moved = normalize_cubic_lifts(rebase(cubic_ring_from_bcf(f), g.matrix))
        assert moved == cubic_ring_from_bcf(act_gl2_cubic_twisted(g, f))


def test_canonicalize_examples():
    assert canonicalize_monogenized(C(-1, 4, 0, 0)) == (C(-1, 1, 5, 3), 1)
    assert canonicalize_monogenized(C(-1, 1, 0, 0)) == (C(-1, 1, 0, 0), 0)
    form, n = canonicalize_monogenized(C(-1, -1, 0, 0))
    assert n == -1 and form.b == 2
    with pytest.raises(DomainError):
        canonicalize_monogenized(C(1, 0, 0, 0))


mono = st.builds(C, st.just(-1), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))


@given(mono, st.integers(-5, 5))
def test_canonicalize_constant_on_n_orbits(f, k):
    canon, n = canonicalize_monogenized(f)
    assert canon.b in (0, 1, 2)
    assert act_gl2_cubic_twisted(GL2Elem(1, 0, n, 1), f) == canon
    assert canonicalize_monogenized(canon) == (canon, 0)
    moved = act_gl2_cubic_twisted(GL2Elem(1, 0, k, 1), f)
    assert canonicalize_monogenized(moved)[0] == canon


def test_is_monogenized_based():
    assert is_monogenized_based(C(-1, 0, 1, 0))
    assert not is_monogenized_based(C(1, 0, 0, 0))
    assert is_monogenized_based(det_cubic_of_pair(psi(Q(2, -1, 0, 3, 1))))
    assert is_monogenized_based(det_cubic_of_pair(TQFPair(A0, A0)))
    with pytest.raises(DomainError):
        MonogenizedCubic(C(1, 0, 0, 0), cubic_ring_from_bcf(C(1, 0, 0, 0)))
