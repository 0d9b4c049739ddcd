"""Membership and enumeration of the ambient algebras."""

import pytest
from hypothesis import given, strategies as st

from sally_lab import AmbientAlgebra, ArityMismatch

from helpers import brute_semigroup_member


def semigroup_38(s):
    return AmbientAlgebra.semigroup([(1, i) for i in range(2 * s + 2)], cm_flag=True)


def test_polynomial_contains_orthant():
    amb = AmbientAlgebra.polynomial(2)
    assert amb.contains((3, 0))
    assert amb.contains((0, 0))
    assert not amb.contains((-1, 2))


def test_polynomial_arity_mismatch():
    amb = AmbientAlgebra.polynomial(2)
    with pytest.raises(ArityMismatch):
        amb.contains((1, 2, 3))


def test_polynomial_requires_dim_two():
    with pytest.raises(ValueError):
        AmbientAlgebra.polynomial(1)


def test_semigroup_membership_frozen_cases():
    amb = semigroup_38(1)  # generators (1,0)..(1,3)
    # (2,5) = (1,2) + (1,3); (1,4) exceeds every single generator
    assert brute_semigroup_member(amb.generators, (2, 5))
    assert amb.contains((2, 5))
    assert not brute_semigroup_member(amb.generators, (1, 4))
    assert not amb.contains((1, 4))


def test_semigroup_membership_agrees_with_brute_force():
    amb = semigroup_38(1)
    for a in range(5):
        for b in range(11):
            assert amb.contains((a, b)) == brute_semigroup_member(amb.generators, (a, b))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_semigroup_closed_form(s):
    amb = semigroup_38(s)
    top = 2 * s + 1
    for a in range(13):
        for b in range(top * a + 3):
            assert amb.contains((a, b)) == (b <= top * a)


def test_enumerate_polynomial():
    amb = AmbientAlgebra.polynomial(2)
    assert amb.enumerate_up_to(1) == frozenset({(0, 0), (1, 0), (0, 1)})
    assert amb.enumerate_up_to(0) == frozenset({(0, 0)})


def test_enumerate_semigroup():
    amb = semigroup_38(1)
    assert amb.enumerate_up_to(1) == frozenset({(0, 0), (1, 0), (1, 1), (1, 2), (1, 3)})
    assert amb.enumerate_up_to(0) == frozenset({(0, 0)})


def test_enumerate_membership_consistency():
    amb = semigroup_38(2)
    for v in amb.enumerate_up_to(4):
        assert amb.contains(v)
        assert brute_semigroup_member(amb.generators, v)


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_enumerate_monotone(b1, b2):
    amb = AmbientAlgebra.polynomial(3)
    lo, hi = sorted((b1, b2))
    assert amb.enumerate_up_to(lo) <= amb.enumerate_up_to(hi)


def test_semigroup_dim_is_lattice_rank():
    assert semigroup_38(1).dim == 2
    line = AmbientAlgebra.semigroup([(1, 1), (2, 2)], cm_flag=True)
    assert line.dim == 1
    assert AmbientAlgebra.semigroup([(1, 0), (1, 1)], cm_flag=False).dim == 2


def test_semigroup_rejects_bad_generators():
    with pytest.raises(ValueError):
        AmbientAlgebra.semigroup([(0, 1)], cm_flag=True)
    with pytest.raises(ValueError):
        AmbientAlgebra.semigroup([], cm_flag=True)
    with pytest.raises(ValueError):
        AmbientAlgebra.semigroup([(1, -1)], cm_flag=True)


def test_polynomial_cm_flag_always_true():
    assert AmbientAlgebra.polynomial(2).cm_flag is True
