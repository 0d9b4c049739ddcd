"""Reduction numbers, correction tables, and the theorem verifiers."""

import random
from fractions import Fraction

import pytest

from sally_lab import (
    AmbientAlgebra,
    FinalExampleFixture,
    HypothesisFailed,
    InternalInconsistency,
    NotAReduction,
    QNotContained,
    QNotParameterShaped,
    coefficients_for_ideal,
    colength,
    depth_bounds,
    equals,
    filtration_certificate,
    intersect,
    is_parameter_shaped,
    itoh_check,
    maximal_ideal,
    newton_closure,
    normalize,
    power,
    product,
    prop31_identity_check,
    prop39_identity_check,
    reduction_number,
    sally_lengths,
    verify_lemma35,
    verify_lemma36,
    verify_northcott,
    verify_prop31,
    verify_prop310,
    verify_prop32,
    verify_prop39,
    verify_thm310,
    verify_thm33,
    vv_check,
    vv_full,
)
from sally_lab.examples import DEGREE_SEVEN_GENS, semigroup_family, two_variable_degree_seven

from helpers import random_closed_instance, random_instance

AMB2 = AmbientAlgebra.polynomial(2)


def degree_seven_pipeline():
    _, I, Q = two_variable_degree_seven()
    rd = reduction_number(I, Q)
    _, coeffs = coefficients_for_ideal(I, r=rd.r)
    sl = sally_lengths(rd, 7)
    return rd, coeffs, sl


def family_pipeline(s):
    _, I, Q = semigroup_family(s)
    rd = reduction_number(I, Q)
    _, coeffs = coefficients_for_ideal(I, r=rd.r)
    sl = sally_lengths(rd, 7)
    return rd, coeffs, sl


def test_reduction_number_degree_seven():
    rd, _, _ = degree_seven_pipeline()
    assert rd.r == 2


def test_reduction_number_trivial():
    Q = normalize(AMB2, [(2, 0), (0, 3)])
    assert reduction_number(Q, Q).r == 0


def test_reduction_number_semigroup_family():
    for s in (1, 2, 3):
        rd, _, _ = family_pipeline(s)
        assert rd.r == 2


def test_reduction_errors():
    I = normalize(AMB2, [(3, 0), (1, 1), (0, 3)])
    outside = normalize(AMB2, [(4, 0), (0, 3)])
    with pytest.raises(QNotContained):
        reduction_number(I, outside)
    with pytest.raises(QNotParameterShaped):
        reduction_number(I, normalize(AMB2, [(3, 0), (1, 1), (0, 3)]))
    assert not is_parameter_shaped(I)
    # the pure-power pair misses the interior generator's polyhedron: no reduction
    sharp = normalize(AMB2, [(3, 0), (1, 1), (0, 3)])
    Q = normalize(AMB2, [(3, 0), (0, 3)])
    with pytest.raises(NotAReduction):
        reduction_number(sharp, Q, cap=6)


def test_parameter_shape_semigroup():
    amb, _, Q = semigroup_family(1)
    assert is_parameter_shaped(Q)
    assert not is_parameter_shaped(normalize(amb, [(1, 0), (1, 1), (1, 3)]))


def test_sally_lengths_frozen_tables():
    rd, _, sl = degree_seven_pipeline()
    assert sl.s[1:7] == (6, 9, 12, 15, 18, 21)
    assert sl.c == (0,) * 8
    assert sl.l == sl.s
    for s in (1, 2, 3):
        rd, _, slv = family_pipeline(s)
        assert slv.s[1:7] == tuple(s * n for n in range(1, 7))


def test_sally_lengths_zero_iff_low_reduction():
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rd = reduction_number(Q, Q)
    sl = sally_lengths(rd, 5)
    assert all(x == 0 for x in sl.s)
    m2 = power(maximal_ideal(AMB2), 2)
    rd1 = reduction_number(m2, Q)
    assert rd1.r == 1
    assert all(x == 0 for x in sally_lengths(rd1, 5).s)


def test_prop31_identity():
    rd, coeffs, sl = degree_seven_pipeline()
    assert prop31_identity_check(rd, coeffs, sl, 5)
    rd, coeffs, sl = family_pipeline(2)
    assert prop31_identity_check(rd, coeffs, sl, 5)
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rdq = reduction_number(Q, Q)
    _, cq = coefficients_for_ideal(Q)
    assert prop31_identity_check(rdq, cq, sally_lengths(rdq, 5), 5)
    assert verify_prop31(rd, coeffs, sl).equality


def test_prop39_requires_itoh():
    rd, coeffs, sl = family_pipeline(1)
    with pytest.raises(HypothesisFailed):
        prop39_identity_check(rd, coeffs, sl, 5)


def test_prop39_on_closed_and_trivial_inputs():
    rng = random.Random(31)
    checked = 0
    while checked < 5:
        I, Q = random_closed_instance(rng)
        rd = reduction_number(I, Q)
        _, coeffs = coefficients_for_ideal(I, r=rd.r)
        sl = sally_lengths(rd, max(rd.r + 5, 6))
        assert prop39_identity_check(rd, coeffs, sl, len(sl.c) - 1)
        assert verify_prop39(rd, coeffs, sl).equality
        checked += 1
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rdq = reduction_number(Q, Q)
    _, cq = coefficients_for_ideal(Q)
    assert prop39_identity_check(rdq, cq, sally_lengths(rdq, 5), 5)


def test_vv_checks():
    rd, _, _ = degree_seven_pipeline()
    assert vv_check(rd, 1)
    assert not vv_check(rd, 2)
    assert not vv_full(rd)
    for s in (1, 2):
        rdf, _, _ = family_pipeline(s)
        assert vv_check(rdf, 1)
        assert not vv_check(rdf, 2)


def test_itoh_check():
    rd, _, _ = degree_seven_pipeline()
    assert not itoh_check(rd)
    for s in (1, 2):
        rdf, _, _ = family_pipeline(s)
        assert not itoh_check(rdf)
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    assert itoh_check(reduction_number(Q, Q))
    rng = random.Random(13)
    for _ in range(5):
        I, Qr = random_closed_instance(rng)
        assert itoh_check(reduction_number(I, Qr))


def test_filtration_certificate_cases():
    # family tables are exactly i0 copies shifted by one
    _, _, sl = family_pipeline(2)
    assert filtration_certificate(sl.s, 1, 2, 2)
    rd, _, sl7 = degree_seven_pipeline()
    assert not filtration_certificate(sl7.s, 1, 2, 6)
    assert filtration_certificate((0, 0, 0, 0), 1, 2, 0)


def test_verify_northcott():
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rep = verify_northcott(reduction_number(Q, Q), coefficients_for_ideal(Q)[1])
    assert rep.slack == 0 and rep.equality
    assert rep.depth_lower == rep.depth_upper == 2
    rd, coeffs, _ = degree_seven_pipeline()
    rep7 = verify_northcott(rd, coeffs)
    assert rep7.slack == Fraction(3)
    assert not rep7.equality
    rd1, c1, _ = family_pipeline(1)
    rep1 = verify_northcott(rd1, c1)
    assert rep1.lhs == 2 and rep1.rhs == 1 and rep1.slack == 1


def test_verify_thm33_strict_and_equal():
    rd, coeffs, sl = degree_seven_pipeline()
    rep = verify_thm33(rd, coeffs, sl)
    assert rep.slack == Fraction(3)
    assert not rep.equality
    assert rep.certificate is False
    assert (rep.depth_lower, rep.depth_upper) == (0, 0)
    for s in (1, 2, 3):
        rdf, cf, slf = family_pipeline(s)
        repf = verify_thm33(rdf, cf, slf)
        assert repf.equality and repf.certificate
        assert repf.depth_lower == 1


def test_verify_thm33_reduces_to_northcott():
    m2 = power(maximal_ideal(AMB2), 2)
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rd = reduction_number(m2, Q)
    _, coeffs = coefficients_for_ideal(m2, r=rd.r)
    rep = verify_thm33(rd, coeffs, sally_lengths(rd, 6))
    assert rd.r == 1 and rep.equality and rep.slack == 0
    assert coeffs.e[2] == 0


def test_verify_thm33_hypothesis_failure_reported():
    # reduction number 3 input: cube hypothesis fails, no assertion made
    I = normalize(AMB2, [(5, 0), (0, 5), (4, 1), (1, 4)])
    Q = normalize(AMB2, [(5, 0), (0, 5)])
    rd = reduction_number(I, Q)
    assert rd.r == 3
    _, coeffs = coefficients_for_ideal(I, r=rd.r)
    rep = verify_thm33(rd, coeffs, sally_lengths(rd, rd.r + 5))
    assert not rep.hypotheses_hold()


def test_verify_prop32():
    rd, coeffs, _ = degree_seven_pipeline()
    rep = verify_prop32(rd, coeffs)
    assert rep.slack == Fraction(3)
    rd3, c3, _ = family_pipeline(3)
    rep3 = verify_prop32(rd3, c3)
    assert rep3.slack == 0 and rep3.equality
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    with pytest.raises(HypothesisFailed):
        verify_prop32(reduction_number(Q, Q), coefficients_for_ideal(Q)[1])


def test_verify_prop310_fixture_and_errors():
    fx = FinalExampleFixture(1, 2)
    rep = verify_prop310(fx)
    assert rep.slack == Fraction(1, 2)
    rd, coeffs, _ = degree_seven_pipeline()
    with pytest.raises(HypothesisFailed):
        verify_prop310(rd, coeffs)  # not integrally closed
    rng = random.Random(3)
    I, Q = random_closed_instance(rng)
    rdc = reduction_number(I, Q)
    with pytest.raises(HypothesisFailed):
        verify_prop310(rdc, coefficients_for_ideal(I, r=rdc.r)[1])  # r < 3


def test_verify_thm310_fixture_matches_pinned_constants():
    for m, d in ((1, 2), (2, 2), (1, 3), (3, 4)):
        fx = FinalExampleFixture(m, d)
        assert fx.e[:3] == (m + 2 * d + 1, m + 3 * d + 1, d + 1)
        rep = verify_thm310(fx)
        assert rep.slack == Fraction(1, 2)
        assert rep.depth_upper == d - 2
        assert rep.certificate is None


def test_verify_thm310_live_low_reduction():
    rng = random.Random(17)
    seen = 0
    while seen < 4:
        I, Q = random_closed_instance(rng)
        rd = reduction_number(I, Q)
        _, coeffs = coefficients_for_ideal(I, r=rd.r)
        sl = sally_lengths(rd, max(rd.r + 5, 6))
        rep = verify_thm310(rd, coeffs, sl)
        assert rep.equality and rep.certificate
        assert rep.depth_lower == 1
        seen += 1


def test_verify_thm310_rejects_open_input():
    rd, coeffs, sl = degree_seven_pipeline()
    with pytest.raises(HypothesisFailed):
        verify_thm310(rd, coeffs, sl)


def test_closed_search_harness_for_high_reduction():
    # closures with pure-power reductions collapse to reduction number <= 1,
    # so the r >= 3 closed subset is expected empty; the bound is asserted on
    # whatever the search yields
    rng = random.Random(41)
    found = 0
    for _ in range(40):
        I, Q = random_closed_instance(rng)
        rd = reduction_number(I, Q)
        assert rd.r <= 1
        if rd.r >= 3:
            _, coeffs = coefficients_for_ideal(I, r=rd.r)
            rep = verify_prop310(rd, coeffs, closed_flag=True)
            assert rep.slack >= 0
            found += 1
    assert found == 0


def test_verify_lemma35():
    _, I, Q = two_variable_degree_seven()
    rep = verify_lemma35(I, Q)
    assert rep.lhs == rep.rhs == Fraction(6)
    # closure difference computed both ways: 6 = 2 * (31 - 28)
    assert colength(I) - colength(newton_closure(I)) == 3
    bad = normalize(AMB2, [(3, 0), (0, 3), (2, 2)])
    with pytest.raises(HypothesisFailed):
        verify_lemma35(bad, normalize(AMB2, [(3, 0), (0, 3)]))


def test_verify_lemma36_cases():
    rep = verify_lemma36(3, [(3, 0), (0, 3), (2, 1)])
    assert rep.lhs == Fraction(1)
    trivial = verify_lemma36(2, [(2, 0), (1, 1), (0, 2)])
    assert trivial.lhs == Fraction(1)
    degenerate = verify_lemma36(1, [(1, 0), (0, 1)])
    assert degenerate.lhs == Fraction(0)
    # degree-seven family satisfies the squared-collapse branch
    rep7 = verify_lemma36(7, DEGREE_SEVEN_GENS)
    assert any("reduction number 2" in j for j in rep7.justifications)
    with pytest.raises(HypothesisFailed):
        verify_lemma36(3, [(3, 0), (0, 3), (1, 1)])


def test_depth_bounds_cases():
    rd, coeffs, sl = degree_seven_pipeline()
    assert depth_bounds(rd, coeffs, sl)[:2] == (0, 0)
    rdf, cf, slf = family_pipeline(1)
    assert depth_bounds(rdf, cf, slf)[:2] == (1, 1)
    Q = normalize(AMB2, [(2, 0), (0, 2)])
    rdq = reduction_number(Q, Q)
    _, cq = coefficients_for_ideal(Q)
    assert depth_bounds(rdq, cq, sally_lengths(rdq, 5))[:2] == (2, 2)


def test_multiplicity_cross_check():
    rng = random.Random(19)
    for _ in range(6):
        I, Q = random_instance(rng)
        rd = reduction_number(I, Q)
        _, coeffs = coefficients_for_ideal(I, r=rd.r)
        assert coeffs.e[0] == colength(Q)


def test_intersection_identity_first_degree():
    rng = random.Random(29)
    for _ in range(6):
        I, Q = random_instance(rng)
        rd = reduction_number(I, Q)
        assert vv_check(rd, 1)  # I cap Q = Q always
        assert equals(intersect(I, Q), Q)
