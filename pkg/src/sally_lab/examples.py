"""Bundled worked examples with pinned expected constants.

Each runner constructs the instance, drives every applicable verifier, and
compares the results against the pinned values, raising GoldenMismatch on
the first divergence.  The CLI exposes them behind `paper-examples`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .ambient import AmbientAlgebra
from .closure import is_integrally_closed
from .errors import GoldenMismatch
from .exact import frac_str
from .filtration import chain_filtration_demo, example26a_check, thm11a_check
from .hilbert import coefficients_for_ideal
from .ideals import colength, equals, maximal_ideal, normalize, power, product, quotient_length
from .sally import (
    FinalExampleFixture,
    depth_bounds,
    filtration_certificate,
    reduction_number,
    sally_lengths,
    verify_lemma35,
    verify_lemma36,
    verify_northcott,
    verify_prop310,
    verify_thm310,
    verify_thm33,
    vv_check,
)

DEGREE_SEVEN_GENS = ((7, 0), (6, 1), (5, 2), (2, 5), (1, 6), (0, 7))


def two_variable_degree_seven():
    """Degree-seven family in two variables with the pure-power pair as reduction."""
    amb = AmbientAlgebra.polynomial(2)
    I = normalize(amb, DEGREE_SEVEN_GENS)
    Q = normalize(amb, [(7, 0), (0, 7)])
    return amb, I, Q


def semigroup_family(s: int):
    """Rank-two semigroup family indexed by s >= 1, with its canonical reduction."""
    if s < 1:
        raise ValueError("s must be at least 1")
    gens = [(1, i) for i in range(2 * s + 2)]
    amb = AmbientAlgebra.semigroup(gens, cm_flag=True)
    I = normalize(amb, [(1, i) for i in range(s + 1)] + [(1, 2 * s + 1)])
    Q = normalize(amb, [(1, 0), (1, 2 * s + 1)])
    return amb, I, Q


def degree_t_subsets(t: int):
    """All monomial ideals generated in degree t that contain both pure powers."""
    middle = [(a, t - a) for a in range(1, t)]
    corners = [(t, 0), (0, t)]
    for k in range(len(middle) + 1):
        for extra in combinations(middle, k):
            yield corners + list(extra)


def _expect(label: str, got, want):
    if got != want:
        raise GoldenMismatch(f"{label}: got {got!r}, want {want!r}")
    shown = frac_str(got) if isinstance(got, Fraction) else repr(got)
    return f"{label} = {shown} OK"


def run_degree_seven() -> list:
    lines = []
    amb, I, Q = two_variable_degree_seven()
    mt14 = power(maximal_ideal(amb), 14)
    lines.append(_expect("colength(A/I)", colength(I), 31))
    lines.append(_expect("I^2 equals the degree-14 power", equals(power(I, 2), mt14), True))
    rd = reduction_number(I, Q)
    lines.append(_expect("reduction number", rd.r, 2))
    table, coeffs = coefficients_for_ideal(I, r=rd.r)
    lines.append(_expect("coefficients", coeffs.e, (49, 21, 0)))
    lines.append(_expect("postulation", coeffs.postulation, 1))
    sl = sally_lengths(rd, max(rd.r + 5, 6))
    lines.append(_expect("s-table", sl.s[1:7], (6, 9, 12, 15, 18, 21)))
    lines.append(_expect("len(I^2/QI)", quotient_length(power(I, 2), product(Q, I)), 6))
    north = verify_northcott(rd, coeffs)
    lines.append(_expect("base slack", north.slack, Fraction(3)))
    rep = verify_thm33(rd, coeffs, sl)
    lines.append(_expect("boundary slack", rep.slack, Fraction(3)))
    lines.append(_expect("boundary equality", rep.equality, False))
    lines.append(_expect("chain certificate", rep.certificate, False))
    lines.append(_expect("integrally closed", is_integrally_closed(I), False))
    lemma = verify_lemma35(I, Q)
    lines.append(_expect("closure balance holds", lemma.equality, True))
    lower, upper, _ = depth_bounds(rd, coeffs, sl)
    lines.append(_expect("depth interval", (lower, upper), (0, 0)))
    return lines


def run_semigroup_family(s: int) -> list:
    lines = []
    amb, I, Q = semigroup_family(s)
    lines.append(_expect("colength(A/I)", colength(I), s + 1))
    rd = reduction_number(I, Q)
    lines.append(_expect("reduction number", rd.r, 2))
    lines.append(
        _expect("len(I^2/QI)", quotient_length(power(I, 2), product(Q, I)), s)
    )
    lines.append(_expect("I^3 stabilizes", equals(power(I, 3), product(Q, power(I, 2))), True))
    table, coeffs = coefficients_for_ideal(I, r=rd.r)
    lines.append(_expect("coefficients", coeffs.e, (2 * s + 1, 2 * s, s)))
    lines.append(_expect("postulation", coeffs.postulation, 0))
    sl = sally_lengths(rd, max(rd.r + 5, 6))
    lines.append(
        _expect("s-table", sl.s[1:7], tuple(s * n for n in range(1, 7)))
    )
    rep = verify_thm33(rd, coeffs, sl)
    lines.append(_expect("boundary equality", rep.equality, True))
    lines.append(_expect("chain certificate", rep.certificate, True))
    lines.append(
        _expect("certificate i0", filtration_certificate(sl.s, 1, 2, s), True)
    )
    lines.append(_expect("intersection equality at n=2", vv_check(rd, 2), False))
    lower, upper, _ = depth_bounds(rd, coeffs, sl)
    lines.append(_expect("depth interval", (lower, upper), (1, 1)))
    return lines


def run_degree_t_sweep(t: int) -> list:
    lines = []
    amb = AmbientAlgebra.polynomial(2)
    mt = power(maximal_ideal(amb), t)
    # t = 1 is the degenerate case where the closure equals the pure-power pair
    expected_red = 0 if t == 1 else 1
    count = 0
    for gens in degree_t_subsets(t):
        rep = verify_lemma36(t, gens)
        if rep.lhs != Fraction(expected_red):
            raise GoldenMismatch(
                f"closure reduction number for {gens}: got {rep.lhs}, want {expected_red}"
            )
        count += 1
    lines.append(f"degree-{t} sweep: {count} ideals, closures all equal the full power OK")
    lines.append(f"closure reduction number = {expected_red} throughout OK")
    return lines


def run_chain_demo(m: int, d: int, N: int = 6) -> list:
    lines = []
    steps = chain_filtration_demo(m, d, N)
    lines.append(_expect("step count equals coefficient length", len(steps), m))
    table = steps[0].length_table_before
    rep = thm11a_check(table, 0, d, m)
    lines.append(_expect("free-module bound is tight", rep.equality, True))
    lines.append(_expect("free-module certificate", rep.certificate, True))
    lines.append(_expect("rank-two sequence additivity", example26a_check(N), True))
    return lines


def run_final_fixture(m: int, d: int) -> list:
    lines = []
    fx = FinalExampleFixture(m, d)
    rep = verify_thm310(fx)
    lines.append(_expect("boundary slack", rep.slack, Fraction(1, 2)))
    lines.append(_expect("boundary equality", rep.equality, False))
    lines.append(_expect("depth upper bound", rep.depth_upper, d - 2))
    rep310 = verify_prop310(fx)
    lines.append(_expect("averaged slack", rep310.slack, Fraction(1, 2)))
    return lines
