"""Reduction numbers, correction-module length tables, and the length-level verifiers.

All bounds are checked over exact rationals.  The correction tables are
computed as colength differences:

    s[n] = len(A/Q^n I)       - len(A/I^(n+1))        (n >= 1)
    c[n] = len(A/Q^(n-1) I^2) - len(A/I^(n+1))        (n >= 2)
    l[n] = s[n] - c[n]

with s[0] = c[0] = c[1] = 0.  Derived depth statements are intervals
assembled from the verified equalities, never measured from a module
presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ambient import POLYNOMIAL, AmbientAlgebra
from .closure import is_integrally_closed, newton_closure
from .errors import (
    AmbientMismatch,
    EmptyInterval,
    HypothesisFailed,
    InternalInconsistency,
    NotAReduction,
    QNotContained,
    QNotParameterShaped,
)
from .exact import integer_rank
from .hilbert import HilbertCoefficients, binom_basis, hilbert_poly_value
from .ideals import (
    MonomialIdeal,
    colength,
    contains_ideal,
    equals,
    intersect,
    maximal_ideal,
    normalize,
    power,
    product,
    quotient_length,
)


@dataclass(frozen=True)
class ReductionData:
    """A parameter-shaped reduction together with its reduction number."""

    ideal: MonomialIdeal
    reduction: MonomialIdeal
    r: int


@dataclass(frozen=True)
class SallyLengths:
    """Correction-module length tables, indexed by degree n from 0."""

    s: tuple
    c: tuple
    l: tuple


@dataclass(frozen=True)
class VerifierReport:
    theorem_id: str
    hypotheses: tuple            # pairs (name, holds)
    lhs: Fraction
    rhs: Fraction
    slack: Fraction
    equality: bool
    certificate: bool | None
    depth_lower: int
    depth_upper: int
    justifications: tuple

    def hypotheses_hold(self) -> bool:
        return all(h for _, h in self.hypotheses)

    def to_dict(self) -> dict:
        from .exact import frac_str

        return {
            "theorem": self.theorem_id,
            "hypotheses": [{"name": n, "holds": h} for n, h in self.hypotheses],
            "lhs": frac_str(self.lhs),
            "rhs": frac_str(self.rhs),
            "slack": frac_str(self.slack),
            "equality": self.equality,
            "certificate": self.certificate,
            "depth_lower": self.depth_lower,
            "depth_upper": self.depth_upper,
            "justifications": list(self.justifications),
        }


@dataclass(frozen=True)
class FinalExampleFixture:
    """Pinned constants of the closed reduction-number-three family.

    The underlying local ring is not monomial, so the verifier consumes the
    published lengths and coefficients instead of recomputing them:
    colength 1, e0 = m+2d+1, e1 = m+3d+1, e2 = d+1, e_i = 0 for i >= 3,
    and len(I^2/QI) = d, with reduction number 3.
    """

    m: int
    d: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be at least 1")
        if self.d < 2:
            raise ValueError("d must be at least 2")

    @property
    def colength_ideal(self) -> int:
        return 1

    @property
    def e(self) -> tuple:
        return tuple([self.m + 2 * self.d + 1, self.m + 3 * self.d + 1, self.d + 1] + [0] * (self.d - 2))

    @property
    def square_mod_reduction(self) -> int:
        return self.d

    @property
    def r(self) -> int:
        return 3


def is_parameter_shaped(Q: MonomialIdeal) -> bool:
    """Pure powers covering every axis (polynomial) or a rank-d generator matrix (semigroup)."""
    amb = Q.ambient
    if len(Q.generators) != amb.dim:
        return False
    if amb.kind == POLYNOMIAL:
        covered = set()
        for g in Q.generators:
            support = [j for j, x in enumerate(g) if x > 0]
            if len(support) != 1:
                return False
            covered.add(support[0])
        return len(covered) == amb.dim
    return integer_rank(Q.generators) == amb.dim


def reduction_number(I: MonomialIdeal, Q: MonomialIdeal, cap: int = 20) -> ReductionData:
    """Least n with I^(n+1) = Q I^n, by direct ideal equality up to the cap."""
    if I.ambient != Q.ambient:
        raise AmbientMismatch("ideal and reduction live in different ambients")
    if not contains_ideal(I, Q):
        raise QNotContained("the candidate reduction is not contained in the ideal")
    if not is_parameter_shaped(Q):
        raise QNotParameterShaped(f"generators {Q.generators} are not parameter-shaped")
    for n in range(cap + 1):
        if equals(power(I, n + 1), product(Q, power(I, n))):
            return ReductionData(I, Q, n)
    raise NotAReduction(f"no n <= {cap} with I^(n+1) = Q I^n")


def sally_lengths(rd: ReductionData, N: int) -> SallyLengths:
    I, Q = rd.ideal, rd.reduction
    s = [0]
    c = [0]
    I2 = power(I, 2)
    for n in range(1, N + 1):
        top = colength(product(power(Q, n), I))
        ip1 = colength(power(I, n + 1))
        s.append(top - ip1)
        if n == 1:
            c.append(0)
        else:
            c.append(colength(product(power(Q, n - 1), I2)) - ip1)
    l = [a - b for a, b in zip(s, c)]
    if any(x < 0 for x in s) or any(x < 0 for x in c) or any(x < 0 for x in l):
        raise InternalInconsistency("negative correction length")
    return SallyLengths(tuple(s), tuple(c), tuple(l))


def prop31_identity_check(rd: ReductionData, coeffs: HilbertCoefficients, sl: SallyLengths, N: int) -> bool:
    """Two-path check of the rank-one correction identity for 0 <= n <= N.

    e0 is taken as colength(Q), independently of the fit.
    """
    d = rd.ideal.ambient.dim
    e0 = colength(rd.reduction)
    la = colength(rd.ideal)
    for n in range(N + 1):
        lhs = colength(power(rd.ideal, n + 1))
        rhs = e0 * binom_basis(n, d, d) - (e0 - la) * binom_basis(n, d - 1, d - 1) - sl.s[n]
        if lhs != rhs:
            return False
    return True


def itoh_check(rd: ReductionData) -> bool:
    """Whether Q meets the square of the ideal exactly in Q times the ideal."""
    I, Q = rd.ideal, rd.reduction
    return equals(intersect(Q, power(I, 2)), product(Q, I))


def vv_check(rd: ReductionData, n: int) -> bool:
    """Intersection equality I^n cap Q = Q I^(n-1) in degree n."""
    I, Q = rd.ideal, rd.reduction
    return equals(intersect(power(I, n), Q), product(Q, power(I, n - 1)))


def vv_full(rd: ReductionData) -> bool:
    # for n > r the equality is implied by I^n = Q I^(n-1)
    return all(vv_check(rd, n) for n in range(1, rd.r + 1))


def prop39_identity_check(rd: ReductionData, coeffs: HilbertCoefficients, sl: SallyLengths, N: int) -> bool:
    """Two-path check of the refined identity, valid under Q cap I^2 = QI."""
    if not itoh_check(rd):
        raise HypothesisFailed("q_cap_i2_eq_qi", "Q cap I^2 != QI")
    d = rd.ideal.ambient.dim
    I, Q = rd.ideal, rd.reduction
    e0 = colength(Q)
    la = colength(I)
    l2 = quotient_length(power(I, 2), product(Q, I))
    for n in range(N + 1):
        lhs = colength(power(I, n + 1))
        rhs = (
            e0 * binom_basis(n, d, d)
            - (e0 - la + l2) * binom_basis(n, d - 1, d - 1)
            + l2 * binom_basis(n, d - 2, d - 2)
            - sl.c[n]
        )
        if lhs != rhs:
            return False
    return True


def filtration_certificate(lengths, t: int, d: int, i0: int) -> bool:
    """Exact length identity of a chain of i0 shifted polynomial-ring copies.

    True iff lengths[n] = i0 * binom(n - t + d - 1, d - 1) for every covered n
    (zero below degree t).
    """
    if i0 < 0:
        raise ValueError("i0 must be non-negative")
    return all(
        lengths[n] == i0 * binom_basis(n, d - 1 - t, d - 1)
        for n in range(len(lengths))
    )


def _check_multiplicity(rd: ReductionData, coeffs: HilbertCoefficients):
    # two independent e0 routes: parameter colength vs table fit
    if rd.ideal.ambient.cm_flag and coeffs.e[0] != colength(rd.reduction):
        raise InternalInconsistency(
            f"fitted e0 = {coeffs.e[0]} but colength of the reduction is {colength(rd.reduction)}"
        )


def verify_northcott(rd: ReductionData, coeffs: HilbertCoefficients) -> VerifierReport:
    """Base inequality colength >= e0 - e1; equality exactly when r <= 1."""
    _check_multiplicity(rd, coeffs)
    d = rd.ideal.ambient.dim
    cm = rd.ideal.ambient.cm_flag
    lhs = Fraction(colength(rd.ideal))
    rhs = Fraction(coeffs.e[0] - coeffs.e[1])
    slack = lhs - rhs
    hypotheses = (("ambient_cm", cm),)
    if cm:
        if slack < 0:
            raise InternalInconsistency("negative base slack")
        equality = slack == 0
        if equality != (rd.r <= 1):
            raise InternalInconsistency("base equality must coincide with reduction number <= 1")
    else:
        equality = slack == 0
    if equality:
        lower, upper = d, d
        just = ("northcott: boundary equality, blowup algebras are Cohen-Macaulay",)
    else:
        lower, upper = 0, d
        just = ("northcott: strict inequality, reduction number is at least 2",)
    return VerifierReport("northcott", hypotheses, lhs, rhs, slack, equality, None, lower, upper, just)


def verify_prop31(rd: ReductionData, coeffs: HilbertCoefficients, sl: SallyLengths, N: int | None = None) -> VerifierReport:
    """Report wrapper around the rank-one correction identity."""
    _check_multiplicity(rd, coeffs)
    n_top = len(sl.s) - 1 if N is None else min(N, len(sl.s) - 1)
    ok = prop31_identity_check(rd, coeffs, sl, n_top)
    if not ok:
        raise InternalInconsistency("rank-one correction identity failed")
    d = rd.ideal.ambient.dim
    return VerifierReport(
        "prop31",
        (("ambient_cm", rd.ideal.ambient.cm_flag),),
        Fraction(0),
        Fraction(0),
        Fraction(0),
        True,
        None,
        0,
        d,
        (f"prop31: correction identity verified for 0 <= n <= {n_top}",),
    )


def verify_prop39(rd: ReductionData, coeffs: HilbertCoefficients, sl: SallyLengths, N: int | None = None) -> VerifierReport:
    """Report wrapper around the refined identity under Q cap I^2 = QI."""
    _check_multiplicity(rd, coeffs)
    n_top = len(sl.c) - 1 if N is None else min(N, len(sl.c) - 1)
    ok = prop39_identity_check(rd, coeffs, sl, n_top)
    if not ok:
        raise InternalInconsistency("refined correction identity failed")
    d = rd.ideal.ambient.dim
    return VerifierReport(
        "prop39",
        (("ambient_cm", rd.ideal.ambient.cm_flag), ("q_cap_i2_eq_qi", True)),
        Fraction(0),
        Fraction(0),
        Fraction(0),
        True,
        None,
        0,
        d,
        (f"prop39: refined identity verified for 0 <= n <= {n_top}",),
    )


def verify_thm33(
    rd: ReductionData,
    coeffs: HilbertCoefficients,
    sl: SallyLengths,
    closed_flag: bool | None = None,
    rr_closed: bool = False,
) -> VerifierReport:
    """Second-coefficient boundary check under I^3 = Q I^2.

    Equality must coincide with the chain certificate on the s-table with
    i0 = s[1]; when equal, the fitted polynomial must match the whole table.
    """
    _check_multiplicity(rd, coeffs)
    d = rd.ideal.ambient.dim
    cm = rd.ideal.ambient.cm_flag
    hyp_cube = rd.r <= 2
    hypotheses = [("ambient_cm", cm), ("i3_eq_qi2", hyp_cube)]
    lhs = Fraction(colength(rd.ideal))
    rhs = Fraction(coeffs.e[0] - coeffs.e[1] + coeffs.e[2])
    slack = lhs - rhs
    if not (cm and hyp_cube):
        return VerifierReport(
            "thm33",
            tuple(hypotheses),
            lhs,
            rhs,
            slack,
            slack == 0,
            None,
            0,
            d,
            ("thm33: hypothesis failed, inequality not asserted",),
        )
    if slack < 0:
        raise InternalInconsistency("negative second-coefficient slack")
    equality = slack == 0
    certificate = filtration_certificate(sl.s, 1, d, sl.s[1])
    if equality != certificate:
        raise InternalInconsistency("boundary equality and chain certificate disagree")
    just = [f"thm33: chain certificate with i0 = {sl.s[1]} is {certificate}"]
    if equality:
        for n in range(len(sl.s)):
            if colength(power(rd.ideal, n + 1)) != hilbert_poly_value(coeffs.e[:3], d, n):
                raise InternalInconsistency(f"boundary polynomial fails at n = {n}")
        lower, upper = d - 1, d
        just.append("thm33: equality, table matches the fitted polynomial from n = 0 on; depth >= d-1")
    else:
        lower, upper = 0, d - 2
        just.append("thm33: strict inequality, depth <= d-2")
    closed_applies = bool(closed_flag) or (rr_closed and d == 2)
    if closed_applies:
        hypotheses.append(("closed_or_rr_closed", True))
        if not equality:
            raise InternalInconsistency(
                "closed input must meet the boundary: the reverse bound fails"
            )
        just.append("cor34: closed input sits exactly on the boundary")
    return VerifierReport(
        "thm33",
        tuple(hypotheses),
        lhs,
        rhs,
        slack,
        equality,
        certificate,
        lower,
        upper,
        tuple(just),
    )


def verify_prop32(rd: ReductionData, coeffs: HilbertCoefficients) -> VerifierReport:
    """Averaged second-coefficient bound for r >= 2; equality pins r = 2."""
    if rd.r < 2:
        raise HypothesisFailed("r_ge_2", "reduction number must be at least 2")
    _check_multiplicity(rd, coeffs)
    d = rd.ideal.ambient.dim
    lhs = Fraction(colength(rd.ideal))
    rhs = Fraction(coeffs.e[0] - coeffs.e[1]) + Fraction(coeffs.e[2], rd.r - 1)
    slack = lhs - rhs
    if slack < 0:
        raise InternalInconsistency("negative averaged slack")
    equality = slack == 0
    if equality and rd.r != 2:
        raise InternalInconsistency("averaged equality met with reduction number != 2")
    just = ["prop32: equality forces reduction number 2"] if equality else [
        "prop32: strict averaged inequality"
    ]
    return VerifierReport(
        "prop32",
        (("ambient_cm", rd.ideal.ambient.cm_flag), ("r_ge_2", True)),
        lhs,
        rhs,
        slack,
        equality,
        None,
        0,
        d,
        tuple(just),
    )


def _resolve_closed(rd: ReductionData, closed_flag: bool | None) -> bool | None:
    if closed_flag is not None:
        return closed_flag
    if rd.ideal.ambient.kind == POLYNOMIAL:
        return is_integrally_closed(rd.ideal)
    return None


def verify_prop310(rd_or_fixture, coeffs: HilbertCoefficients | None = None, closed_flag: bool | None = None) -> VerifierReport:
    """Averaged bound for closed ideals with r >= 3; equality pins r = 3."""
    if isinstance(rd_or_fixture, FinalExampleFixture):
        fx = rd_or_fixture
        d, r = fx.d, fx.r
        la, e, l2 = fx.colength_ideal, fx.e, fx.square_mod_reduction
        hypotheses = (("integrally_closed", True), ("r_ge_3", True), ("ambient_cm", True))
    else:
        rd = rd_or_fixture
        _check_multiplicity(rd, coeffs)
        closed = _resolve_closed(rd, closed_flag)
        if not closed:
            raise HypothesisFailed("integrally_closed", "input is not integrally closed")
        if rd.r < 3:
            raise HypothesisFailed("r_ge_3", "reduction number must be at least 3")
        d, r = rd.ideal.ambient.dim, rd.r
        la = colength(rd.ideal)
        e = coeffs.e
        l2 = quotient_length(power(rd.ideal, 2), product(rd.reduction, rd.ideal))
        hypotheses = (
            ("integrally_closed", True),
            ("r_ge_3", True),
            ("ambient_cm", rd.ideal.ambient.cm_flag),
        )
    lhs = Fraction(la)
    rhs = Fraction(e[0] - e[1]) + Fraction((r - 2) * l2 + e[2], r - 1)
    slack = lhs - rhs
    if slack < 0:
        raise InternalInconsistency("negative averaged closed slack")
    equality = slack == 0
    if equality and r != 3:
        raise InternalInconsistency("averaged closed equality met with reduction number != 3")
    just = ["prop310: equality forces reduction number 3"] if equality else [
        "prop310: strict averaged inequality"
    ]
    return VerifierReport(
        "prop310",
        hypotheses,
        lhs,
        rhs,
        slack,
        equality,
        None,
        0,
        d,
        tuple(just),
    )


def verify_thm310(
    rd_or_fixture,
    coeffs: HilbertCoefficients | None = None,
    sl: SallyLengths | None = None,
    closed_flag: bool | None = None,
) -> VerifierReport:
    """Boundary check for closed ideals with I^4 = Q I^3.

    Live inputs also get the chain certificate on the c-table with i0 = c[2];
    a fixture carries pinned constants, so its certificate is unknown (None).
    """
    if isinstance(rd_or_fixture, FinalExampleFixture):
        fx = rd_or_fixture
        d = fx.d
        la, e, l2 = fx.colength_ideal, fx.e, fx.square_mod_reduction
        lhs = Fraction(la)
        rhs = Fraction(e[0] - e[1]) + Fraction(l2 + e[2], 2)
        slack = lhs - rhs
        if slack < 0:
            raise InternalInconsistency("negative boundary slack on fixture")
        equality = slack == 0
        lower, upper = (d - 1, d) if equality else (0, d - 2)
        return VerifierReport(
            "thm310",
            (("integrally_closed", True), ("i4_eq_qi3", True), ("ambient_cm", True)),
            lhs,
            rhs,
            slack,
            equality,
            None,
            lower,
            upper,
            (
                "thm310: fixture constants, certificate not computable",
                "thm310: strict inequality, depth <= d-2" if not equality else "thm310: boundary equality, depth >= d-1",
            ),
        )

    rd = rd_or_fixture
    _check_multiplicity(rd, coeffs)
    d = rd.ideal.ambient.dim
    closed = _resolve_closed(rd, closed_flag)
    if not closed:
        raise HypothesisFailed("integrally_closed", "input is not integrally closed")
    if rd.r > 3:
        raise HypothesisFailed("i4_eq_qi3", "fourth power does not stabilize")
    if len(sl.c) < 3:
        raise ValueError("correction table must cover degree 2")
    la = colength(rd.ideal)
    e = coeffs.e
    l2 = quotient_length(power(rd.ideal, 2), product(rd.reduction, rd.ideal))
    lhs = Fraction(la)
    rhs = Fraction(e[0] - e[1]) + Fraction(l2 + e[2], 2)
    slack = lhs - rhs
    if slack < 0:
        raise InternalInconsistency("negative boundary slack")
    equality = slack == 0
    certificate = filtration_certificate(sl.c, 2, d, sl.c[2])
    if equality != certificate:
        raise InternalInconsistency("boundary equality and chain certificate disagree")
    just = [f"thm310: chain certificate with i0 = {sl.c[2]} is {certificate}"]
    if equality:
        e3 = e[3] if d >= 3 else 0
        for n in range(1, len(sl.c)):
            expected = (
                e[0] * binom_basis(n, d, d)
                - e[1] * binom_basis(n, d - 1, d - 1)
                + e[2] * binom_basis(n, d - 2, d - 2)
                - e3 * binom_basis(n, d - 3, d - 3)
            )
            if colength(power(rd.ideal, n + 1)) != expected:
                raise InternalInconsistency(f"boundary cubic polynomial fails at n = {n}")
        lower, upper = d - 1, d
        just.append("thm310: boundary equality, depth >= d-1")
    else:
        lower, upper = 0, d - 2
        just.append("thm310: strict inequality, depth <= d-2")
    if rd.r <= 2:
        thm33 = verify_thm33(rd, coeffs, sl)
        if thm33.equality != equality:
            raise InternalInconsistency("degree-2 and degree-3 boundary checks disagree")
        just.append("thm310: low reduction number, consistent with thm33")
    return VerifierReport(
        "thm310",
        (
            ("integrally_closed", True),
            ("i4_eq_qi3", True),
            ("ambient_cm", rd.ideal.ambient.cm_flag),
        ),
        lhs,
        rhs,
        slack,
        equality,
        certificate,
        lower,
        upper,
        tuple(just),
    )


def verify_lemma35(I: MonomialIdeal, Q: MonomialIdeal) -> VerifierReport:
    """Under I^2 = closure(I)^2 = Q closure(I): cube stabilizes and
    len(I^2/QI) = d * len(closure(I)/I), with reduction number 2 when I is not closed."""
    d = I.ambient.dim
    ibar = newton_closure(I)
    h1 = equals(power(I, 2), power(ibar, 2))
    h2 = equals(power(ibar, 2), product(Q, ibar))
    if not h1:
        raise HypothesisFailed("i2_eq_closure2", "I^2 != closure(I)^2")
    if not h2:
        raise HypothesisFailed("closure2_eq_q_closure", "closure(I)^2 != Q closure(I)")
    if not equals(power(I, 3), product(Q, power(I, 2))):
        raise InternalInconsistency("cube does not stabilize under the closure hypotheses")
    l2 = quotient_length(power(I, 2), product(Q, I))
    lbar = colength(I) - colength(ibar)
    if l2 != d * lbar:
        raise InternalInconsistency(
            f"len(I^2/QI) = {l2} but d * len(closure/I) = {d * lbar}"
        )
    just = [f"lemma35: len(I^2/QI) = {l2} computed both ways"]
    if not equals(I, ibar):
        rd = reduction_number(I, Q)
        if rd.r != 2:
            raise InternalInconsistency(f"reduction number is {rd.r}, expected 2")
        just.append("lemma35: I is not closed, reduction number is exactly 2")
    return VerifierReport(
        "lemma35",
        (("i2_eq_closure2", True), ("closure2_eq_q_closure", True)),
        Fraction(l2),
        Fraction(d * lbar),
        Fraction(0),
        True,
        None,
        0,
        d,
        tuple(just),
    )


def verify_lemma36(t: int, I0_gens) -> VerifierReport:
    """Degree-t families in two variables: closures collapse onto the full
    power of the maximal ideal and the pure-power pair reduces it in one step."""
    amb = AmbientAlgebra.polynomial(2)
    I0 = normalize(amb, I0_gens)
    if any(sum(g) != t for g in I0.generators):
        raise HypothesisFailed("generated_in_degree_t", f"generators are not all of degree {t}")
    Q0 = normalize(amb, [(t, 0), (0, t)])
    if not contains_ideal(I0, Q0):
        raise HypothesisFailed("q0_subset_i0", "pure powers are not contained in the ideal")
    mt = power(maximal_ideal(amb), t)
    cQ = newton_closure(Q0)
    cI = newton_closure(I0)
    if not equals(cQ, mt) or not equals(cI, mt):
        raise InternalInconsistency("closures do not collapse onto the degree-t power")
    rbar = reduction_number(cI, Q0).r
    expected = 0 if equals(cI, Q0) else 1
    if rbar != expected:
        raise InternalInconsistency(f"closure reduction number is {rbar}, expected {expected}")
    just = [f"lemma36: both closures equal the degree-{t} power, closure reduction number {rbar}"]
    strict_middle = not equals(I0, Q0) and not equals(I0, mt)
    if strict_middle and equals(power(I0, 2), power(maximal_ideal(amb), 2 * t)):
        r0 = reduction_number(I0, Q0).r
        if r0 != 2:
            raise InternalInconsistency(f"squared-collapse family has reduction number {r0}, expected 2")
        just.append("lemma36: strict middle ideal with collapsing square, reduction number 2")
    return VerifierReport(
        "lemma36",
        (("generated_in_degree_t", True), ("q0_subset_i0", True)),
        Fraction(rbar),
        Fraction(expected),
        Fraction(0),
        True,
        None,
        0,
        2,
        tuple(just),
    )


def depth_bounds(rd: ReductionData, coeffs: HilbertCoefficients, sl: SallyLengths, closed_flag: bool | None = None):
    """Interval [lower, upper] for the depth of the associated graded ring.

    Assembled from the verified equalities only; each contribution is listed
    in the justification trail.
    """
    if not rd.ideal.ambient.cm_flag:
        raise HypothesisFailed("ambient_cm", "depth bounds require the Cohen-Macaulay assertion")
    d = rd.ideal.ambient.dim
    lower, upper = 0, d
    just = []
    if rd.r <= 1:
        lower = d
        just.append("northcott: reduction number <= 1, blowup algebras are Cohen-Macaulay, depth = d")
    else:
        if vv_full(rd):
            lower = d
            just.append("vv: all intersection equalities hold, associated graded ring is Cohen-Macaulay")
        if not vv_check(rd, 2):
            upper = min(upper, d - 1)
            just.append("vv: I^2 cap Q != QI, associated graded ring is not Cohen-Macaulay, depth <= d-1")
        if rd.r <= 2:
            rep = verify_thm33(rd, coeffs, sl)
            if rep.equality:
                lower = max(lower, d - 1)
                just.append("thm33: boundary equality, depth >= d-1")
            else:
                upper = min(upper, d - 2)
                just.append("thm33: strict inequality, depth <= d-2")
        closed = _resolve_closed(rd, closed_flag)
        if closed and rd.r <= 3:
            rep = verify_thm310(rd, coeffs, sl, closed_flag=True)
            if rep.equality:
                lower = max(lower, d - 1)
                just.append("thm310: boundary equality, depth >= d-1")
            else:
                upper = min(upper, d - 2)
                just.append("thm310: strict inequality, depth <= d-2")
    if lower > upper:
        raise EmptyInterval(f"contradictory depth bounds [{lower}, {upper}]")
    return lower, upper, tuple(just)
