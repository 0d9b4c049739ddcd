"""Exact staircase arithmetic for m-primary monomial ideals.

Colengths, Hilbert-Samuel tables and coefficients, integral closures,
reduction numbers, correction-module length tables, and length-level
verifiers with derived depth bounds.  All arithmetic is exact.
"""

from .ambient import POLYNOMIAL, SEMIGROUP, AmbientAlgebra
from .closure import (
    NewtonPolyhedron,
    is_integrally_closed,
    newton_closure,
    polyhedron_member,
    polyhedron_member_reference,
)
from .errors import (
    AmbientMismatch,
    ArityMismatch,
    EmptyInterval,
    GoldenMismatch,
    HypothesisFailed,
    InputError,
    InternalInconsistency,
    NonIntegerCoefficient,
    NotAReduction,
    NotContained,
    NotInSemigroup,
    NotMPrimary,
    QNotContained,
    QNotParameterShaped,
    SallyLabError,
    SemigroupAmbientUnsupported,
    WindowTooShort,
)
from .filtration import (
    FiltrationStep,
    chain_filtration_demo,
    example26a_check,
    module_presentation_lengths,
    monomial_count,
    thm11a_check,
)
from .hilbert import (
    HilbertCoefficients,
    HilbertTable,
    binom_basis,
    coefficients_for_ideal,
    fit_binomial,
    fit_coefficients,
    hilbert_poly_value,
    hs_table,
)
from .ideals import (
    MonomialIdeal,
    colength,
    contains_ideal,
    equals,
    intersect,
    maximal_ideal,
    member,
    normalize,
    power,
    product,
    quotient_length,
    unit_ideal,
)
from .sally import (
    FinalExampleFixture,
    ReductionData,
    SallyLengths,
    VerifierReport,
    depth_bounds,
    filtration_certificate,
    is_parameter_shaped,
    itoh_check,
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

__version__ = "0.1.0"
