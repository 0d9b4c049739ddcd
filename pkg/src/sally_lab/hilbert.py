"""Hilbert-Samuel tables and exact coefficient fitting in the binomial basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InternalInconsistency, NonIntegerCoefficient, WindowTooShort
from .exact import solve_linear
from .ideals import MonomialIdeal, colength, power

FIT_TAIL = 3          # verification points demanded before the fit window
DEFAULT_N_CAP = 64    # doubling cap for the automatic window enlargement


def binom_basis(n: int, top_shift: int, k: int) -> int:
    """binom(n + top_shift, k), truncated to 0 where graded pieces vanish.

    The value is 0 whenever n + top_shift < k (including k < 0), which is the
    vanishing convention for Hilbert functions of shifted graded pieces.
    """
    if k < 0:
        return 0
    m = n + top_shift
    if m < k:
        return 0
    return comb(m, k)


@dataclass(frozen=True)
class HilbertTable:
    """values[n] = colength of the (n+1)-st power; first_diffs are the graded piece lengths."""

    values: tuple
    first_diffs: tuple


def hs_table(I: MonomialIdeal, N: int) -> HilbertTable:
    d = I.ambient.dim
    if N < d + 1:
        raise ValueError(f"N must be at least d + 1 = {d + 1}")
    if colength(I) == 0:
        raise ValueError("the unit ideal has no Hilbert-Samuel table")
    vals = [colength(power(I, n + 1)) for n in range(N + 1)]
    diffs = [vals[0]] + [vals[n] - vals[n - 1] for n in range(1, N + 1)]
    if any(x <= 0 for x in diffs):
        raise InternalInconsistency("table is not strictly increasing")
    return HilbertTable(tuple(vals), tuple(diffs))


@dataclass(frozen=True)
class HilbertCoefficients:
    d: int
    e: tuple
    postulation: int


def fit_binomial(values, degree: int):
    """Fit exact integers (e_0..e_degree) with
    values[n] = sum_i (-1)^i e_i binom(n + degree - i, degree - i) on a stable tail.

    Returns (e, postulation).  Raises WindowTooShort unless at least FIT_TAIL
    points immediately before the fit window agree with the fitted polynomial.
    """
    values = list(values)
    D = degree
    N = len(values) - 1
    if N < D + FIT_TAIL:
        raise WindowTooShort(f"need at least {D + FIT_TAIL + 1} table entries")
    ns = list(range(N - D, N + 1))
    rows = [
        [(-1) ** i * binom_basis(n, D - i, D - i) for i in range(D + 1)]
        for n in ns
    ]
    sol = solve_linear(rows, [values[n] for n in ns])
    for i, x in enumerate(sol):
        if x.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient {i} fitted as {x}")
    e = tuple(int(x) for x in sol)

    def poly(n):
        return sum((-1) ** i * e[i] * binom_basis(n, D - i, D - i) for i in range(D + 1))

    n0 = N - D
    while n0 > 0 and poly(n0 - 1) == values[n0 - 1]:
        n0 -= 1
    if (N - D) - n0 < FIT_TAIL:
        raise WindowTooShort(
            f"polynomial agrees only from n = {n0}; table stabilizes too late for N = {N}"
        )
    return e, n0


def fit_coefficients(table: HilbertTable, d: int) -> HilbertCoefficients:
    if len(table.values) < 2 * (d + 1) + 3:
        raise WindowTooShort(f"table length must be at least {2 * (d + 1) + 3}")
    e, postulation = fit_binomial(table.values, d)
    if e[0] < 1:
        raise InternalInconsistency("fitted leading coefficient below 1")
    return HilbertCoefficients(d, e, postulation)


def hilbert_poly_value(e, d: int, n: int) -> int:
    """Evaluate the alternating binomial-basis polynomial at n."""
    return sum((-1) ** i * e[i] * binom_basis(n, d - i, d - i) for i in range(len(e)))


def coefficients_for_ideal(I: MonomialIdeal, r: int | None = None, n_cap: int = DEFAULT_N_CAP):
    """Table plus fitted coefficients, enlarging N by doubling on WindowTooShort.

    The initial window is max(r + d + 3, 2(d+1)+2, 8) so that small reduction
    numbers fit on the first attempt.
    """
    d = I.ambient.dim
    N = max((r or 0) + d + 3, 2 * (d + 1) + 2, 8)
    while True:
        table = hs_table(I, N)
        try:
            return table, fit_coefficients(table, d)
        except WindowTooShort:
            if 2 * N > n_cap:
                raise
            N *= 2
