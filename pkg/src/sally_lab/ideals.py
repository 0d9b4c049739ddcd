"""m-primary monomial ideals: minimal generators plus exact finite co-staircases.

The co-staircase (the monomials outside the ideal) is the primary
representation: its cardinality is the colength, its union rule gives
intersections, and its subset order gives containment.  Products stay
generator-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ambient import POLYNOMIAL, AmbientAlgebra
from .errors import (
    AmbientMismatch,
    InternalInconsistency,
    NotContained,
    NotInSemigroup,
    NotMPrimary,
)

GRADE_CAP = 512


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: AmbientAlgebra
    generators: tuple        # lex-sorted minimal antichain of exponent vectors
    costaircase: frozenset   # monomials of the ambient not in the ideal

    def max_generator_grade(self) -> int:
        return max(self.ambient.grade(g) for g in self.generators)


def normalize(ambient: AmbientAlgebra, raw_generators, cap: int = GRADE_CAP) -> MonomialIdeal:
    """Minimalize the generators and compute the exact finite co-staircase.

    Raises NotMPrimary when the complement is infinite (no staircase window
    closes below the grade cap, or a coordinate axis carries no pure power).
    """
    gens = {tuple(int(x) for x in g) for g in raw_generators}
    if not gens:
        raise NotMPrimary("the zero ideal has infinite colength")
    for g in gens:
        if not ambient.contains(g):
            raise NotInSemigroup(f"{g} is not a monomial of the ambient algebra")
    minimal = _minimal_antichain(ambient, gens)
    if ambient.kind == POLYNOMIAL:
        costair = _complement_box(ambient, minimal)
    else:
        costair = _complement_window(ambient, minimal, cap)
    return MonomialIdeal(ambient, tuple(sorted(minimal)), frozenset(costair))


def _minimal_antichain(ambient, gens):
    if ambient.kind == POLYNOMIAL:
        return [
            g
            for g in gens
            if not any(h != g and all(a >= b for a, b in zip(g, h)) for h in gens)
        ]
    out = []
    for g in gens:
        if not any(
            h != g and ambient.contains(tuple(a - b for a, b in zip(g, h)))
            for h in gens
        ):
            out.append(g)
    return out


def _complement_box(ambient, gens):
    d = ambient.arity
    if any(all(x == 0 for x in g) for g in gens):
        return set()
    pure = [None] * d
    for g in gens:
        support = [j for j, x in enumerate(g) if x > 0]
        if len(support) == 1:
            j = support[0]
            if pure[j] is None or g[j] < pure[j]:
                pure[j] = g[j]
    for j, p in enumerate(pure):
        if p is None:
            raise NotMPrimary(f"no pure power on axis {j}; colength is infinite")
    if d == 2:
        return _complement_columns(gens, pure[0])
    out = set()
    for v in _box_points(pure):
        if not any(all(a >= b for a, b in zip(v, g)) for g in gens):
            out.add(v)
    return out


def _complement_columns(gens, pure_x):
    # per-column minimal y-exponent; the pure y-power makes column 0 finite
    by_x = sorted(gens)
    out = set()
    idx = 0
    best = None
    for x in range(pure_x):
        while idx < len(by_x) and by_x[idx][0] <= x:
            y = by_x[idx][1]
            if best is None or y < best:
                best = y
            idx += 1
        for y in range(best):
            out.add((x, y))
    return out


def _box_points(bounds):
    if len(bounds) == 1:
        for x in range(bounds[0]):
            yield (x,)
        return
    for x in range(bounds[0]):
        for rest in _box_points(bounds[1:]):
            yield (x,) + rest


def _complement_window(ambient, gens, cap):
    # The window width must cover the semigroup generators as well as the
    # ideal generators: an element above the window splits off one semigroup
    # generator and lands above the bound, so ideal stability propagates.
    if any(all(x == 0 for x in g) for g in gens):
        return set()
    gens = tuple(gens)
    width = max(
        max(ambient.grade(g) for g in gens),
        ambient.generator_max_grade(),
        1,
    )
    bound = width
    while True:
        elements = ambient.enumerate_up_to(bound + width)
        window_clean = all(
            _generated_member(ambient, gens, v)
            for v in elements
            if bound < ambient.grade(v)
        )
        if window_clean:
            return {
                v
                for v in elements
                if ambient.grade(v) <= bound and not _generated_member(ambient, gens, v)
            }
        bound *= 2
        if bound > cap:
            raise NotMPrimary(f"staircase did not close below grade {cap}")


def _generated_member(ambient, gens, v):
    if ambient.kind == POLYNOMIAL:
        return any(all(a >= b for a, b in zip(v, g)) for g in gens)
    return any(
        ambient.contains(tuple(a - b for a, b in zip(v, g))) for g in gens
    )


def member(J: MonomialIdeal, v) -> bool:
    """Generator-based membership: some generator divides v inside the ambient."""
    return _generated_member(J.ambient, J.generators, tuple(v))


def colength(J: MonomialIdeal) -> int:
    return len(J.costaircase)


def _require_same_ambient(J1, J2):
    if J1.ambient != J2.ambient:
        raise AmbientMismatch("operands live in different ambient algebras")


def product(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    _require_same_ambient(J1, J2)
    sums = {
        tuple(a + b for a, b in zip(g, h))
        for g in J1.generators
        for h in J2.generators
    }
    return normalize(J1.ambient, sums)


@lru_cache(maxsize=256)
def power(J: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("exponent must be non-negative")
    if n == 0:
        return unit_ideal(J.ambient)
    if n == 1:
        return J
    return product(power(J, n - 1), J)


def unit_ideal(ambient: AmbientAlgebra) -> MonomialIdeal:
    return normalize(ambient, {ambient.zero()})


def maximal_ideal(ambient: AmbientAlgebra) -> MonomialIdeal:
    return normalize(ambient, ambient.monomial_generators())


def intersect(J1: MonomialIdeal, J2: MonomialIdeal) -> MonomialIdeal:
    """Intersection via the union of co-staircases.

    Generators are recovered as the minimal complement elements inside a
    window one semigroup-generator grade above the union.
    """
    _require_same_ambient(J1, J2)
    ambient = J1.ambient
    union = J1.costaircase | J2.costaircase
    if not union:
        return unit_ideal(ambient)
    bound = max(ambient.grade(v) for v in union) + ambient.generator_max_grade()
    steps = ambient.monomial_generators()
    minimal = []
    for v in ambient.enumerate_up_to(bound):
        if v in union:
            continue
        # minimal in the complement iff every one-generator step down that
        # stays in the ambient lands in the (downward closed) union
        is_min = True
        for g in steps:
            w = tuple(a - b for a, b in zip(v, g))
            if ambient.contains(w) and w not in union:
                is_min = False
                break
        if is_min:
            minimal.append(v)
    result = normalize(ambient, minimal)
    if result.costaircase != union:
        raise InternalInconsistency("complement-union reconstruction failed")
    return result


def equals(J1: MonomialIdeal, J2: MonomialIdeal) -> bool:
    _require_same_ambient(J1, J2)
    return J1.costaircase == J2.costaircase


def contains_ideal(J1: MonomialIdeal, J2: MonomialIdeal) -> bool:
    """Whether the second ideal is contained in the first."""
    _require_same_ambient(J1, J2)
    return J1.costaircase <= J2.costaircase


def quotient_length(J_big: MonomialIdeal, J_small: MonomialIdeal) -> int:
    """Length of J_big/J_small, requiring J_small to be contained in J_big."""
    if not contains_ideal(J_big, J_small):
        raise NotContained("second ideal is not contained in the first")
    return colength(J_small) - colength(J_big)
