"""Ambient monomial algebras: polynomial exponent orthants and positively graded affine semigroups.

Monomials are exponent vectors (integer tuples).  A polynomial ambient in d
variables has all of N^d as monomials, graded by coordinate sum.  A semigroup
ambient consists of the non-negative integer combinations of its generators,
graded by the first coordinate; every generator must have a strictly positive
first coordinate, which keeps all enumeration loops finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ArityMismatch
from .exact import integer_rank

POLYNOMIAL = "polynomial"
SEMIGROUP = "semigroup"


@lru_cache(maxsize=None)
def _semigroup_elements(gens: tuple, bound: int) -> frozenset:
    """All combinations of gens whose first coordinate is <= bound."""
    zero = (0,) * len(gens[0])
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if w[0] <= bound and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def _semigroup_contains(gens: tuple, v: tuple) -> bool:
    if any(x < 0 for x in v):
        return False
    if all(x == 0 for x in v):
        return True
    # round the bound up to a power of two so repeated queries share one BFS
    bound = 1
    while bound < v[0]:
        bound *= 2
    return v in _semigroup_elements(gens, bound)


def _orthant_points(d: int, bound: int):
    if d == 1:
        for x in range(bound + 1):
            yield (x,)
        return
    for x in range(bound + 1):
        for rest in _orthant_points(d - 1, bound - x):
            yield (x,) + rest


@dataclass(frozen=True)
class AmbientAlgebra:
    """Exponent world of the coefficient ring, with exact membership and bounded enumeration.

    ``cm_flag`` is an input assertion (the local ring is Cohen-Macaulay);
    it is recorded, never verified.
    """

    kind: str
    arity: int
    generators: tuple | None
    dim: int
    cm_flag: bool

    @staticmethod
    def polynomial(d: int) -> "AmbientAlgebra":
        if d < 2:
            raise ValueError("polynomial ambient requires dimension >= 2")
        return AmbientAlgebra(POLYNOMIAL, d, None, d, True)

    @staticmethod
    def semigroup(generators, cm_flag: bool) -> "AmbientAlgebra":
        gens = tuple(sorted({tuple(int(x) for x in g) for g in generators}))
        if not gens:
            raise ValueError("semigroup ambient requires at least one generator")
        arity = len(gens[0])
        for g in gens:
            if len(g) != arity:
                raise ArityMismatch(f"generator {g} has arity {len(g)}, expected {arity}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative entry")
            if g[0] <= 0:
                raise ValueError(f"generator {g} must have a positive first coordinate")
        return AmbientAlgebra(SEMIGROUP, arity, gens, integer_rank(gens), cm_flag)

    def zero(self) -> tuple:
        return (0,) * self.arity

    def grade(self, v) -> int:
        return sum(v) if self.kind == POLYNOMIAL else v[0]

    def generator_max_grade(self) -> int:
        if self.kind == POLYNOMIAL:
            return 1
        return max(g[0] for g in self.generators)

    def contains(self, v) -> bool:
        """Exact membership of an integer vector in the monomial set."""
        v = tuple(v)
        if len(v) != self.arity:
            raise ArityMismatch(f"vector {v} has arity {len(v)}, expected {self.arity}")
        if self.kind == POLYNOMIAL:
            return all(x >= 0 for x in v)
        return _semigroup_contains(self.generators, v)

    def enumerate_up_to(self, grade_bound: int) -> frozenset:
        """All monomials of grade <= grade_bound (finite by positive grading)."""
        if grade_bound < 0:
            raise ValueError("grade bound must be non-negative")
        if self.kind == POLYNOMIAL:
            return frozenset(_orthant_points(self.arity, grade_bound))
        return _semigroup_elements(self.generators, grade_bound)

    def monomial_generators(self) -> tuple:
        """Exponents generating the maximal monomial ideal."""
        if self.kind == POLYNOMIAL:
            return tuple(
                tuple(1 if j == i else 0 for j in range(self.arity))
                for i in range(self.arity)
            )
        return self.generators
