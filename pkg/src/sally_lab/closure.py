"""Integral closure of monomial ideals in polynomial ambient.

The closure is the set of lattice points of the exponent polyhedron
conv(generators) + R_{>=0}^d.  Membership of a point p is the feasibility of

    lambda >= 0,  sum lambda_i = 1,  sum lambda_i g_i <= p  (componentwise),

solved exactly over rationals.  The production path enumerates generator
subsets of size <= d+1 (a feasible system has a basic solution with that
support); an elimination-based full solver is kept as an independent
reference path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .ambient import POLYNOMIAL
from .errors import SemigroupAmbientUnsupported
from .exact import solve_linear
from .ideals import MonomialIdeal, equals, normalize


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generators) + non-negative orthant, queried pointwise."""

    generators: tuple
    dim: int

    def member(self, point) -> bool:
        return polyhedron_member(self.generators, tuple(point))

    def member_reference(self, point) -> bool:
        return polyhedron_member_reference(self.generators, tuple(point))


def polyhedron_member(gens, point) -> bool:
    """Membership via generator subsets of size <= d+1, solved exactly."""
    d = len(point)
    gens = list(gens)
    for g in gens:
        if all(a <= b for a, b in zip(g, point)):
            return True
    for m in range(2, min(len(gens), d + 1) + 1):
        for subset in itertools.combinations(gens, m):
            if _subset_feasible(subset, point):
                return True
    return False


def _subset_feasible(subset, point) -> bool:
    # vertex search: the feasible set is compact, so nonempty means some
    # choice of m-1 tight inequalities plus the simplex equality pins a point
    m = len(subset)
    d = len(point)
    cons = []
    for i in range(m):
        a = [0] * m
        a[i] = -1
        cons.append((a, 0))
    for c in range(d):
        cons.append(([subset[i][c] for i in range(m)], point[c]))
    for tight in itertools.combinations(range(len(cons)), m - 1):
        rows = [[1] * m] + [cons[t][0] for t in tight]
        rhs = [1] + [cons[t][1] for t in tight]
        try:
            lam = solve_linear(rows, rhs)
        except ValueError:
            continue
        if all(
            sum(a[i] * lam[i] for i in range(m)) <= b for a, b in cons
        ):
            return True
    return False


def polyhedron_member_reference(gens, point) -> bool:
    """Same membership decided by exact variable elimination (reference path)."""
    m = len(gens)
    d = len(point)
    # substitute the last weight: lambda_m = 1 - sum of the others
    last = gens[-1]
    cons = []
    for c in range(d):
        a = tuple(gens[i][c] - last[c] for i in range(m - 1))
        cons.append((a, point[c] - last[c]))
    for i in range(m - 1):
        a = tuple(-1 if j == i else 0 for j in range(m - 1))
        cons.append((a, 0))
    cons.append((tuple(1 for _ in range(m - 1)), 1))  # lambda_m >= 0
    cons = {_canonical_constraint(a, b) for a, b in cons}
    for var in range(m - 1):
        lows, highs, rest = [], [], []
        for a, b in cons:
            if a[var] > 0:
                highs.append((a, b))
            elif a[var] < 0:
                lows.append((a, b))
            else:
                rest.append((a, b))
        new = set(rest)
        for al, bl in lows:
            for ah, bh in highs:
                p = -al[var]
                q = ah[var]
                a = tuple(q * x + p * y for x, y in zip(al, ah))
                new.add(_canonical_constraint(a, q * bl + p * bh))
        cons = new
    for a, b in cons:
        if b < 0:
            return False
    return True


def _canonical_constraint(a, b):
    # all inputs and combinations stay integral, so the gcd divides b as well
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    g = gcd(g, abs(b))
    if g > 1:
        a = tuple(x // g for x in a)
        b = b // g
    return tuple(a), b


def newton_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Monomial ideal of all lattice points of the exponent polyhedron.

    Every minimal lattice point lies in the coordinate box spanned by the
    generator maxima, so scanning that box suffices.
    """
    if I.ambient.kind != POLYNOMIAL:
        raise SemigroupAmbientUnsupported("closure is defined for polynomial ambient only")
    gens = I.generators
    d = I.ambient.arity
    limits = [max(g[j] for g in gens) for j in range(d)]
    members = [
        p
        for p in itertools.product(*(range(m + 1) for m in limits))
        if polyhedron_member(gens, p)
    ]
    return normalize(I.ambient, members)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return equals(I, newton_closure(I))
