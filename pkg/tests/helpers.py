"""Independent oracles and random-instance generators for the test suite.

Everything here recomputes from first principles (exhaustive search,
pointwise predicates) so results can be compared against the package's
production paths.
"""

from __future__ import annotations

import itertools

from sally_lab import AmbientAlgebra, member, newton_closure, normalize


def brute_semigroup_member(gens, v) -> bool:
    """Exhaustive search over generator multiplicities."""
    gens = [tuple(g) for g in gens]
    if any(x < 0 for x in v):
        return False
    bound = v[0]  # every generator contributes at least 1 to the first coordinate
    for combo in itertools.product(range(bound + 1), repeat=len(gens)):
        total = tuple(
            sum(c * g[j] for c, g in zip(combo, gens)) for j in range(len(v))
        )
        if total == tuple(v):
            return True
    return False


def complement_by_predicate(ambient, gens, grade_bound) -> frozenset:
    """Monomials of grade <= grade_bound outside the ideal, by direct dominance."""
    gens = [tuple(g) for g in gens]
    out = set()
    for v in ambient.enumerate_up_to(grade_bound):
        inside = any(
            ambient.contains(tuple(a - b for a, b in zip(v, g))) for g in gens
        )
        if not inside:
            out.add(v)
    return frozenset(out)


def colength_oracle(ambient, gens) -> int:
    """Complement count over a window provably past every staircase corner."""
    gens = [tuple(g) for g in gens]
    if ambient.kind == "polynomial":
        bound = sum(max(g[j] for g in gens) for j in range(ambient.arity))
    else:
        bound = 4 * max(g[0] for g in gens) + 4
    return len(complement_by_predicate(ambient, gens, bound))


def random_instance(rng, max_corner=5, max_extra=3):
    """Random m-primary two-variable ideal with its pure-power reduction.

    Interior generators are kept on or above the anti-diagonal so the
    pure-power pair is always a genuine reduction.
    """
    amb = AmbientAlgebra.polynomial(2)
    a = rng.randint(1, max_corner)
    b = rng.randint(1, max_corner)
    gens = {(a, 0), (0, b)}
    for _ in range(rng.randint(0, max_extra)):
        u = rng.randint(0, a)
        v = rng.randint(0, b)
        if u * b + v * a >= a * b:
            gens.add((u, v))
    I = normalize(amb, gens)
    Q = normalize(amb, [(a, 0), (0, b)])
    return I, Q


def random_closed_instance(rng, max_corner=5, max_extra=3):
    I, Q = random_instance(rng, max_corner, max_extra)
    return newton_closure(I), Q


def random_ideal_any(rng, d=2, max_exp=4, max_extra=3):
    """Random m-primary ideal in d variables without a reduction attached."""
    amb = AmbientAlgebra.polynomial(d)
    gens = set()
    for j in range(d):
        g = [0] * d
        g[j] = rng.randint(1, max_exp)
        gens.add(tuple(g))
    for _ in range(rng.randint(0, max_extra)):
        gens.add(tuple(rng.randint(0, max_exp) for _ in range(d)))
    gens.discard((0,) * d)
    return normalize(amb, gens)


def ideal_member_pointwise(J, v) -> bool:
    return member(J, v)
