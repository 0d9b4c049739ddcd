"""Exact integer and rational linear algebra helpers."""

from __future__ import annotations

from fractions import Fraction


def integer_rank(rows) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    The division by the previous pivot is exact: every intermediate entry
    is a minor of the original matrix.
    """
    mat = [list(map(int, r)) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    denom = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(rank + 1, len(mat)):
            for j in range(col + 1, ncols):
                mat[i][j] = (mat[i][j] * mat[rank][col] - mat[i][col] * mat[rank][j]) // denom
            mat[i][col] = 0
        denom = mat[rank][col]
        rank += 1
        if rank == len(mat):
            break
    return rank


def solve_linear(matrix, rhs) -> list[Fraction]:
    """Solve the square system A x = b over exact rationals (Gauss-Jordan).

    Raises ValueError on a singular matrix.
    """
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        pivval = aug[col][col]
        aug[col] = [v / pivval for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def frac_str(x: Fraction) -> str:
    """Canonical "p/q" rendering; integral values print without a denominator."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
