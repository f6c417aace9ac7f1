"""Small exact linear algebra over Q: ranks, products, inverses.

Matrices are lists of row lists with int or Fraction entries; integer
entries stay plain ints so the common all-integer case runs at native int
speed.  Ranks go through fraction-free Bareiss elimination on integer-scaled
rows, so no intermediate value is ever approximate.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Union

Entry = Union[int, Fraction]
Matrix = list[list[Entry]]


def _norm_entry(c) -> Entry:
    if isinstance(c, int):
        return c
    f = Fraction(c)
    return int(f) if f.denominator == 1 else f


def mat_from_rows(rows, nrows: int, ncols: int) -> Matrix:
    m = [[_norm_entry(c) for c in row] for row in rows]
    if len(m) != nrows or any(len(row) != ncols for row in m):
        raise ValueError(f"expected shape {nrows}x{ncols}")
    return m


def zero_matrix(nrows: int, ncols: int) -> Matrix:
    return [[0] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions differ")
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zero_matrix(n, m)
    for i in range(n):
        row = a[i]
        for p in range(k):
            c = row[p]
            if c == 0:
                continue
            brow = b[p]
            orow = out[i]
            for j in range(m):
                orow[j] += c * brow[j]
    return out


def mat_rank(a: Matrix) -> int:
    """Rank by Bareiss fraction-free elimination after integer row scaling."""
    if not a or not a[0]:
        return 0
    rows: list[list[int]] = []
    for row in a:
        if all(isinstance(c, int) for c in row):
            rows.append(list(row))
            continue
        mult = 1
        for c in row:
            if not isinstance(c, int):
                mult = lcm(mult, c.denominator)
        rows.append([int(c * mult) for c in row])
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if rows[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, nrows):
            row_r = rows[r]
            lead = row_r[col]
            for j in range(col, ncols):
                row_r[j] = (piv * row_r[j] - lead * rows[rank][j]) // prev
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises ValueError when singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse needs a square matrix")
    work = [
        [Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a)
    ]
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        piv = work[col][col]
        work[col] = [c / piv for c in work[col]]
        for r in range(n):
            if r == col:
                continue
            lead = work[r][col]
            if lead:
                work[r] = [c - lead * p for c, p in zip(work[r], work[col])]
    return [[_norm_entry(c) for c in row[n:]] for row in work]


def random_invertible(rng, n: int, spread: int = 2) -> Matrix:
    """Unimodular-by-construction: unit lower times unit upper triangular."""
    lower = identity(n)
    upper = identity(n)
    for i in range(n):
        for j in range(i):
            lower[i][j] = rng.randint(-spread, spread)
            upper[j][i] = rng.randint(-spread, spread)
    return mat_mul(lower, upper)
