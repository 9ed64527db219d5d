"""Exact linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Everything here is
small (tens of rows), so plain Gaussian elimination is fast enough and keeps
the results exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Copy ``rows`` into a fresh Fraction matrix.

    ``ncols`` is needed for matrices with zero rows, whose width can't be
    inferred.
    """
    out = [[Fraction(x) for x in row] for row in rows]
    if ncols is not None:
        for row in out:
            if len(row) != ncols:
                raise ValueError(f"expected {ncols} columns, got {len(row)}")
    return out


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a: Matrix, b: Matrix, ncols: int | None = None) -> Matrix:
    """Product ``a @ b``.

    ``ncols`` (the width of ``b``) is needed only when ``b`` has no rows.
    """
    if ncols is None:
        ncols = len(b[0]) if b else 0
    inner = len(b)
    out = zeros(len(a), ncols)
    for i, row in enumerate(a):
        orow = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        orow[j] += x * bk[j]
    return out


def transpose(a: Matrix, ncols: int | None = None) -> Matrix:
    """Transpose; ``ncols`` is the width of ``a`` when ``a`` has no rows."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    return [[a[i][j] for i in range(len(a))] for j in range(ncols)]


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(a: Matrix, ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [row[:] for row in a]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(a: Matrix, ncols: int | None = None) -> int:
    return len(rref(a, ncols)[1])


def nullspace(a: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : a x = 0}`` as a list of vectors of length ``ncols``."""
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def solve(a: Matrix, b: Sequence, ncols: int) -> list[Fraction] | None:
    """One solution of ``a x = b``, or None when the system is inconsistent."""
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def column_space_basis(a: Matrix, ncols: int) -> Matrix:
    """Independent columns of ``a`` (as a matrix whose columns span the image)."""
    _, pivots = rref(a, ncols)
    return [[row[c] for c in pivots] for row in a]


def complement_basis(sub: Matrix, dim: int) -> Matrix:
    """Columns extending the column space of ``sub`` (dim x k) to all of Q^dim.

    Returns a dim x (dim - rank) matrix whose columns are standard basis
    vectors not in the span.
    """
    k = len(sub[0]) if sub else 0
    chosen = [[sub[i][j] for i in range(dim)] for j in range(k)]
    extra = []
    for i in range(dim):
        e = [Fraction(int(j == i)) for j in range(dim)]
        if rank(chosen + [e], dim) > rank(chosen, dim):
            chosen.append(e)
            extra.append(e)
    return transpose(extra, dim) if extra else zeros(dim, 0)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red[:n]]


def solve_columns(basis: Matrix, target: Matrix, dim: int) -> Matrix:
    """Coordinates ``X`` with ``basis @ X == target``; ``basis`` has independent columns.

    Raises ValueError when some column of ``target`` is outside the span.
    """
    k = len(basis[0]) if basis else 0
    ncols = len(target[0]) if target else 0
    out = zeros(k, ncols)
    for c in range(ncols):
        x = solve(basis, [target[i][c] for i in range(dim)], k)
        if x is None:
            raise ValueError("column outside the span")
        for i in range(k):
            out[i][c] = x[i]
    return out
