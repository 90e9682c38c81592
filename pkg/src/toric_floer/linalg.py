"""Exact linear algebra over the rationals (row reduction, kernels, solves)."""

from __future__ import annotations

from fractions import Fraction


def _to_fractions(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns of a rational matrix."""
    m = _to_fractions(rows)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows, n_cols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Basis of ``{c : M c = 0}`` for a rational matrix given as rows.

    One basis vector per free column, with that free coordinate set to 1.
    ``n_cols`` is needed only when ``rows`` is empty.
    """
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols required for a matrix with no rows")
        return [tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    m, pivots = rref(rows)
    n = len(m[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][f]
        basis.append(tuple(vec))
    return basis


def solve(rows, rhs) -> tuple[Fraction, ...] | None:
    """One exact solution of ``M x = b`` (free variables set to 0), or None."""
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    n = len(m[0]) - 1
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = m[r][n]
    return tuple(x)


def det(rows) -> Fraction:
    """Determinant of a square rational matrix by elimination."""
    m = _to_fractions(rows)
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        result *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * result


def matvec(rows, vec) -> list:
    return [sum((a * b for a, b in zip(row, vec)), 0) for row in rows]
