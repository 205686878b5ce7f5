"""Small exact linear algebra over Z and Q."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = ["det_int", "solve_exact"]


def det_int(M) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    A = [[int(x) for x in row] for row in np.asarray(M)]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def solve_exact(B, v) -> list[Fraction]:
    """x with B @ x = v for a full-column-rank integer matrix B (exact).

    Raises ValueError if v is not in the column span.
    """
    B = np.asarray(B)
    rows, cols = B.shape
    A = [[Fraction(int(B[i, j])) for j in range(cols)] + [Fraction(int(v[i]))] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            raise ValueError("columns are linearly dependent")
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        piv_cols.append(c)
        r += 1
    if any(A[i][cols] != 0 for i in range(r, rows)):
        raise ValueError("vector is not in the column span")
    return [A[i][cols] for i in range(cols)]
