"""Exact integer and rational matrix kernels.

Everything here is deterministic and float-free: determinants via the
fraction-free Bareiss scheme, linear solves and symmetric signature via
rational elimination.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = tuple[tuple[int, ...], ...]


def identity_int(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul_int(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimension mismatch")
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_vec_int(a: IntMatrix, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def det_int(matrix) -> int:
    """Determinant of an integer matrix (Bareiss, exact)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_exact(matrix, rhs) -> tuple[Fraction, ...]:
    """Solve M x = rhs over the rationals; M must be square and invertible."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return tuple(a[i][n] for i in range(n))


def signature_exact(matrix) -> int:
    """Signature of a symmetric matrix by rational congruence diagonalization.

    Degenerate directions contribute zero; no tolerances are involved.
    """
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("signature needs a symmetric matrix")
    sig = 0
    i = 0
    while i < n:
        if a[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                _swap_symmetric(a, i, swap)
            else:
                partner = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if partner is None:
                    i += 1  # zero row: rank-degenerate direction
                    continue
                _add_symmetric(a, i, partner)
        pivot = a[i][i]
        sig += 1 if pivot > 0 else -1
        factors = [a[j][i] / pivot for j in range(i + 1, n)]
        for j in range(i + 1, n):
            if factors[j - i - 1]:
                f = factors[j - i - 1]
                for k in range(n):
                    a[j][k] -= f * a[i][k]
        for j in range(i + 1, n):
            if factors[j - i - 1]:
                f = factors[j - i - 1]
                for k in range(n):
                    a[k][j] -= f * a[k][i]
        i += 1
    return sig


def _swap_symmetric(a, i, j):
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_symmetric(a, i, j):
    for k in range(len(a)):
        a[i][k] += a[j][k]
    for row in a:
        row[i] += row[j]
