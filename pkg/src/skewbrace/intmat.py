"""Exact integer vectors and matrices for automorphisms of Z^n.

Row ``i`` of a matrix holds the coordinates of the image of the basis
vector ``x_{i+1}``, so a vector (row of coefficients) maps as ``v @ M``.
Python ints are unbounded, so nothing here can overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotUnimodular

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix must be square")
    return m


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def unit_vector(n: int, i: int) -> Vector:
    """Basis vector x_{i+1} (0-based ``i``)."""
    return tuple(int(j == i) for j in range(n))


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def vscale(k: int, a: Vector) -> Vector:
    return tuple(k * x for x in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def matrix_apply(m: Matrix, v: Vector) -> Vector:
    """Image of v = sum v_i x_i under the automorphism with matrix m."""
    n = len(m)
    return tuple(sum(v[i] * m[i][j] for i in range(n)) for j in range(n))


def determinant(m: Matrix) -> int:
    """Bareiss fraction-free elimination; exact for integers."""
    n = len(m)
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def inverse_unimodular(m: Matrix) -> Matrix:
    """Exact inverse via the adjugate; requires det = +-1."""
    n = len(m)
    det = determinant(m)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not +-1")
    if n == 1:
        return ((det,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(tuple(m[r][c] for c in range(n) if c != j) for r in range(n) if r != i)
            cof[i][j] = (-1) ** (i + j) * determinant(minor)
    return tuple(tuple(cof[j][i] * det for j in range(n)) for i in range(n))


def matrix_power(m: Matrix, k: int) -> Matrix:
    """m^k by repeated squaring; negative k uses the exact unimodular inverse."""
    if k < 0:
        m, k = inverse_unimodular(m), -k
    result = identity_matrix(len(m))
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def require_unimodular(m: Matrix) -> int:
    det = determinant(m)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not +-1")
    return det


def matrix_order(m: Matrix, limit: int = 64) -> int | None:
    """Multiplicative order if at most ``limit``, else None."""
    ident = identity_matrix(len(m))
    cur = m
    for k in range(1, limit + 1):
        if cur == ident:
            return k
        cur = matmul(cur, m)
    return None


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of a list of integer row vectors."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(a[0]) if a else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r
