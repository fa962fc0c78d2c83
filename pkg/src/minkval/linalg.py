"""Exact linear algebra over the rationals and integers.

Vectors are plain tuples of Fraction (or int), matrices are tuples of row
tuples.  Everything here is exact; nothing ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))


def vec_add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


def vec_neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def is_zero_vec(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def as_fractions(a: Sequence) -> Vec:
    return tuple(Fraction(x) for x in a)


def mat_apply(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(dot(row, x) for row in A)


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def mat_transpose(A: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*A))


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def det(A: Sequence[Sequence]) -> Fraction:
    """Determinant by fraction Gaussian elimination (small matrices)."""
    n = len(A)
    m = [list(map(Fraction, row)) for row in A]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] / p
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return sign * result


def mat_inverse(A: Sequence[Sequence]) -> Matrix:
    """Exact inverse by Gauss-Jordan; raises ValueError on singular input."""
    n = len(A)
    m = [list(map(Fraction, row)) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def solve(A: Sequence[Sequence], b: Sequence) -> Vec:
    """Solve the square system A x = b exactly."""
    return mat_apply(mat_inverse(A), b)


def minor_det_int(rows: Sequence[IntVec], cols: Sequence[int]) -> int:
    """Determinant of the integer submatrix rows x cols (Laplace, k <= 4)."""
    k = len(rows)
    if k == 1:
        return rows[0][cols[0]]
    if k == 2:
        a, b = rows
        return a[cols[0]] * b[cols[1]] - a[cols[1]] * b[cols[0]]
    if k == 3:
        r0, r1, r2 = rows
        c0, c1, c2 = cols
        return (
            r0[c0] * (r1[c1] * r2[c2] - r1[c2] * r2[c1])
            - r0[c1] * (r1[c0] * r2[c2] - r1[c2] * r2[c0])
            + r0[c2] * (r1[c0] * r2[c1] - r1[c1] * r2[c0])
        )
    total = 0
    sign = 1
    for i, c in enumerate(cols):
        sub = [cols[j] for j in range(k) if j != i]
        total += sign * rows[0][c] * minor_det_int(rows[1:], sub)
        sign = -sign
    return total


def cross_general(vectors: Sequence[IntVec]) -> IntVec:
    """Generalized cross product of d-1 integer vectors in Z^d.

    The result is orthogonal to all inputs; its Euclidean length equals
    (d-1)! times the (d-1)-volume of the simplex the vectors span.
    """
    d = len(vectors[0])
    if len(vectors) != d - 1:
        raise ValueError("need d-1 vectors in dimension d")
    out = []
    sign = 1
    for i in range(d):
        cols = [c for c in range(d) if c != i]
        out.append(sign * minor_det_int(vectors, cols))
        sign = -sign
    return tuple(out)


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def clear_denominators(points: Sequence[Sequence[Fraction]]) -> tuple[int, list[IntVec]]:
    """Common positive scale s such that s * p is integral for every point."""
    s = 1
    for p in points:
        for x in p:
            s = lcm(s, x.denominator)
    scaled = [tuple(int(x * s) for x in p) for p in points]
    return s, scaled


class IntRowBasis:
    """Incremental integer row space with exact rank tracking.

    Rows are reduced fraction-free and kept primitive to bound growth.
    """

    def __init__(self):
        self.rows: list[IntVec] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence[int]) -> IntVec:
        w = list(v)
        for row, piv in zip(self.rows, self.pivots):
            if w[piv] != 0:
                a, b = row[piv], w[piv]
                w = [a * x - b * y for x, y in zip(w, row)]
        return primitive(w)

    def add(self, v: Sequence[int]) -> bool:
        """Add v to the span; returns True if it increased the rank."""
        w = self.reduce(v)
        if all(x == 0 for x in w):
            return False
        piv = next(i for i, x in enumerate(w) if x != 0)
        self.rows.append(tuple(w))
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def int_rank(vectors: Sequence[Sequence[int]]) -> int:
    basis = IntRowBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank
