"""Hermite and Smith normal forms with unimodular transforms"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.polys.domains import ZZ

from .int_matrix import IntMatrix


Rows = List[List[int]]


def igcdex(a: int, b: int) -> Tuple[int, int, int]:
    """(x, y, g) with x*a + y*b == g == gcd(a, b) >= 0, as plain ints"""
    x, y, g = (int(v) for v in ZZ.gcdex(ZZ(a), ZZ(b)))
    if g < 0:
        return -x, -y, -g
    return x, y, g


def extended_gcd(values: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Gcd of a list of integers with Bezout coefficients

    Args:
        values: Integers (any sign, may be empty)

    Returns:
        (g, coefficients) with sum(c * v) == g and g >= 0
    """
    g = 0
    coefficients: List[int] = []
    for value in values:
        if g == 0 and value == 0:
            coefficients.append(0)
            continue
        x, y, new_g = igcdex(g, value)
        coefficients = [c * x for c in coefficients] + [y]
        g = new_g
    return int(g), tuple(int(c) for c in coefficients)


def _combine_rows(rows: Rows, p: int, r: int, x: int, y: int, u: int, v: int):
    """Replace (row_p, row_r) by (x*row_p + y*row_r, u*row_p + v*row_r)"""
    row_p, row_r = rows[p], rows[r]
    rows[p] = [x * a + y * b for a, b in zip(row_p, row_r)]
    rows[r] = [u * a + v * b for a, b in zip(row_p, row_r)]


def _combine_columns(rows: Rows, p: int, c: int, x: int, y: int, u: int, v: int):
    """Replace (col_p, col_c) by (x*col_p + y*col_c, u*col_p + v*col_c)"""
    for row in rows:
        a, b = row[p], row[c]
        row[p] = x * a + y * b
        row[c] = u * a + v * b


def _identity_rows(n: int) -> Rows:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hermite_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Row-style Hermite normal form

    Pivots are positive, entries above a pivot lie in [0, pivot) and zero rows
    come last.

    Args:
        matrix: Any integer matrix

    Returns:
        (H, U) with U unimodular and U @ matrix == H
    """
    m, n = matrix.rows, matrix.cols
    h = [list(row) for row in matrix.rows_list()]
    u = _identity_rows(m)
    pivot_row = 0

    for col in range(n):
        if pivot_row == m:
            break
        for r in range(pivot_row + 1, m):
            b = h[r][col]
            if b == 0:
                continue
            a = h[pivot_row][col]
            if a == 0:
                h[pivot_row], h[r] = h[r], h[pivot_row]
                u[pivot_row], u[r] = u[r], u[pivot_row]
                continue
            if b % a == 0:
                q = b // a
                _combine_rows(h, pivot_row, r, 1, 0, -q, 1)
                _combine_rows(u, pivot_row, r, 1, 0, -q, 1)
                continue
            x, y, g = igcdex(a, b)
            _combine_rows(h, pivot_row, r, x, y, -b // g, a // g)
            _combine_rows(u, pivot_row, r, x, y, -b // g, a // g)

        pivot = h[pivot_row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            h[pivot_row] = [-e for e in h[pivot_row]]
            u[pivot_row] = [-e for e in u[pivot_row]]
            pivot = -pivot
        for r in range(pivot_row):
            q = h[r][col] // pivot
            if q:
                h[r] = [a - q * b for a, b in zip(h[r], h[pivot_row])]
                u[r] = [a - q * b for a, b in zip(u[r], u[pivot_row])]
        pivot_row += 1

    return IntMatrix.from_rows(h, n), IntMatrix.from_rows(u, m)


@dataclass(frozen=True)
class SmithDecomposition:
    """P @ A @ Q == D with P, Q unimodular and D in Smith normal form"""

    P: IntMatrix
    D: IntMatrix
    Q: IntMatrix
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def zero_columns(self) -> int:
        """Number of trailing zero columns of D"""
        return self.D.cols - self.rank


def _smallest_entry(d: Rows, t: int) -> Tuple[int, int]:
    """Position of the nonzero entry of least absolute value in d[t:, t:]"""
    best = None
    for i in range(t, len(d)):
        for j in range(t, len(d[i])):
            value = d[i][j]
            if value and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
    return (best[1], best[2]) if best else (-1, -1)


def smith_normal_form(matrix: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form by exact elimination

    The diagonal is nonnegative, each nonzero entry divides the next one and
    zero columns sit on the right.

    Args:
        matrix: Any integer matrix

    Returns:
        SmithDecomposition of the matrix
    """
    m, n = matrix.rows, matrix.cols
    d = [list(row) for row in matrix.rows_list()]
    p = _identity_rows(m)
    q = _identity_rows(n)
    factors: List[int] = []

    for t in range(min(m, n)):
        i, j = _smallest_entry(d, t)
        if i < 0:
            break
        d[t], d[i] = d[i], d[t]
        p[t], p[i] = p[i], p[t]
        if j != t:
            _combine_columns(d, t, j, 0, 1, 1, 0)
            _combine_columns(q, t, j, 0, 1, 1, 0)

        while True:
            clean = True
            for r in range(t + 1, m):
                b = d[r][t]
                if b == 0:
                    continue
                a = d[t][t]
                if b % a == 0:
                    k = b // a
                    _combine_rows(d, t, r, 1, 0, -k, 1)
                    _combine_rows(p, t, r, 1, 0, -k, 1)
                else:
                    x, y, g = igcdex(a, b)
                    _combine_rows(d, t, r, x, y, -b // g, a // g)
                    _combine_rows(p, t, r, x, y, -b // g, a // g)
                    clean = False
            for c in range(t + 1, n):
                b = d[t][c]
                if b == 0:
                    continue
                a = d[t][t]
                if b % a == 0:
                    k = b // a
                    _combine_columns(d, t, c, 1, 0, -k, 1)
                    _combine_columns(q, t, c, 1, 0, -k, 1)
                else:
                    x, y, g = igcdex(a, b)
                    _combine_columns(d, t, c, x, y, -b // g, a // g)
                    _combine_columns(q, t, c, x, y, -b // g, a // g)
                    clean = False
            if not clean:
                continue
            if any(d[r][t] for r in range(t + 1, m)):
                continue

            # pivot must divide the whole remaining block
            a = d[t][t]
            offender = next(
                (r for r in range(t + 1, m) if any(d[r][c] % a for c in range(t + 1, n))),
                None,
            )
            if offender is None:
                break
            _combine_rows(d, t, offender, 1, 1, 0, 1)
            _combine_rows(p, t, offender, 1, 1, 0, 1)

        if d[t][t] < 0:
            d[t] = [-e for e in d[t]]
            p[t] = [-e for e in p[t]]
        factors.append(d[t][t])

    return SmithDecomposition(
        P=IntMatrix.from_rows(p, m),
        D=IntMatrix.from_rows(d, n),
        Q=IntMatrix.from_rows(q, n),
        invariant_factors=tuple(factors),
    )
