"""Small exact linear algebra over Q and Z.

Matrices are tuples of row tuples.  Sizes here never exceed ~10, so plain
Gaussian elimination on Fractions is the right tool.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = tuple[tuple, ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vecmat(v, a: Matrix) -> tuple:
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def _echelon(a):
    """Row-reduce a copy of ``a``; return (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
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


def rank(a) -> int:
    if not a or not a[0]:
        return 0
    return len(_echelon(a)[1])


def inverse(a) -> Matrix:
    n = len(a)
    aug = [list(a[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    m, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in m)


def solve(a, b) -> tuple:
    """Solve ``a x = b`` for square nonsingular ``a``."""
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    m, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(m[i][n] for i in range(n))


def det(a) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def unimodular_complement(cols) -> Matrix | None:
    """Integer U with det U = +-1 and ``U @ [cols] == [I; 0]``.

    ``cols`` is a list of r integer vectors in Z^n (the columns of an n x r
    matrix A).  Returns None when no such U exists, i.e. when the columns do
    not span a saturated rank-r sublattice of Z^n.
    """
    r = len(cols)
    n = len(cols[0]) if cols else 0
    # rows of [A | I]
    rows = [[cols[j][i] for j in range(r)] + [1 if k == i else 0 for k in range(n)]
            for i in range(n)]
    for c in range(r):
        # Euclid on column c among rows c..n-1
        while True:
            nz = [i for i in range(c, n) if rows[i][c] != 0]
            if not nz:
                return None
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[c], rows[p] = rows[p], rows[c]
            done = True
            for i in range(c + 1, n):
                if rows[i][c]:
                    q = rows[i][c] // rows[c][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[c])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if abs(rows[c][c]) != 1:
            return None
        if rows[c][c] < 0:
            rows[c] = [-x for x in rows[c]]
    # clear above the diagonal
    for c in range(r - 1, -1, -1):
        for i in range(c):
            q = rows[i][c]
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(row[r:]) for row in rows)


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
