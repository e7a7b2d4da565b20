"""Exact dense linear algebra over Q(zeta_e).

Matrices are lists of rows of :class:`Cyclo`.  Matrices whose entries are all
rational take a fraction-free integer elimination path, which is much faster
than generic field arithmetic.  Pivoting is deterministic: leftmost nonzero
column, lowest row index.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclotomic import ONE, ZERO, Cyclo


def zeros(m, n):
    return [[ZERO] * n for _ in range(m)]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def as_matrix(rows):
    return [[Cyclo.coerce(x) for x in row] for row in rows]


def matmul(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    Bt = list(zip(*B))
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([_dot(nz, Bt[j]) for j in range(n)])
    return out


def _dot(nz, col):
    s = ZERO
    for k, a in nz:
        b = col[k]
        if b:
            s = s + a * b
    return s


def matvec(A, v):
    out = []
    for row in A:
        s = ZERO
        for a, x in zip(row, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A, c):
    return [[a * c for a in row] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_pow(A, k):
    if k < 0:
        return mat_pow(inverse(A), -k)
    out = identity(len(A))
    base = A
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def equal(A, B):
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_identity(A):
    return equal(A, identity(len(A)))


def vstack(*blocks):
    out = []
    for b in blocks:
        out.extend(list(row) for row in b)
    return out


def hstack(*blocks):
    return [sum((list(b[i]) for b in blocks), []) for i in range(len(blocks[0]))]


def _all_rational(A):
    return all(x.conductor == 1 for row in A for x in row)


def _rref_rational(A):
    n = len(A[0]) if A else 0
    rows = []
    for row in A:
        den = 1
        for x in row:
            den = math.lcm(den, x.den)
        rows.append([x.num[0] * (den // x.den) for x in row])
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(len(rows)):
            if i != r:
                b = rows[i][col]
                if b:
                    row = rows[i]
                    new = [p * x - b * y for x, y in zip(row, prow)]
                    g = 0
                    for x in new:
                        if x:
                            g = math.gcd(g, x)
                            if g == 1:
                                break
                    if g > 1:
                        new = [x // g for x in new]
                    rows[i] = new
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            p = row[pivots[i]]
            out.append([Cyclo.rational(Fraction(x, p)) for x in row])
        else:
            out.append([ZERO] * n)
    return out, pivots


def _rref_generic(A):
    rows = [list(row) for row in A]
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv if x else x for x in rows[r]]
        prow = rows[r]
        nz = [(j, y) for j, y in enumerate(prow) if y]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                row = rows[i]
                for j, y in nz:
                    row[j] = row[j] - c * y
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(A):
    """Reduced row echelon form and pivot columns."""
    A = [list(row) for row in A]
    if not A or not A[0]:
        return A, []
    if _all_rational(A):
        return _rref_rational(A)
    return _rref_generic(A)


def rank(A):
    return len(rref(A)[1])


def nullspace(A, ncols=None):
    """Basis (list of vectors) of {x : A x = 0}."""
    if not A:
        return [[ONE if i == j else ZERO for i in range(ncols)] for j in range(ncols or 0)]
    n = len(A[0])
    R, pivots = rref(A)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


def solve(A, b):
    """One solution x of A x = b, or None when the system is inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [ZERO] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def inverse(A):
    n = len(A)
    R, pivots = rref(hstack(A, identity(n)))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


def column_space_basis(vectors):
    """Indices of a maximal independent subfamily (greedy, in order)."""
    if not vectors:
        return []
    M = transpose(vectors)
    return rref(M)[1]


def format_matrix(A):
    return "\n".join(" ".join(str(x) for x in row) for row in A)
