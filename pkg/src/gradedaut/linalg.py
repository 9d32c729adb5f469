"""Exact integer and rational matrix routines.

Matrices are numpy arrays with dtype=object holding Python ints or
Fractions, so every operation here is exact.  Row vectors passed around
the rest of the package are plain tuples; the helpers at the top convert
between the two shapes.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np


def to_matrix(rows, width: int | None = None) -> np.ndarray:
    """Object-dtype 2d array from an iterable of rows.

    `width` disambiguates the column count when `rows` is empty.
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return rows.astype(object)
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, 0 if width is None else width), dtype=object)
    return np.array(rows, dtype=object)


def identity(n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((0, 0), dtype=object)
    return np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                    dtype=object)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(rows, v):
    """Apply a matrix given as a tuple of row tuples to a vector."""
    return tuple(dot(row, v) for row in rows)


def mat_mul(a, b):
    """Product of two matrices given as tuples of row tuples."""
    bt = list(zip(*b)) if b else []
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def exgcd(a: int, b: int):
    """Extended gcd: (g, x, y) with g = a*x + b*y and g >= 0."""
    x, y, u, v = 1, 0, 0, 1
    while b != 0:
        q, r = divmod(a, b)
        a, b = b, r
        x, u = u, x - q * u
        y, v = v, y - q * v
    if a < 0:
        a, x, y = -a, -x, -y
    return a, x, y


def _rowop(M, i, j, a, b, c, d):
    # rows i, j replaced by (a*ri + b*rj, c*ri + d*rj); caller keeps ad-bc = +-1
    ri, rj = M[i, :].copy(), M[j, :].copy()
    M[i, :] = a * ri + b * rj
    M[j, :] = c * ri + d * rj


def _colop(M, i, j, a, b, c, d):
    ci, cj = M[:, i].copy(), M[:, j].copy()
    M[:, i] = a * ci + b * cj
    M[:, j] = c * ci + d * cj


def smith_normal_form(A):
    """Smith normal form with transforms.

    Returns (D, U, V) with U @ A @ V = D, U and V unimodular, and D
    diagonal with nonnegative entries d_1 | d_2 | ... .
    """
    A = to_matrix(A)
    m, n = A.shape
    D = A.copy()
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i, j] != 0 and (piv is None or abs(D[i, j]) < abs(D[piv[0], piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != t:
            _rowop(D, t, piv[0], 0, 1, 1, 0)
            _rowop(U, t, piv[0], 0, 1, 1, 0)
        if piv[1] != t:
            _colop(D, t, piv[1], 0, 1, 1, 0)
            _colop(V, t, piv[1], 0, 1, 1, 0)
        while True:
            for i in range(t + 1, m):
                if D[i, t] == 0:
                    continue
                a, b = D[t, t], D[i, t]
                if b % a == 0:
                    q = b // a
                    _rowop(D, t, i, 1, 0, -q, 1)
                    _rowop(U, t, i, 1, 0, -q, 1)
                else:
                    g, x, y = exgcd(a, b)
                    _rowop(D, t, i, x, y, -(b // g), a // g)
                    _rowop(U, t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, n):
                if D[t, j] == 0:
                    continue
                a, b = D[t, t], D[t, j]
                if b % a == 0:
                    q = b // a
                    _colop(D, t, j, 1, 0, -q, 1)
                    _colop(V, t, j, 1, 0, -q, 1)
                else:
                    g, x, y = exgcd(a, b)
                    _colop(D, t, j, x, y, -(b // g), a // g)
                    _colop(V, t, j, x, y, -(b // g), a // g)
            if all(D[i, t] == 0 for i in range(t + 1, m)) and \
               all(D[t, j] == 0 for j in range(t + 1, n)):
                break
        # divisibility: d_t must divide everything below and to the right
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i, j] % D[t, t] != 0:
                    _rowop(D, t, i, 1, 1, 0, 1)
                    _rowop(U, t, i, 1, 1, 0, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]
        t += 1
    return D, U, V


def det(A) -> int:
    """Determinant of an integer matrix, by fraction-free elimination."""
    A = to_matrix(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return 1
    M = [[int(x) for x in row] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def rref(M):
    """Reduced row echelon form over the rationals.

    Returns (rows, pivot_columns) where rows is a list of lists of
    Fractions.
    """
    R = [[Fraction(x) for x in row] for row in M]
    nrows = len(R)
    ncols = len(R[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if R[i][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = Fraction(1) / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return R, pivots


def rank(M) -> int:
    M = [list(r) for r in M]
    if not M:
        return 0
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None):
    """Basis of {x : M x = 0} over the rationals, as tuples of Fractions.

    One basis vector per free column, in free-column order; the result is
    in the echelon shape induced by rref.
    """
    M = [list(r) for r in M]
    if not M:
        if ncols is None:
            raise ValueError("nullspace of an empty system needs ncols")
        return [tuple(Fraction(int(i == j)) for j in range(ncols))
                for i in range(ncols)]
    R, pivots = rref(M)
    ncols = len(R[0])
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(tuple(v))
    return basis


def solve(M, b):
    """One rational solution of M x = b, or None if inconsistent.

    Free variables are set to zero.
    """
    M = [list(r) for r in M]
    if not M:
        return None
    aug = [list(row) + [bv] for row, bv in zip(M, b)]
    R, pivots = rref(aug)
    ncols = len(M[0])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = R[r][-1]
    return tuple(x)


def unimodular_inverse(A):
    """Integer inverse of an integer matrix with determinant +-1."""
    A = to_matrix(A)
    n = A.shape[0]
    if n == 0:
        return identity(0)
    aug = [[int(A[i, j]) for j in range(n)] + [int(i == j) for j in range(n)]
           for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [[R[i][n + j] for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return np.array([[int(x) for x in row] for row in inv], dtype=object)


def _primitive_ineq(coeffs, rhs):
    # joint primitive integer form of (coeffs, rhs), preserving direction
    parts = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    denom = 1
    for p in parts:
        denom = denom * p.denominator // gcd(denom, p.denominator)
    ints = [int(p * denom) for p in parts]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def feasible_point(ineqs, nvars: int):
    """A rational point satisfying every `sum(c*x) >= rhs`, or None.

    `ineqs` is an iterable of (coefficient tuple, rhs).  Elimination is
    exact Fourier-Motzkin over the rationals with per-level dedup; the
    point is recovered by back substitution.
    """
    cur = {_primitive_ineq(c, r) for c, r in ineqs}
    levels = []
    for v in reversed(range(nvars)):
        lower, upper, rest = [], [], set()
        for coeffs, rhs in cur:
            cv = coeffs[v]
            if cv > 0:
                lower.append((coeffs, rhs))
            elif cv < 0:
                upper.append((coeffs, rhs))
            else:
                rest.add((coeffs, rhs))
        levels.append((v, lower, upper))
        for cp, bp in lower:
            for cn, bn in upper:
                # positive combination cancelling variable v
                mp, mn = -cn[v], cp[v]
                coeffs = tuple(mp * a + mn * b for a, b in zip(cp, cn))
                rest.add(_primitive_ineq(coeffs, mp * bp + mn * bn))
        cur = {(c, r) for c, r in rest if any(c) or r > 0}
        if any(not any(c) and r > 0 for c, r in cur):
            return None
    if any(r > 0 for _, r in cur):
        return None
    x = [Fraction(0)] * nvars
    for v, lower, upper in reversed(levels):
        lo = hi = None
        for coeffs, rhs in lower:
            bound = Fraction(rhs - sum(c * x[j] for j, c in enumerate(coeffs) if j != v),
                             coeffs[v])
            lo = bound if lo is None else max(lo, bound)
        for coeffs, rhs in upper:
            bound = Fraction(rhs - sum(c * x[j] for j, c in enumerate(coeffs) if j != v),
                             coeffs[v])
            hi = bound if hi is None else min(hi, bound)
        if lo is None and hi is None:
            x[v] = Fraction(0)
        elif lo is None:
            x[v] = hi - 1
        elif hi is None:
            x[v] = lo + 1
        else:
            x[v] = (lo + hi) / 2
    return tuple(x)


def positive_functional(vectors, dim: int):
    """A rational phi with dot(phi, v) >= 1 for every v, or None.

    Existence for a finite set of integer vectors is equivalent to the
    cone condition that no nonnegative combination of the vectors except
    the trivial one vanishes.
    """
    vectors = list(vectors)
    if any(not any(v) for v in vectors):
        return None
    if dim == 0:
        return ()
    return feasible_point([(tuple(v), 1) for v in vectors], dim)
