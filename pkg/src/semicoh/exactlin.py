"""Exact integer linear algebra.

Vectors are tuples of Python ints and matrices are lists of row tuples, so
every entry is an unbounded integer.  Nothing here touches fixed-width
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import DimMismatch, ZeroVector

IntVector = tuple
IntMatrix = list


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return [tuple(int(x) for x in r) for r in rows]


def identity(n: int) -> IntMatrix:
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


def zeros(m: int, n: int) -> IntMatrix:
    return [tuple(0 for _ in range(n)) for _ in range(m)]


def transpose(M: IntMatrix, ncols: Optional[int] = None) -> IntMatrix:
    if not M:
        return [() for _ in range(ncols or 0)]
    return [tuple(col) for col in zip(*M)]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise DimMismatch(f"length {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if not A:
        return []
    cols = transpose(B, ncols=len(B[0]) if B else 0)
    if len(A[0]) != len(B):
        raise DimMismatch(f"{len(A[0])} columns vs {len(B)} rows")
    return [tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A]


def vecmat(v: Sequence, M: IntMatrix) -> tuple:
    """Row vector times matrix."""
    if len(v) != len(M):
        raise DimMismatch(f"vector of length {len(v)} vs {len(M)} rows")
    if not M:
        return ()
    n = len(M[0])
    return tuple(sum(v[i] * M[i][j] for i in range(len(M))) for j in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def primitive(v: Sequence[int]) -> IntVector:
    """Divide an integer vector by the gcd of its entries.

    Raises:
        ZeroVector: if every entry is zero.
    """
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ZeroVector("cannot primitivize the zero vector")
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence) -> IntVector:
    """Scale a rational vector by a positive number to a primitive integer vector."""
    den = 1
    for x in v:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(Fraction(x) * den) for x in v])


# --------------------------------------------------------------------------
# normal forms


def smith_normal_form(M: IntMatrix, ncols: Optional[int] = None):
    """Smith normal form with transforms.

    Returns ``(S, U, V)`` with ``U @ M @ V == S``, ``U`` and ``V`` unimodular
    and ``S`` diagonal with a nonnegative divisibility chain.  Pivots are
    chosen by smallest absolute value.
    """
    m = len(M)
    n = len(M[0]) if M else (ncols or 0)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < abs(best[2])):
                    best = ("r", i, A[i][t])
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < abs(best[2])):
                    best = ("c", j, A[t][j])
            if best is not None:
                if best[0] == "r":
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best[1])
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return ([tuple(r) for r in A], [tuple(r) for r in U], [tuple(r) for r in V])


def invariant_factors(M: IntMatrix) -> list:
    S, _, _ = smith_normal_form(M)
    return [S[i][i] for i in range(min(len(S), len(S[0]) if S else 0)) if S[i][i]]


def hermite_normal_form(M: IntMatrix, ncols: Optional[int] = None):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U @ M == H`` and ``U`` unimodular.  ``H`` has the
    same shape as ``M``; its nonzero rows come first, form an echelon basis of
    the row lattice, have positive pivots, and entries above each pivot are
    reduced into ``[0, pivot)``.  Zero rows are kept at the bottom.
    """
    m = len(M)
    n = len(M[0]) if M else (ncols or 0)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(m)]

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def add_row(dst, src, q):
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            swap(r, i0)
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    add_row(i, r, -(A[i][c] // A[r][c]))
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                add_row(i, r, -q)
        r += 1
    return [tuple(x) for x in A], [tuple(x) for x in U]


def lattice_basis(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Nonzero rows of the Hermite normal form: a canonical Z-basis of the row lattice."""
    if not rows:
        return []
    H, _ = hermite_normal_form(as_matrix(rows), ncols)
    return [r for r in H if any(r)]


def lattice_solve(B: IntMatrix, t: Sequence[int]) -> Optional[IntVector]:
    """Find an integer ``x`` with ``x @ B == t``, or return None if none exists.

    Raises:
        DimMismatch: if ``t`` does not have one entry per column of ``B``.
    """
    t = tuple(int(x) for x in t)
    if not B:
        if any(t):
            return None
        return ()
    n = len(B[0])
    if len(t) != n:
        raise DimMismatch(f"target has length {len(t)}, matrix has {n} columns")
    H, U = hermite_normal_form(as_matrix(B))
    rem = list(t)
    y = [0] * len(H)
    for i, row in enumerate(H):
        c = next((j for j, v in enumerate(row) if v), None)
        if c is None:
            break
        if rem[c] % row[c]:
            return None
        y[i] = rem[c] // row[c]
        rem = [a - y[i] * b for a, b in zip(rem, row)]
    if any(rem):
        return None
    x = vecmat(y, U)
    assert vecmat(x, B) == t
    return x


# --------------------------------------------------------------------------
# ranks, kernels, determinants


def rank(M: IntMatrix) -> int:
    """Rank over the rationals, read off the Smith normal form."""
    if not M or not M[0]:
        return 0
    return len(invariant_factors(M))


def rank_mod_p(M: IntMatrix, p: int) -> int:
    """Rank over the prime field F_p by Gaussian elimination mod p."""
    A = [[x % p for x in r] for r in M]
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return r


def rank_bareiss(M: IntMatrix) -> int:
    """Rank over the rationals by fraction-free Gaussian elimination."""
    A = [list(r) for r in M]
    if not A or not A[0]:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            A[i] = [(A[r][c] * A[i][j] - A[i][c] * A[r][j]) // prev for j in range(n)]
        prev = A[r][c]
        r += 1
        if r == m:
            break
    return r


def det(M: IntMatrix) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def kernel_and_complement(M: IntMatrix, n: int):
    """Split ``Z^n`` along the kernel of ``M`` (acting on column vectors).

    Returns ``(complement, kernel)`` as lists of row vectors that together
    form a unimodular basis of ``Z^n``; ``kernel`` is a basis of the
    saturated lattice ``{x : M x = 0}``.
    """
    if not M:
        return [], identity(n)
    S, _, V = smith_normal_form(as_matrix(M))
    rk = sum(1 for i in range(min(len(S), n)) if S[i][i])
    cols = transpose(V)
    return list(cols[:rk]), list(cols[rk:])


def solve_rational(A: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Solve the square system ``A x = b`` over the rationals; None if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return tuple(M[i][n] for i in range(n))


def inverse_rational(A: IntMatrix) -> list:
    """Inverse of a square matrix over the rationals (rows of Fractions)."""
    n = len(A)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = solve_rational(A, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    return [tuple(cols[j][i] for j in range(n)) for i in range(n)]


def as_int_if_integral(v: Sequence) -> tuple:
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in v)
