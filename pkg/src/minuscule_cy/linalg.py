"""Exact linear algebra over the rationals (fraction-free elimination)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_echelon(rows) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix; returns (matrix, pivot columns)."""
    A = [list(r) for r in _integer_rows(rows)]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        for i in range(r + 1, nrows):
            a = A[i][c]
            Ai, Ar = A[i], A[r]
            for j in range(c + 1, ncols):
                Ai[j] = (piv * Ai[j] - a * Ar[j]) // prev
            Ai[c] = 0
        # rows above the current pivot band keep their content; columns c+1..
        # are now scaled consistently, which is what the exact division needs
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}`` with exact rational entries."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(rows[0])
    E, pivots = bareiss_echelon(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            s = sum((E[r][j] * v[j] for j in range(c + 1, n) if v[j]), Fraction(0))
            v[c] = -s / E[r][c]
        basis.append(v)
    return basis


def primitive_integer_vector(v) -> list[int]:
    """Scale a rational vector to coprime integers."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def rank(rows) -> int:
    if not rows:
        return 0
    return len(bareiss_echelon(rows)[1])


def solve(A, b) -> list[Fraction] | None:
    """One exact solution of ``A x = b`` or None."""
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    n = len(A[0])
    E, pivots = bareiss_echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        s = sum((E[r][j] * x[j] for j in range(c + 1, n) if x[j]), Fraction(0)) - E[r][n]
        x[c] = -s / E[r][c]
    return x


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def mat_inv(A):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return [row[n:] for row in M]


def det(A) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


SCREEN_PRIME = (1 << 61) - 1


def rank_mod_p(rows, p: int = SCREEN_PRIME) -> int | None:
    """Rank over ``F_p``, or None when some denominator vanishes mod ``p``."""
    A = []
    for row in rows:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator % p == 0:
                return None
            r.append(x.numerator * pow(x.denominator, -1, p) % p)
        A.append(r)
    ncols = len(A[0]) if A else 0
    rk = 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rk], A[piv] = A[piv], A[rk]
        inv = pow(A[rk][c], -1, p)
        pr = A[rk]
        for i in range(rk + 1, len(A)):
            f = A[i][c] * inv % p
            if f:
                Ai = A[i]
                for j in range(c, ncols):
                    Ai[j] = (Ai[j] - f * pr[j]) % p
        rk += 1
    return rk
