"""Brute-force reference implementations used to derive and check frozen test values.

Everything here enumerates directly from definitions and shares no code with
the package beyond reading a poset's elements and cover pairs.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def relation(elements, covers):
    """Strict order ``u > v`` as a set of pairs, by transitive closure of the covers."""
    gt = {(u, v) for u, v in covers}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(gt), list(gt)):
            if b == c and (a, d) not in gt:
                gt.add((a, d))
                changed = True
    return gt


def order_ideals(elements, covers):
    """All down-closed subsets, as frozensets."""
    gt = relation(elements, covers)
    out = []
    for r in range(len(elements) + 1):
        for sub in itertools.combinations(elements, r):
            s = set(sub)
            if all(v in s for (u, v) in gt if u in s):
                out.append(frozenset(s))
    return out


def linear_extensions(elements, covers) -> int:
    """Number of linear extensions, i.e. maximal chains of the ideal lattice."""
    gt = relation(elements, covers)
    below = {e: {v for (u, v) in gt if u == e} for e in elements}

    @lru_cache(maxsize=None)
    def count(done: frozenset) -> int:
        if len(done) == len(elements):
            return 1
        return sum(count(done | {e}) for e in elements if e not in done and below[e] <= done)

    return count(frozenset())


def monotone_maps(elements, covers, k: int, strict: bool = False) -> int:
    """Maps ``P -> {0..k}`` with ``x_u >= x_v`` when ``u`` covers ``v``.

    With ``strict``: ``x_u > x_v`` on covers and values in ``{1..k-1}``.
    """
    lo, hi = (1, k - 1) if strict else (0, k)
    if hi < lo:
        return 1 if not elements else 0
    total = 0
    for vals in itertools.product(range(lo, hi + 1), repeat=len(elements)):
        x = dict(zip(elements, vals))
        if strict:
            ok = all(x[u] > x[v] for u, v in covers)
        else:
            ok = all(x[u] >= x[v] for u, v in covers)
        total += ok
    return total


def hasse_paths(elements, covers) -> int:
    """Directed paths from the added top to the added bottom through the Hasse diagram."""
    maxima = [e for e in elements if not any(v == e for _, v in covers)]
    minima = [e for e in elements if not any(u == e for u, _ in covers)]
    lower = {e: [v for u, v in covers if u == e] for e in elements}

    @lru_cache(maxsize=None)
    def paths(e) -> int:
        return (1 if e in minima else 0) + sum(paths(v) for v in lower[e])

    if not elements:
        return 1
    return sum(paths(m) for m in maxima)


def multinomial_period(degrees, h: int, N: int) -> list[int]:
    """``prod (d m)! / m!^h`` for a single band per level (chains)."""
    out = []
    for m in range(N):
        num = 1
        for d in degrees:
            num *= factorial(d * m)
        out.append(num // factorial(m) ** h)
    return out


def sigma_displayed_sum(m: int) -> int:
    """Four-variable binomial sum for the fundamental period of the mirror of X."""
    return sum(comb(m, s) ** 2 * comb(m, v) ** 2 * comb(m, t) * comb(s, t) * comb(t, u) * comb(v, u)
               for s in range(m + 1) for t in range(m + 1) for u in range(m + 1) for v in range(m + 1))


def apply_theta_operator(rows, coeffs, N: int) -> list[Fraction]:
    """``sum_i x^i P_i(theta)`` applied to ``sum a_n x^n``, truncated to ``N`` terms."""
    out = [Fraction(0)] * N
    for i, row in enumerate(rows):
        for n in range(N - i):
            if n < len(coeffs):
                out[n + i] += sum(Fraction(c) * n ** j for j, c in enumerate(row)) * coeffs[n]
    return out


def lambert_invert(K, deg: int, dmax: int) -> list[Fraction]:
    """Solve ``K = deg + sum n_d d^3 q^d / (1 - q^d)`` for ``n_d`` by explicit expansion."""
    n = {}
    for m in range(1, dmax + 1):
        rest = Fraction(K[m])
        for d in range(1, m):
            if m % d == 0:
                rest -= n[d] * d ** 3
        n[m] = rest / m ** 3
    return [n[m] for m in range(1, dmax + 1)]
