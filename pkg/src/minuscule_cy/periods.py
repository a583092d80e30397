"""Fundamental periods of the mirror families of complete intersections in
Hibi toric varieties, by flow counting and by the planar dual-graph formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .posets import BOTTOM, TOP, Poset, PosetError, layered_layout
from .series import RationalPowerSeries


def _degree_prefactor(degrees, h: int, m: int) -> Fraction:
    return Fraction(prod(factorial(d * m) for d in degrees), factorial(m) ** h)


def _check(P: Poset, degrees):
    hf = P.heights()
    if not hf.pure:
        raise PosetError("period formulas need a pure poset")
    if sum(degrees) != hf.h_P:
        raise ValueError(f"degrees must sum to h_P = {hf.h_P}")
    return hf


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def balanced_flow_count(P: Poset, m: int) -> int:
    """``sum over balanced flows of prod over bands of m! / prod n_e!``.

    Every band carries ``m`` labelled units.  A flow assigns ``n_e`` units to
    each edge, with inflow equal to outflow at every element of ``P``.  The
    count is a DP from ``1^`` downwards whose state is the amount of flow
    sitting at each vertex of the current level.
    """
    hf = P.heights()
    bp = P.bounded()
    levels: list[list[str]] = [[] for _ in range(hf.h_P + 1)]
    for v in bp.vertices:
        levels[bp.height[v]].append(v)
    fm = factorial(m)
    states = {(m,): 1}  # level h_P holds only 1^
    for k in range(hf.h_P, 0, -1):
        upper, lower = levels[k], levels[k - 1]
        pos = {v: i for i, v in enumerate(lower)}
        outs = [[pos[t] for t in bp.lower(v)] for v in upper]
        nxt: dict[tuple, int] = {}
        for state, w in states.items():
            partial = {(0,) * len(lower): w}
            for amount, targets in zip(state, outs):
                grown = {}
                for acc, wt in partial.items():
                    for split in _compositions(amount, len(targets)):
                        new = list(acc)
                        den = 1
                        for t, n in zip(targets, split):
                            new[t] += n
                            den *= factorial(n)
                        key = tuple(new)
                        grown[key] = grown.get(key, 0) + wt * Fraction(1, den)
                partial = grown
            for key, wt in partial.items():
                nxt[key] = nxt.get(key, 0) + wt * fm
        states = nxt
    total = states.get((m,), 0)
    assert Fraction(total).denominator == 1
    return int(total)


def period_flow(P: Poset, degrees, N: int) -> RationalPowerSeries:
    hf = _check(P, degrees)
    return RationalPowerSeries([_degree_prefactor(degrees, hf.h_P, m) * balanced_flow_count(P, m)
                                for m in range(N)])


# ----------------------------------------------------------------------------
# dual graph of the planar Hasse diagram
# ----------------------------------------------------------------------------


@dataclass
class DualGraphB:
    """Faces of the plane Hasse diagram of ``P^`` with ``1^`` and ``0^`` at +-i*infinity.

    ``left[e]`` and ``right[e]`` are the faces on either side of the downward
    edge ``e`` (indexed as in ``P.bounded().edges``).  The two outer faces
    ``b_L`` and ``b_R`` are separated by the line through infinity joining
    ``1^`` and ``0^``.
    """

    faces: list[int]
    left: list[int]
    right: list[int]
    b_L: int
    b_R: int
    edges: list[tuple[str, str]]

    @property
    def interior(self) -> list[int]:
        return [b for b in self.faces if b not in (self.b_L, self.b_R)]


def dual_graph(P: Poset) -> DualGraphB:
    hf = P.heights()
    if not hf.pure:
        raise PosetError("dual graph construction needs a pure poset")
    layout = layered_layout(P)
    bp = P.bounded()
    pos = {v: i for lev in layout for i, v in enumerate(lev)}
    bands: list[list[int]] = [[] for _ in range(hf.h_P + 1)]
    for i, (s, t) in enumerate(bp.edges):
        bands[bp.height[s]].append(i)
    for k in range(1, hf.h_P + 1):
        bands[k].sort(key=lambda i: (pos[bp.edges[i][0]], pos[bp.edges[i][1]]))
    parent: dict[tuple[int, int], tuple[int, int]] = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k in range(1, hf.h_P + 1):
        for g in range(len(bands[k]) + 1):
            parent[(k, g)] = (k, g)
    # across level j the region between vertices p and p+1 joins a gap of the
    # band above (edges ending at level j) and a gap of the band below
    for j in range(1, hf.h_P):
        width = len(layout[j])
        above, below = bands[j + 1], bands[j]
        for p in range(-1, width):
            ga = sum(1 for i in above if pos[bp.edges[i][1]] <= p)
            gb = sum(1 for i in below if pos[bp.edges[i][0]] <= p)
            union((j + 1, ga), (j, gb))
    roots = {}
    for key in parent:
        r = find(key)
        roots.setdefault(r, len(roots))
    face = {key: roots[find(key)] for key in parent}
    left = [0] * len(bp.edges)
    right = [0] * len(bp.edges)
    for k in range(1, hf.h_P + 1):
        for g, i in enumerate(bands[k]):
            left[i] = face[(k, g)]
            right[i] = face[(k, g + 1)]
    b_L = face[(1, 0)]
    b_R = face[(1, len(bands[1]))]
    if b_L == b_R:
        raise PosetError("outer faces coincide; layout is not plane")
    return DualGraphB(sorted(set(face.values())), left, right, b_L, b_R, list(bp.edges))


def _eliminate(factors, variables, fixed, m):
    """Sum over ``variables`` in ``0..m`` of the product of binomial factors.

    ``factors`` are ``(upper, lower)`` variable pairs contributing
    ``C(m_upper, m_lower)``; ``fixed`` maps some variables to constants.
    Variables are summed out one at a time (bucket elimination).
    """
    tables = []
    for up, lo in factors:
        scope = tuple(v for v in dict.fromkeys((up, lo)) if v not in fixed)
        tab = {}
        for vals in _grid(len(scope), m):
            env = dict(fixed)
            env.update(zip(scope, vals))
            tab[vals] = comb(env[up], env[lo]) if env[lo] <= env[up] else 0
        tables.append((scope, tab))
    remaining = list(variables)
    while remaining:
        def cost(v):
            sc = set()
            for scope, _ in tables:
                if v in scope:
                    sc |= set(scope)
            return len(sc)
        v = min(remaining, key=cost)
        remaining.remove(v)
        touching = [t for t in tables if v in t[0]]
        rest = [t for t in tables if v not in t[0]]
        scope = tuple(sorted({u for sc, _ in touching for u in sc} - {v}))
        new = {}
        for vals in _grid(len(scope), m):
            env = dict(zip(scope, vals))
            total = 0
            for x in range(m + 1):
                env[v] = x
                term = 1
                for sc, tab in touching:
                    term *= tab[tuple(env[u] for u in sc)]
                    if not term:
                        break
                total += term
            new[vals] = total
        tables = rest + [(scope, new)]
    out = 1
    for _, tab in tables:
        out *= tab[()]
    return out


@lru_cache(maxsize=None)
def _grid_cached(n: int, m: int):
    if n == 0:
        return [()]
    return [g + (x,) for g in _grid_cached(n - 1, m) for x in range(m + 1)]


def _grid(n, m):
    return _grid_cached(n, m)


def dual_binomial_sum(B: DualGraphB, m: int) -> int:
    factors = [(B.right[e], B.left[e]) for e in range(len(B.edges))]
    fixed = {B.b_L: 0, B.b_R: m}
    return _eliminate(factors, B.interior, fixed, m)


def period_binomial(P: Poset, degrees, N: int) -> RationalPowerSeries:
    hf = _check(P, degrees)
    B = dual_graph(P)
    return RationalPowerSeries([_degree_prefactor(degrees, hf.h_P, m) * dual_binomial_sum(B, m)
                                for m in range(N)])


def sigma_displayed_coefficient(m: int) -> int:
    """``sum C(m,s)^2 C(m,v)^2 C(m,t) C(s,t) C(t,u) C(v,u)`` over ``s, t, u, v``."""
    cm = [comb(m, k) for k in range(m + 1)]
    # g(t, v) = sum_u C(t,u) C(v,u);  h(t) = sum_s C(m,s)^2 C(s,t)
    h = [sum(cm[s] ** 2 * comb(s, t) for s in range(t, m + 1)) for t in range(m + 1)]
    total = 0
    for t in range(m + 1):
        inner = 0
        for v in range(m + 1):
            g = sum(comb(t, u) * comb(v, u) for u in range(min(t, v) + 1))
            inner += cm[v] ** 2 * g
        total += cm[t] * h[t] * inner
    return total


def sigma_period(N: int) -> RationalPowerSeries:
    return RationalPowerSeries([sigma_displayed_coefficient(m) for m in range(N)])


def period(P: Poset, degrees, N: int, method: str = "binomial") -> RationalPowerSeries:
    if method == "flow":
        return period_flow(P, degrees, N)
    if method == "binomial":
        return period_binomial(P, degrees, N)
    raise ValueError("method must be 'flow' or 'binomial'")


def count_hasse_paths(P: Poset) -> int:
    """Directed ``1^ -> 0^`` paths in the Hasse diagram of ``P^``."""
    return P.bounded().maximal_chain_count()
