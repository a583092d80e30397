"""Order polytopes and Hibi toric varieties.

Lattice points of ``k * Delta(P)`` are order-preserving maps ``P -> {0..k}``
(``x_u <= x_v`` whenever ``u < v``).  They are counted as multichains in the
lattice of order ideals, never by listing points of the polytope.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .posets import (BOTTOM, TOP, BoundedPoset, Contraction, DistributiveLattice, Poset,
                     PosetError, facet_contractions, minimal_convex_cycles)


def _zeta_transform(lattice: DistributiveLattice, values: dict[int, int]) -> dict[int, int]:
    """``g(I) = sum of f(J)`` over ideals ``J`` contained in ``I``.

    Elements are processed from the top of a linear extension down; when ``e``
    is handled every element above it has already been released, so the
    ideals below ``I`` that miss ``e`` are exactly those below ``I`` minus the
    up-set of ``e``.
    """
    P = lattice.poset
    g = dict(values)
    for e in reversed(P.linear_extension):
        b = 1 << P.index[e]
        up = P.up_sets[e]
        for ideal in lattice.ideals:
            if ideal & b:
                g[ideal] += g[ideal & ~up]
    return g


def lattice_points(P: Poset, k: int, lattice: DistributiveLattice | None = None) -> int:
    """``l(k Delta(P))``: order-preserving maps ``P -> {0, ..., k}``."""
    if k < 0:
        return 0
    if len(P) == 0:
        return 1
    L = lattice or P.order_ideal_lattice()
    # x corresponds to the multichain I_0 <= ... <= I_{k-1} with I_j = {u : x_u <= j}
    f = {I: 1 for I in L.ideals}
    for _ in range(k):
        f = _zeta_transform(L, f)
    return f[L.top]


def strict_points(P: Poset, k: int, lattice: DistributiveLattice | None = None) -> int:
    """Strictly order-preserving maps ``P -> {1, ..., k-1}`` (``k`` steps from 0 to 1^)."""
    if len(P) == 0:
        return 1 if k >= 1 else 0
    if k < 2:
        return 0
    L = lattice or P.order_ideal_lattice()
    idx = P.index
    maxima = {}
    for I in L.ideals:
        maxima[I] = [1 << idx[e] for e in P.members(I) if P.up_sets[e] & I == 1 << idx[e]]
    f = {I: 0 for I in L.ideals}
    f[0] = 1
    for _ in range(k - 1):
        g = {}
        for I in L.ideals:
            tot = 0
            mx = maxima[I]
            for r in range(len(mx) + 1):
                for sub in itertools.combinations(mx, r):
                    tot += f[I & ~sum(sub)]
            g[I] = tot
        f = g
    return f[L.top]


def interior_points_face(c: Contraction, k: int) -> int:
    """``l*(k theta_f)`` for the face of the order polytope given by a contraction."""
    if not c.is_valid():
        raise PosetError("invalid contraction")
    return strict_points(c.image(), k)


def interior_points(P: Poset, k: int) -> int:
    return strict_points(P, k)


def hibi_degree(P: Poset) -> int:
    return P.order_ideal_lattice().count_maximal_chains()


def ehrhart_polynomial(P: Poset) -> list[Fraction]:
    """Coefficients (constant term first) of ``k -> l(k Delta(P))`` by exact interpolation."""
    n = len(P)
    L = P.order_ideal_lattice()
    xs = list(range(n + 1))
    ys = [lattice_points(P, k, L) for k in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t in range(len(basis)):
            coeffs[t] += yi * basis[t] / denom
    return coeffs


def hilbert_numerator_from_chains(P: Poset) -> list[int]:
    """``h``-vector: numerator of ``sum_k l(k Delta) t^k = h(t) / (1 - t)^(|P|+1)``."""
    c = P.order_ideal_lattice().chain_length_counts()
    n = len(P)
    # 1 + sum_i c_i (t/(1-t))^(i+1), times (1-t)^(n+1)
    num = [0] * (n + 2)
    for j in range(n + 2):
        num[j] += comb(n + 1, j) * (-1) ** j
    for i, ci in enumerate(c):
        m = i + 1
        for j in range(n + 1 - m + 1):
            num[m + j] += ci * comb(n + 1 - m, j) * (-1) ** j
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def hilbert_series(P: Poset, terms: int) -> list[int]:
    """Coefficients of the Hilbert series from the chain-count closed form."""
    h = hilbert_numerator_from_chains(P)
    n = len(P)
    out = []
    for k in range(terms):
        out.append(sum(hj * comb(n + k - j, n) for j, hj in enumerate(h) if k >= j))
    return out


def gorenstein_terminal(P: Poset) -> tuple[bool, int | None]:
    hf = P.heights()
    return hf.pure, (hf.h_P if hf.pure else None)


@dataclass
class SingularStratum:
    contraction: Contraction
    codim: int
    degree: int

    def to_json(self) -> dict:
        cyc = max(self.contraction.fibers, key=len)
        return {"cycle": sorted(cyc), "codim": self.codim, "degree": self.degree}


def singular_components(P: Poset) -> list[SingularStratum]:
    """Irreducible components of the singular locus of the Hibi toric variety."""
    bp = P.bounded()
    out = []
    for c in minimal_convex_cycles(bp):
        image = c.image()
        out.append(SingularStratum(c, len(P) - len(image),
                                   image.order_ideal_lattice().count_maximal_chains()))
    return out


def hibi_ideal_generators(L: DistributiveLattice) -> list[tuple[int, int, int, int]]:
    """Binomials ``p_a p_b - p_(a meet b) p_(a join b)`` as tuples ``(a, b, meet, join)``."""
    return [(a, b, a & b, a | b) for a, b in L.incomparable_pairs()]


def vertices(P: Poset) -> list[tuple[int, ...]]:
    """Vertices of ``Delta(P)``: indicator vectors of filters, listed via their ideal complements."""
    L = P.order_ideal_lattice()
    full = L.top
    out = []
    for I in L.ideals:
        F = full & ~I
        out.append(tuple(F >> P.index[e] & 1 for e in P.elements))
    return out


# ----------------------------------------------------------------------------
# nef-partitions and the dual polytope
# ----------------------------------------------------------------------------


@dataclass
class NefPartition:
    degrees: tuple[int, ...]
    bands: list[list[int]]
    parts: list[list[int]]

    def to_json(self, bp: BoundedPoset) -> dict:
        return {"degrees": list(self.degrees),
                "bands": [[list(bp.edges[e]) for e in band] for band in self.bands],
                "parts": [[list(bp.edges[e]) for e in part] for part in self.parts]}


@dataclass
class DeltaMap:
    elements: list[str]
    edges: list[tuple[str, str]]
    images: list[tuple[int, ...]]

    def column_sums(self) -> dict[str, tuple[int, int]]:
        """For each ``u``: (#edges with s(e)=u, #edges with t(e)=u)."""
        out = {}
        for i, u in enumerate(self.elements):
            src = sum(1 for v in self.images if v[i] == -1)
            tgt = sum(1 for v in self.images if v[i] == 1)
            out[u] = (src, tgt)
        return out

    def nabla_vertices(self, part: list[int]) -> list[tuple[int, ...]]:
        return [tuple(0 for _ in self.elements)] + [self.images[e] for e in part]


def nef_partition(P: Poset, degrees) -> NefPartition:
    degrees = tuple(int(d) for d in degrees)
    hf = P.heights()
    if not hf.pure:
        raise PosetError("nef-partition needs a pure poset")
    if sum(degrees) != hf.h_P or any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be positive and sum to h_P = {hf.h_P}")
    bp = P.bounded()
    bands = [[] for _ in range(hf.h_P)]
    for i, (s, _) in enumerate(bp.edges):
        bands[bp.height[s] - 1].append(i)
    if any(not b for b in bands):
        raise PosetError("empty band")
    parts, k = [], 0
    for d in degrees:
        parts.append([e for band in bands[k:k + d] for e in band])
        k += d
    return NefPartition(degrees, bands, parts)


def dual_data(P: Poset) -> DeltaMap:
    bp = P.bounded()
    els = list(P.elements)
    pos = {u: i for i, u in enumerate(els)}
    images = []
    for s, t in bp.edges:
        v = [0] * len(els)
        if t in pos:
            v[pos[t]] += 1
        if s in pos:
            v[pos[s]] -= 1
        images.append(tuple(v))
    return DeltaMap(els, list(bp.edges), images)


def reflexive_pairing_minima(P: Poset) -> list[int]:
    """``min over vertices m of the shifted polytope of <m, delta(e)>`` for each edge."""
    hf = P.heights()
    dm = dual_data(P)
    h = [hf.h[u] for u in dm.elements]
    verts = vertices(P)
    out = []
    for img in dm.images:
        out.append(min(sum((h[i] - hf.h_P * v[i]) * img[i] for i in range(len(h)))
                       for v in verts))
    return out


def facet_interior_table(P: Poset, ks) -> list[dict]:
    """``l*(k theta_e)`` for every facet and each ``k``, facets in edge order."""
    bp = P.bounded()
    rows = []
    for i, c in enumerate(facet_contractions(bp)):
        image = c.image()
        L = image.order_ideal_lattice() if len(image) else None
        rows.append({"edge": i + 1, "upper": bp.edges[i][0], "lower": bp.edges[i][1],
                     "counts": {k: strict_points(image, k, L) for k in ks}})
    return rows


__all__ = [
    "lattice_points", "strict_points", "interior_points_face", "interior_points", "hibi_degree",
    "ehrhart_polynomial", "hilbert_series", "hilbert_numerator_from_chains",
    "gorenstein_terminal", "singular_components", "hibi_ideal_generators", "vertices",
    "NefPartition", "DeltaMap", "nef_partition", "dual_data", "reflexive_pairing_minima",
    "facet_interior_table", "BOTTOM", "TOP",
]
