"""Topological invariants of Calabi-Yau 3-fold complete intersections in
minuscule Schubert varieties, read off from the Hibi toric degeneration.
"""
from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from math import prod

from .hibi import facet_interior_table, lattice_points, singular_components
from .posets import Poset, PosetError


class InstanceError(ValueError):
    pass


@dataclass(frozen=True)
class CICYInstance:
    poset: Poset
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(int(d) for d in self.degrees)))
        hf = self.poset.heights()
        if not hf.pure:
            raise InstanceError("ambient poset must be pure (Gorenstein ambient)")
        if any(d < 1 for d in self.degrees):
            raise InstanceError("degrees must be positive")
        if sum(self.degrees) != hf.h_P:
            raise InstanceError(f"degrees sum to {sum(self.degrees)}, expected h_P = {hf.h_P}")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def dimension(self) -> int:
        return len(self.poset) - self.r

    @property
    def h_P(self) -> int:
        return self.poset.heights().h_P

    def require_threefold(self):
        if self.dimension != 3:
            raise InstanceError(f"complete intersection has dimension {self.dimension}, not 3")


def parse_degrees(text: str) -> tuple[int, ...]:
    """Parse ``1x9``, ``1^6,2`` or ``1,1,2`` style degree vectors."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        for sep in ("x", "^"):
            if sep in tok:
                d, k = tok.split(sep)
                out += [int(d)] * int(k)
                break
        else:
            out.append(int(tok))
    return tuple(out)


def degree_ci(inst: CICYInstance) -> int:
    return inst.poset.order_ideal_lattice().count_maximal_chains() * prod(inst.degrees)


def hilbert_series_ci(inst: CICYInstance, terms: int) -> list[int]:
    """Hilbert series of the ambient times ``prod (1 - t^d_j)``."""
    L = inst.poset.order_ideal_lattice()
    amb = [lattice_points(inst.poset, k, L) for k in range(terms)]
    ser = amb
    for d in inst.degrees:
        ser = [ser[k] - (ser[k - d] if k >= d else 0) for k in range(terms)]
    return ser


def chi_O1(inst: CICYInstance) -> int:
    return hilbert_series_ci(inst, 2)[1]


def c2H(inst: CICYInstance) -> int:
    inst.require_threefold()
    return 12 * chi_O1(inst) - 2 * degree_ci(inst)


def _subset_sums(degrees) -> dict[int, int]:
    """``d_J -> number of subsets J`` with signs folded in by the caller."""
    out: dict[tuple[int, int], int] = {}
    for r in range(len(degrees) + 1):
        for J in itertools.combinations(range(len(degrees)), r):
            key = (sum(degrees[j] for j in J), r)
            out[key] = out.get(key, 0) + 1
    return out


@dataclass
class StringyHodge:
    h11: int
    middle_zero: bool
    h_last: int
    facet_sum: int


def stringy_h1(inst: CICYInstance) -> StringyHodge:
    """Stringy ``(1, *)`` Hodge numbers of the general complete intersection in the Hibi variety."""
    P = inst.poset
    n = len(P)
    r = inst.r
    if n - r < 3:
        raise InstanceError("stringy formula needs Calabi-Yau dimension >= 3")
    bp = P.bounded()
    E = len(bp.edges)
    L = P.order_ideal_lattice()
    subsets = _subset_sums(inst.degrees)
    first = 0
    lp_cache = {}
    for di in inst.degrees:
        for (dJ, size), cnt in subsets.items():
            k = di - dJ
            if k < 0:
                continue
            if k not in lp_cache:
                lp_cache[k] = lattice_points(P, k, L)
            first += (-1) ** size * cnt * lp_cache[k]
    ks = sorted({dJ for (dJ, _) in subsets})
    table = facet_interior_table(P, ks)
    facet_totals = {k: sum(row["counts"][k] for row in table) for k in ks}
    second = sum((-1) ** (r - size) * cnt * facet_totals[dJ] for (dJ, size), cnt in subsets.items())
    h_last = first - second - n
    return StringyHodge(E - n, True, h_last, second)


def node_count(inst: CICYInstance) -> int:
    """Nodes of the general complete intersection in the Hibi toric variety."""
    inst.require_threefold()
    total = sum(s.degree for s in singular_components(inst.poset) if s.codim == 3)
    return prod(inst.degrees) * total


@dataclass
class InvariantReport:
    deg: int
    chi_O1: int
    c2H: int
    h11_Y: int
    h21_Y: int
    chi_Y: int
    nodes: int
    chi: int
    h11: int
    h21: int

    def to_json(self) -> dict:
        return asdict(self)


def euler_number(inst: CICYInstance) -> int:
    return invariant_report(inst).chi


def invariant_report(inst: CICYInstance) -> InvariantReport:
    """Degree, ``c2.H`` and Euler number via the conifold transition ``X ~> X_0 <~ Y``.

    ``Y`` is the crepant resolution of the toric degeneration ``X_0``; ``X`` is
    the smoothing with Picard number one, so ``h11(X) = 1`` and
    ``h21(X) = h21(Y) + p - (h11(Y) - 1)``.
    """
    inst.require_threefold()
    deg = degree_ci(inst)
    chi1 = chi_O1(inst)
    c2 = 12 * chi1 - 2 * deg
    st = stringy_h1(inst)
    p = node_count(inst)
    chi_y = 2 * (st.h11 - st.h_last)
    chi_x = chi_y - 2 * p
    h21_x = 1 - chi_x // 2
    return InvariantReport(deg, chi1, c2, st.h11, st.h_last, chi_y, p, chi_x, 1, h21_x)
