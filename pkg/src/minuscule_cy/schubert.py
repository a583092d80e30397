"""Minuscule Schubert varieties: Bruhat lattices W^Q, colored minuscule posets,
peaks and holes, singular loci, and the classification of smooth complete
intersection Calabi-Yau 3-folds in minuscule Schubert varieties.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .posets import Poset, chain
from .roots import RootSystem, RootSystemError


class WQLattice:
    """The W-orbit of a minuscule fundamental weight with its Bruhat order.

    The identity coset sits at the dominant weight (length 0); an element
    ``mu`` is covered by ``s_i mu`` whenever ``mu_i > 0``.
    """

    def __init__(self, rs: RootSystem, node: int):
        rs.check_minuscule(node)
        self.rs = rs
        self.node = node
        lam = rs.fundamental_weight(node)
        self.identity = lam
        word = {lam: ()}
        length = {lam: 0}
        up: dict[tuple, list[tuple[int, tuple]]] = {lam: []}
        down: dict[tuple, list[tuple[int, tuple]]] = {lam: []}
        queue = deque([lam])
        order = [lam]
        while queue:
            mu = queue.popleft()
            for i in range(1, rs.rank + 1):
                if mu[i - 1] > 0:
                    nu = rs.reflect_weight(i, mu)
                    if nu not in word:
                        word[nu] = (i,) + word[mu]
                        length[nu] = length[mu] + 1
                        up[nu], down[nu] = [], []
                        queue.append(nu)
                        order.append(nu)
                    up[mu].append((i, nu))
                    down[nu].append((i, mu))
        self.elements = order
        self.word = word
        self.length = length
        self.up = up
        self.down = down

    def __len__(self):
        return len(self.elements)

    @property
    def top(self) -> tuple:
        return self.elements[-1]

    def covers(self) -> list[tuple[tuple, tuple]]:
        return [(nu, mu) for mu in self.elements for _, nu in self.up[mu]]

    def is_join_irreducible(self, mu) -> bool:
        return len(self.down[mu]) == 1

    def element_from_word(self, word: str | Sequence[int]) -> tuple:
        """Apply simple reflections to the dominant weight, rightmost letter first."""
        letters = [int(c) for c in word] if isinstance(word, str) else [int(c) for c in word]
        mu = self.identity
        for i in reversed(letters):
            if not 1 <= i <= self.rs.rank:
                raise RootSystemError(f"no simple root {i} in {self.rs.name}")
            if mu[i - 1] <= 0:
                raise RootSystemError(f"word {word} is not a reduced element of W^Q")
            mu = self.rs.reflect_weight(i, mu)
        return mu

    def word_string(self, mu) -> str:
        w = self.word[mu]
        sep = "" if self.rs.rank < 10 else ","
        return sep.join(str(i) for i in w)

    @cached_property
    def join_irreducibles(self) -> list[tuple]:
        return [mu for mu in self.elements if self.is_join_irreducible(mu)]

    @cached_property
    def color(self) -> dict[tuple, int]:
        return {mu: self.down[mu][0][0] for mu in self.join_irreducibles}

    def label(self, mu) -> str:
        return f"{self.color[mu]}.{self.length[mu]}"

    @cached_property
    def ideal_bits(self) -> dict[tuple, int]:
        """Bitset over ``join_irreducibles`` of those below each element."""
        pos = {mu: k for k, mu in enumerate(self.join_irreducibles)}
        bits = {}
        for mu in self.elements:
            b = 0
            for _, nu in self.down[mu]:
                b |= bits[nu]
            if mu in pos:
                b |= 1 << pos[mu]
            bits[mu] = b
        return bits

    @cached_property
    def poset(self) -> ColoredMinusculePoset:
        """The minuscule poset ``P_Q`` (join-irreducibles of the whole lattice)."""
        return self.minuscule_poset(self.top)

    def minuscule_poset(self, w) -> ColoredMinusculePoset:
        if isinstance(w, (str, list)) or (isinstance(w, tuple) and w not in self.word):
            w = self.element_from_word(w)
        if w not in self.word:
            raise RootSystemError("element not in W^Q")
        ji = self.join_irreducibles
        bits = self.ideal_bits
        sel = [k for k in range(len(ji)) if bits[w] >> k & 1]
        names = [self.label(ji[k]) for k in sel]
        covers = []
        for a in sel:
            below = [b for b in sel if b != a and bits[ji[a]] >> b & 1]
            for b in below:
                if not any(c != b and bits[ji[c]] >> b & 1 for c in below):
                    covers.append((self.label(ji[a]), self.label(ji[b])))
        P = Poset(names, covers)
        colors = {self.label(ji[k]): self.color[ji[k]] for k in sel}
        return ColoredMinusculePoset(P, colors, self.rs, self.node, self.word_string(w))


def generate_WQ(rs: RootSystem | str, node: int) -> WQLattice:
    if isinstance(rs, str):
        rs = RootSystem(rs)
    return WQLattice(rs, node)


def minuscule_poset(lattice: WQLattice, w) -> ColoredMinusculePoset:
    return lattice.minuscule_poset(w)


@dataclass
class ColoredMinusculePoset:
    poset: Poset
    color: dict[str, int]
    rs: RootSystem | None = None
    node: int | None = None
    word: str | None = None

    def __len__(self):
        return len(self.poset)

    def adjacent(self, i: int, j: int) -> bool:
        if self.rs is None:
            return abs(i - j) == 1
        return self.rs.cartan[i - 1][j - 1] != 0

    def ideal_below_complement(self, u: str) -> list[str]:
        """``P^u``: elements not above or equal to ``u``."""
        P = self.poset
        return [v for v in P.elements if not P.le(u, v)]

    def sub(self, elements) -> ColoredMinusculePoset:
        P = self.poset.induced(elements)
        return ColoredMinusculePoset(P, {e: self.color[e] for e in P.elements},
                                     self.rs, self.node, None)


def peaks_holes(cp: ColoredMinusculePoset) -> tuple[list[str], list[str], list[str]]:
    """Peaks, holes and essential holes of a colored minuscule poset."""
    P = cp.poset
    peaks = P.maximal()
    holes = []
    for u in P.elements:
        a = cp.color[u]
        same = [v for v in P.elements if cp.color[v] == a and v != u]
        if any(P.lt(u, v) for v in same):
            continue
        linked_above = [v for v in P.elements if P.lt(u, v) and cp.adjacent(a, cp.color[v])]
        if len(linked_above) == 2:
            holes.append(u)
    essential = []
    for u in holes:
        pu = set(cp.ideal_below_complement(u))
        if all(v in pu for v in holes if v != u):
            essential.append(u)
    return peaks, holes, essential


@dataclass
class SingularComponent:
    hole: str
    color: int
    elements: list[str]
    dimension: int
    degree: int
    codim: int


@dataclass
class SchubertReport:
    dimension: int
    peaks: list[str]
    holes: list[str]
    essential_holes: list[str]
    gorenstein: bool
    fano_index: int | None
    locally_factorial: bool
    degree: int
    anticanonical: dict[str, int]
    singular_components: list[SingularComponent] = field(default_factory=list)

    @property
    def smooth(self) -> bool:
        return not self.singular_components

    @property
    def singular_dimension(self) -> int:
        return max((c.dimension for c in self.singular_components), default=-1)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "peaks": self.peaks,
            "holes": self.holes,
            "essential_holes": self.essential_holes,
            "gorenstein": self.gorenstein,
            "fano_index": self.fano_index,
            "locally_factorial": self.locally_factorial,
            "degree": self.degree,
            "anticanonical": self.anticanonical,
            "singular_components": [c.__dict__ for c in self.singular_components],
        }


def schubert_report(cp: ColoredMinusculePoset) -> SchubertReport:
    P = cp.poset
    hf = P.heights()
    peaks, holes, essential = peaks_holes(cp)
    comps = []
    for u in essential:
        els = cp.ideal_below_complement(u)
        sub = P.induced(els)
        comps.append(SingularComponent(u, cp.color[u], els, len(els),
                                       sub.order_ideal_lattice().count_maximal_chains(),
                                       len(P) - len(els)))
    return SchubertReport(
        dimension=len(P),
        peaks=peaks,
        holes=holes,
        essential_holes=essential,
        gorenstein=hf.pure,
        fano_index=hf.h_P if hf.pure else None,
        locally_factorial=len(peaks) == 1,
        degree=P.order_ideal_lattice().count_maximal_chains(),
        anticanonical={u: hf.h[u] + 1 for u in peaks},
        singular_components=comps,
    )


# ----------------------------------------------------------------------------
# classification of smooth CICY 3-folds
# ----------------------------------------------------------------------------

DEFAULT_GUARDS = {"A": 12, "D": 8}


def minuscule_families(guards: dict[str, int] | None = None) -> list[tuple[str, int]]:
    g = dict(DEFAULT_GUARDS)
    if guards:
        g.update(guards)
    if g["A"] > 30 or g["D"] > 16:
        raise RootSystemError("rank guard exceeds the supported range")
    fams = []
    for n in range(1, g["A"] + 1):
        for k in range(1, (n + 1) // 2 + 1):
            fams.append((f"A{n}", k))
    for n in range(4, g["D"] + 1):
        fams.append((f"D{n}", 1))
        fams.append((f"D{n}", n))
    fams.append(("E6", 1))
    fams.append(("E7", 7))
    return fams


def partitions_into(total: int, parts: int, smallest: int = 1) -> list[tuple[int, ...]]:
    """Non-decreasing tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for first in range(smallest, total // parts + 1):
        for rest in partitions_into(total - first, parts - 1, first):
            out.append((first,) + rest)
    return out


def hibi_generator_count(P: Poset) -> int:
    return len(P.order_ideal_lattice().incomparable_pairs())


def complete_intersection_quadrics(P: Poset) -> int:
    """Number ``g > 0`` of Hibi quadrics if they cut out a complete intersection, else 0."""
    L = P.order_ideal_lattice()
    g = len(L.incomparable_pairs())
    return g if g and g == len(L) - 1 - len(P) else 0


def strip_top(P: Poset) -> Poset | None:
    mx = P.maximal()
    if len(P) > 1 and len(mx) == 1:
        return P.induced([e for e in P.elements if e != mx[0]])
    return None


def strip_bottom(P: Poset) -> Poset | None:
    mn = P.minimal()
    if len(P) > 1 and len(mn) == 1:
        return P.induced([e for e in P.elements if e != mn[0]])
    return None


def instance_moves(P: Poset, degrees: tuple[int, ...]) -> list[tuple[Poset, tuple[int, ...]]]:
    """Instances related to ``X(w)(d)`` by one step of the toric-degeneration argument.

    A linear section of a projective cone degenerates to the base, so a global
    maximum or minimum may be removed together with one linear degree.  An
    ambient whose Hibi ideal is a complete intersection of ``g`` quadrics is
    projective space cut by ``g`` more quadrics.
    """
    out = []
    if 1 in degrees:
        rest = list(degrees)
        rest.remove(1)
        for Q in (strip_top(P), strip_bottom(P)):
            if Q is not None:
                out.append((Q, tuple(rest)))
    g = complete_intersection_quadrics(P)
    if g:
        out.append((chain(len(P) + g), tuple(sorted(degrees + (2,) * g))))
    return out


def reduce_instance(P: Poset, degrees) -> tuple[Poset, tuple[int, ...]]:
    """Apply moves greedily until none is left (one representative normal form)."""
    cur, degs = P, tuple(sorted(degrees))
    while True:
        moves = instance_moves(cur, degs)
        if not moves:
            return cur, degs
        cur, degs = moves[0]


def same_up_to_duality(a: Poset, b: Poset) -> bool:
    return a.isomorphic(b) or a.isomorphic(b.dual())


class InstanceRegistry:
    """Instances ``(P, d)`` up to poset isomorphism and order duality."""

    def __init__(self):
        self.items: list[tuple[Poset, tuple[int, ...]]] = []
        self.buckets: dict[tuple, list[int]] = {}
        self.parent: list[int] = []

    def _bucket_key(self, P, degrees):
        hashes = tuple(sorted((P.iso_hash(), P.dual().iso_hash())))
        return (degrees, len(P), len(P.covers), hashes)

    def lookup(self, P, degrees) -> tuple[int, bool]:
        key = self._bucket_key(P, degrees)
        for k in self.buckets.get(key, []):
            if same_up_to_duality(self.items[k][0], P):
                return k, False
        k = len(self.items)
        self.items.append((P, degrees))
        self.parent.append(k)
        self.buckets.setdefault(key, []).append(k)
        return k, True

    def find(self, k):
        while self.parent[k] != k:
            self.parent[k] = self.parent[self.parent[k]]
            k = self.parent[k]
        return k

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def add_with_moves(self, P, degrees) -> int:
        k, new = self.lookup(P, degrees)
        stack = [k] if new else []
        while stack:
            i = stack.pop()
            Pi, di = self.items[i]
            for Q, dq in instance_moves(Pi, di):
                j, fresh = self.lookup(Q, dq)
                self.union(i, j)
                if fresh:
                    stack.append(j)
        return k


def homogeneous_name(tname: str, node: int) -> str:
    fam, rank = tname[0], int(tname[1:])
    if fam == "A":
        n = rank + 1
        k = min(node, n - node)
        return f"P^{rank}" if k == 1 else f"G({k},{n})"
    if fam == "D":
        return f"Q^{2 * rank - 2}" if node == 1 else f"OG({rank},{2 * rank})"
    if fam == "E" and rank == 6:
        return "OP^2"
    return "E7/P7"


def format_degrees(degrees) -> str:
    out = []
    for d, grp in itertools.groupby(sorted(degrees)):
        k = len(list(grp))
        out.append(str(d) if k == 1 else f"{d}^{k}")
    return "(" + ",".join(out) + ")"


@dataclass
class Realization:
    type: str
    node: int
    word: str
    dimension: int
    degrees: tuple[int, ...]
    homogeneous: bool

    def to_json(self) -> dict:
        return {"type": self.type, "node": self.node, "word": self.word,
                "dimension": self.dimension, "degrees": list(self.degrees),
                "homogeneous": self.homogeneous}


@dataclass
class CICYClass:
    name: str
    core: Poset
    degrees: tuple[int, ...]
    realizations: list[Realization]

    def to_json(self) -> dict:
        return {"name": self.name,
                "core_size": len(self.core),
                "core_degrees": list(self.degrees),
                "realizations": [r.to_json() for r in self.realizations]}


def is_chain(P: Poset) -> bool:
    return len(P.covers) == max(len(P) - 1, 0) and P.heights().h_P == len(P) + 1


def _class_name(members: list[tuple[Poset, tuple[int, ...]]], reals: list[Realization]) -> str:
    chains = sorted((m for m in members if is_chain(m[0])), key=lambda m: len(m[0]))
    if chains:
        return f"P^{len(chains[0][0])}" + format_degrees(chains[0][1])
    homog = sorted((r for r in reals if r.homogeneous), key=lambda r: r.dimension)
    if homog:
        r = homog[0]
        return homogeneous_name(r.type, r.node) + format_degrees(r.degrees)
    sig = sigma_poset()
    for r in sorted(reals, key=lambda r: r.dimension):
        if r.dimension == len(sig):
            cp = generate_WQ(r.type, r.node).minuscule_poset(r.word)
            if same_up_to_duality(cp.poset, sig):
                return "Sigma" + format_degrees(r.degrees)
    r = min(reals, key=lambda r: r.dimension)
    return f"X_{r.type}[{r.word}]" + format_degrees(r.degrees)


def classify_cicy3(guards: dict[str, int] | None = None) -> list[CICYClass]:
    """Smooth CY 3-fold complete intersections in minuscule Schubert varieties.

    Candidates are Gorenstein ``X(w)`` with ``4 <= |P_w| <= h_P + 3``, cut by
    ``r = |P_w| - 3`` divisors with degrees summing to ``h_P``.  A general such
    section is smooth iff ``r`` exceeds the dimension of the singular locus.
    Only locally factorial ambients (a unique peak) are kept, which is where
    sections of Picard number one live.  Instances joined by the cone and complete-intersection moves are merged.
    """
    reg = InstanceRegistry()
    found: list[tuple[int, Realization]] = []
    for tname, node in minuscule_families(guards):
        L = generate_WQ(tname, node)
        for w in L.elements:
            n = L.length[w]
            if n < 4:
                continue
            cp = L.minuscule_poset(w)
            hf = cp.poset.heights()
            if not hf.pure or n > hf.h_P + 3:
                continue
            r = n - 3
            report = schubert_report(cp)
            if r <= report.singular_dimension or not report.locally_factorial:
                continue
            for degs in partitions_into(hf.h_P, r):
                k = reg.add_with_moves(cp.poset, degs)
                found.append((k, Realization(tname, node, L.word_string(w), n, degs,
                                             w == L.top)))
    groups: dict[int, list[Realization]] = {}
    for k, real in found:
        groups.setdefault(reg.find(k), []).append(real)
    classes = []
    for root, reals in groups.items():
        members = [i for i in range(len(reg.items)) if reg.find(i) == root]
        items = [reg.items[i] for i in members]
        core, degs = min(items, key=lambda it: (len(it[0]), it[1]))
        classes.append(CICYClass(_class_name(items, reals), core, degs, reals))
    classes.sort(key=lambda c: (min(r.dimension for r in c.realizations), c.name))
    return classes


# ----------------------------------------------------------------------------
# named examples
# ----------------------------------------------------------------------------

SIGMA_WORD = "345134265431"


def sigma_colored() -> ColoredMinusculePoset:
    return generate_WQ("E6", 1).minuscule_poset(SIGMA_WORD)


def sigma_poset() -> Poset:
    return sigma_colored().poset
