"""Finite posets, bounded posets, lattices of order ideals and contractions.

Elements are string ids.  Order ideals are stored as integer bitsets over a
fixed linear extension of the poset, so ``J(P)`` stays compact even when it
has thousands of elements.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

BOTTOM = "0^"
TOP = "1^"

IDEAL_GUARD = 10**7


class PosetError(ValueError):
    pass


def _popcount(n: int) -> int:
    return bin(n).count("1")


class Poset:
    """A finite poset given by its cover relations.

    ``covers`` holds pairs ``(u, v)`` meaning *u covers v*.  The optional
    ``embedding`` maps a vertex to the left-to-right order of its lower
    covers; the key ``TOP`` may list the maximal elements.
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[tuple[str, str]],
                 embedding: dict[str, list[str]] | None = None):
        elements = tuple(str(e) for e in elements)
        if len(set(elements)) != len(elements):
            raise PosetError("duplicate element ids")
        for reserved in (BOTTOM, TOP):
            if reserved in elements:
                raise PosetError(f"element id {reserved!r} is reserved")
        index = {e: i for i, e in enumerate(elements)}
        cov = set()
        for u, v in covers:
            u, v = str(u), str(v)
            if u not in index or v not in index:
                raise PosetError(f"cover ({u}, {v}) uses an unknown element")
            if u == v:
                raise PosetError(f"cover ({u}, {u}) is a loop")
            cov.add((u, v))
        self.elements = elements
        self.index = index
        self.covers = frozenset(cov)
        self.lower = {e: [] for e in elements}
        self.upper = {e: [] for e in elements}
        for u, v in sorted(cov):
            self.lower[u].append(v)
            self.upper[v].append(u)
        self._order = self._topological_order()
        self._check_reduced()
        self.embedding = None
        if embedding is not None:
            self.embedding = self._check_embedding(embedding)

    # -- construction helpers -------------------------------------------

    def _topological_order(self) -> list[str]:
        indeg = {e: len(self.lower[e]) for e in self.elements}
        queue = deque(e for e in self.elements if indeg[e] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in self.upper[v]:
                indeg[u] -= 1
                if indeg[u] == 0:
                    queue.append(u)
        if len(order) != len(self.elements):
            raise PosetError("cover relation has a cycle")
        return order

    def _check_reduced(self):
        below = self.down_sets
        for u, v in self.covers:
            for w in self.lower[u]:
                if w != v and below[w] >> self.index[v] & 1:
                    raise PosetError(f"cover ({u}, {v}) is implied by ({u}, {w}) and {w} > {v}")

    def _check_embedding(self, emb):
        out = {}
        for key, order in emb.items():
            if key == TOP:
                want = set(self.maximal())
            elif key in self.index:
                want = set(self.lower[key])
            else:
                raise PosetError(f"embedding mentions unknown vertex {key!r}")
            if set(order) != want or len(order) != len(want):
                raise PosetError(f"embedding order at {key!r} does not match its lower covers")
            out[key] = list(order)
        return out

    # -- basic structure -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"Poset(n={len(self)}, covers={len(self.covers)})"

    @property
    def linear_extension(self) -> list[str]:
        """Elements listed bottom-up (every element after everything below it)."""
        return list(self._order)

    @cached_property
    def down_sets(self) -> dict[str, int]:
        """Bitset (over ``self.index``) of elements below or equal to each element."""
        down = {}
        for e in self._order:
            bits = 1 << self.index[e]
            for v in self.lower[e]:
                bits |= down[v]
            down[e] = bits
        return down

    @cached_property
    def up_sets(self) -> dict[str, int]:
        up = {}
        for e in reversed(self._order):
            bits = 1 << self.index[e]
            for u in self.upper[e]:
                bits |= up[u]
            up[e] = bits
        return up

    def le(self, u: str, v: str) -> bool:
        return bool(self.down_sets[v] >> self.index[u] & 1)

    def lt(self, u: str, v: str) -> bool:
        return u != v and self.le(u, v)

    def comparable(self, u: str, v: str) -> bool:
        return self.le(u, v) or self.le(v, u)

    def maximal(self) -> list[str]:
        return [e for e in self.elements if not self.upper[e]]

    def minimal(self) -> list[str]:
        return [e for e in self.elements if not self.lower[e]]

    def bits(self, subset: Iterable[str]) -> int:
        b = 0
        for e in subset:
            b |= 1 << self.index[e]
        return b

    def members(self, bits: int) -> list[str]:
        return [e for e in self.elements if bits >> self.index[e] & 1]

    def is_ideal(self, subset: Iterable[str]) -> bool:
        b = self.bits(subset)
        return all(self.down_sets[e] & ~b == 0 for e in self.members(b))

    def induced(self, subset: Iterable[str]) -> Poset:
        """Full subposet on ``subset``."""
        keep = [e for e in self.elements if e in set(subset)]
        kb = self.bits(keep)
        covers = []
        for u in keep:
            strictly_below = self.down_sets[u] & kb & ~(1 << self.index[u])
            for v in self.members(strictly_below):
                between = strictly_below & self.up_sets[v] & ~(1 << self.index[v])
                if not between:
                    covers.append((u, v))
        return Poset(keep, covers)

    def dual(self) -> Poset:
        return Poset(self.elements, [(v, u) for u, v in self.covers])

    def relabel(self, mapping: dict[str, str]) -> Poset:
        emb = None
        if self.embedding:
            emb = {(TOP if k == TOP else mapping[k]): [mapping[x] for x in v]
                   for k, v in self.embedding.items()}
        return Poset([mapping[e] for e in self.elements],
                     [(mapping[u], mapping[v]) for u, v in self.covers], emb)

    def to_digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers)
        return g

    def to_json(self) -> dict:
        out = {"elements": list(self.elements),
               "covers": [list(c) for c in sorted(self.covers)]}
        if self.embedding:
            out["embedding"] = self.embedding
        return out

    @classmethod
    def from_json(cls, data: dict | str) -> Poset:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["elements"], [tuple(c) for c in data["covers"]], data.get("embedding"))

    def isomorphic(self, other: Poset) -> bool:
        if len(self) != len(other) or len(self.covers) != len(other.covers):
            return False
        ha, hb = self.heights(), other.heights()
        ga, gb = self.to_digraph(), other.to_digraph()
        nx.set_node_attributes(ga, ha.h, "h")
        nx.set_node_attributes(gb, hb.h, "h")
        return nx.is_isomorphic(ga, gb, node_match=lambda a, b: a["h"] == b["h"])

    def iso_hash(self) -> str:
        return nx.weisfeiler_lehman_graph_hash(self.to_digraph(), iterations=4)

    # -- heights ----------------------------------------------------------

    def heights(self) -> HeightFunction:
        h = {}
        for e in self._order:
            h[e] = 1 + max((h[v] for v in self.lower[e]), default=0)
        hp = 1 + max(h.values(), default=0)
        pure = all(h[u] == h[v] + 1 for u, v in self.covers)
        pure = pure and all(h[m] == hp - 1 for m in self.maximal())
        return HeightFunction(h, hp, pure)

    def is_pure(self) -> bool:
        return self.heights().pure

    # -- bounded poset ----------------------------------------------------

    def bounded(self) -> BoundedPoset:
        return BoundedPoset(self)

    # -- order ideals -----------------------------------------------------

    def order_ideal_lattice(self, guard: int = IDEAL_GUARD) -> DistributiveLattice:
        return DistributiveLattice(self, guard=guard)


def build_poset(elements, covers, embedding=None) -> Poset:
    return Poset(elements, covers, embedding)


def chain(n: int, prefix: str = "c") -> Poset:
    els = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Poset(els, [(els[i + 1], els[i]) for i in range(n - 1)])


def antichain(n: int, prefix: str = "a") -> Poset:
    return Poset([f"{prefix}{i}" for i in range(1, n + 1)], [])


def product_of_chains(a: int, b: int) -> Poset:
    """The a x b grid, (i, j) <= (k, l) iff i <= k and j <= l."""
    els = [f"{i},{j}" for i in range(1, a + 1) for j in range(1, b + 1)]
    covers = []
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            if i > 1:
                covers.append((f"{i},{j}", f"{i - 1},{j}"))
            if j > 1:
                covers.append((f"{i},{j}", f"{i},{j - 1}"))
    return Poset(els, covers)


@dataclass(frozen=True)
class HeightFunction:
    h: dict[str, int]
    h_P: int
    pure: bool


class BoundedPoset:
    """``P`` with a synthetic bottom ``0^`` and top ``1^`` adjoined.

    ``edges`` lists the Hasse edges of the bounded poset as ``(s, t)`` with
    ``s`` the upper end and ``t`` the lower end, in a fixed order.
    """

    def __init__(self, base: Poset):
        self.base = base
        edges = sorted(base.covers)
        edges += sorted((TOP, m) for m in base.maximal())
        edges += sorted((m, BOTTOM) for m in base.minimal())
        if not base.elements:
            edges = [(TOP, BOTTOM)]
        self.edges = edges
        self.vertices = [BOTTOM] + base.linear_extension + [TOP]
        hf = base.heights()
        self.height = dict(hf.h)
        self.height[BOTTOM] = 0
        self.height[TOP] = hf.h_P

    def source(self, e: int) -> str:
        return self.edges[e][0]

    def target(self, e: int) -> str:
        return self.edges[e][1]

    def le(self, u: str, v: str) -> bool:
        if u == v or u == BOTTOM or v == TOP:
            return True
        if u == TOP or v == BOTTOM:
            return False
        return self.base.le(u, v)

    def lower(self, u: str) -> list[str]:
        return [t for s, t in self.edges if s == u]

    def upper(self, u: str) -> list[str]:
        return [s for s, t in self.edges if t == u]

    def hasse_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def maximal_chain_count(self) -> int:
        """Number of saturated chains from 1^ down to 0^."""
        paths = {TOP: 1}
        order = list(reversed(self.vertices))
        for u in order:
            for t in self.lower(u):
                paths[t] = paths.get(t, 0) + paths.get(u, 0)
        return paths.get(BOTTOM, 0)

    def identity_contraction(self) -> Contraction:
        return Contraction(self, tuple(frozenset([v]) for v in self.vertices))


# ----------------------------------------------------------------------------
# distributive lattices
# ----------------------------------------------------------------------------


class DistributiveLattice:
    """The lattice ``J(P)`` of order ideals of a finite poset, ordered by inclusion."""

    def __init__(self, poset: Poset, guard: int = IDEAL_GUARD):
        self.poset = poset
        lower_bits = {e: poset.bits(poset.lower[e]) for e in poset.elements}
        seen = {0}
        frontier = [0]
        levels = [[0]]
        while frontier:
            nxt = set()
            for ideal in frontier:
                for e in poset.elements:
                    b = 1 << poset.index[e]
                    if not ideal & b and lower_bits[e] & ~ideal == 0:
                        new = ideal | b
                        if new not in seen:
                            seen.add(new)
                            nxt.add(new)
                            if len(seen) > guard:
                                raise PosetError(f"J(P) exceeds the size guard {guard}")
            frontier = sorted(nxt)
            if frontier:
                levels.append(frontier)
        self.ideals = [i for lev in levels for i in lev]
        self.rank = {i: r for r, lev in enumerate(levels) for i in lev}
        self.position = {i: k for k, i in enumerate(self.ideals)}
        self._lower_bits = lower_bits

    def __len__(self):
        return len(self.ideals)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.ideals[-1]

    def join(self, a: int, b: int) -> int:
        return a | b

    def meet(self, a: int, b: int) -> int:
        return a & b

    def leq(self, a: int, b: int) -> bool:
        return a & ~b == 0

    def upper_covers(self, ideal: int) -> list[int]:
        p = self.poset
        out = []
        for e in p.elements:
            b = 1 << p.index[e]
            if not ideal & b and self._lower_bits[e] & ~ideal == 0:
                out.append(ideal | b)
        return out

    def lower_covers(self, ideal: int) -> list[int]:
        p = self.poset
        out = []
        for e in p.members(ideal):
            b = 1 << p.index[e]
            if p.up_sets[e] & ideal == b:
                out.append(ideal & ~b)
        return out

    def covers(self) -> list[tuple[int, int]]:
        return [(u, a) for a in self.ideals for u in self.upper_covers(a)]

    def labels(self, ideal: int) -> list[str]:
        return self.poset.members(ideal)

    def count_maximal_chains(self) -> int:
        ways = {0: 1}
        for a in self.ideals:
            w = ways.get(a, 0)
            for u in self.upper_covers(a):
                ways[u] = ways.get(u, 0) + w
        return ways[self.top]

    def chain_length_counts(self) -> list[int]:
        """``c[i]`` = number of chains ``a_0 < a_1 < ... < a_i`` (length ``i``) in the lattice.

        The list has ``|P| + 1`` entries; the last one counts maximal chains.
        """
        n = len(self.poset)
        ideals = self.ideals
        # ending[a][i]: chains of length i ending at a
        ending = {}
        for a in ideals:
            row = [0] * (n + 1)
            row[0] = 1
            for b in ideals:
                if self.rank[b] >= self.rank[a]:
                    break
                if b & ~a == 0:
                    rb = ending[b]
                    for i in range(n):
                        row[i + 1] += rb[i]
            ending[a] = row
        return [sum(ending[a][i] for a in ideals) for i in range(n + 1)]

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        out = []
        for a, b in itertools.combinations(self.ideals, 2):
            if a & ~b and b & ~a:
                out.append((a, b))
        return out

    def is_distributive_on(self, triples: Iterable[tuple[int, int, int]]) -> bool:
        return all(a & (b | c) == (a & b) | (a & c) for a, b, c in triples)

    def join_irreducibles(self) -> Poset:
        """Poset of join-irreducible ideals (exactly one lower cover), labelled ``J<k>``."""
        irr = [a for a in self.ideals if len(self.lower_covers(a)) == 1]
        name = {a: f"J{self.position[a]}" for a in irr}
        covers = []
        for a in irr:
            below = [b for b in irr if b != a and b & ~a == 0]
            for b in below:
                if not any(c != b and b & ~c == 0 and c & ~a == 0 for c in below):
                    covers.append((name[a], name[b]))
        return Poset([name[a] for a in irr], covers)

    def to_poset(self) -> Poset:
        """The lattice itself as a poset (elements ``I<k>``)."""
        name = {a: f"I{self.position[a]}" for a in self.ideals}
        return Poset([name[a] for a in self.ideals],
                     [(name[u], name[a]) for u, a in self.covers()])


def order_ideal_lattice(poset: Poset, guard: int = IDEAL_GUARD) -> DistributiveLattice:
    return DistributiveLattice(poset, guard)


def join_irreducibles(lattice: DistributiveLattice) -> Poset:
    return lattice.join_irreducibles()


def heights(poset: Poset) -> HeightFunction:
    return poset.heights()


def count_maximal_chains(lattice: DistributiveLattice) -> int:
    return lattice.count_maximal_chains()


def chain_length_counts(lattice: DistributiveLattice) -> list[int]:
    return lattice.chain_length_counts()


# ----------------------------------------------------------------------------
# contractions (faces of the order polytope)
# ----------------------------------------------------------------------------


class Contraction:
    """A partition of the vertices of ``P^`` into fibers of a contraction."""

    def __init__(self, bounded: BoundedPoset, fibers):
        self.bounded = bounded
        self.fibers = tuple(sorted((frozenset(f) for f in fibers), key=lambda f: sorted(f)))
        self.key = frozenset(self.fibers)

    def __eq__(self, other):
        return isinstance(other, Contraction) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Contraction(" + " | ".join(",".join(sorted(f)) for f in self.fibers) + ")"

    def fiber_of(self, v: str) -> frozenset:
        for f in self.fibers:
            if v in f:
                return f
        raise KeyError(v)

    @property
    def codim(self) -> int:
        return len(self.bounded.vertices) - len(self.fibers)

    @property
    def dim(self) -> int:
        return len(self.fibers) - 2

    def quotient_edges(self) -> list[tuple[frozenset, frozenset]]:
        """Hasse edges of the image poset ``P^'`` (upper fiber, lower fiber)."""
        rel = set()
        for s, t in self.bounded.edges:
            fs, ft = self.fiber_of(s), self.fiber_of(t)
            if fs != ft:
                rel.add((fs, ft))
        g = nx.DiGraph()
        g.add_nodes_from(self.fibers)
        g.add_edges_from(rel)
        if not nx.is_directed_acyclic_graph(g):
            raise PosetError("contraction image is not a poset")
        red = nx.transitive_reduction(g)
        return list(red.edges())

    def is_valid(self) -> bool:
        bp = self.bounded
        hasse = bp.hasse_graph()
        for f in self.fibers:
            if BOTTOM in f and TOP in f:
                return False
            if not nx.is_connected(hasse.subgraph(f)):
                return False
        # tightness: no pair of fibers related in both directions
        rel = set()
        for s, t in bp.edges:
            fs, ft = self.fiber_of(s), self.fiber_of(t)
            if fs != ft:
                rel.add((fs, ft))
        g = nx.DiGraph()
        g.add_nodes_from(self.fibers)
        g.add_edges_from(rel)
        return nx.is_directed_acyclic_graph(g)

    def image(self) -> Poset:
        """The poset ``P'`` (image without the fibers of ``0^`` and ``1^``)."""
        names = {}
        for f in self.fibers:
            if BOTTOM in f or TOP in f:
                continue
            names[f] = "+".join(sorted(f))
        covers = [(names[a], names[b]) for a, b in self.quotient_edges()
                  if a in names and b in names]
        return Poset(sorted(names.values()), covers)


def _merge(c: Contraction, a: frozenset, b: frozenset) -> Contraction:
    fibers = tuple(f for f in c.fibers if f != a and f != b) + (a | b,)
    return Contraction(c.bounded, fibers)


def enumerate_contractions(bp: BoundedPoset, codim: int) -> list[Contraction]:
    """All contractions of ``P^`` whose face of the order polytope has the given codimension."""
    if codim < 0:
        raise ValueError("codim must be non-negative")
    current = {bp.identity_contraction()}
    for _ in range(codim):
        nxt = set()
        for c in current:
            for a, b in c.quotient_edges():
                if (BOTTOM in a or BOTTOM in b) and (TOP in a or TOP in b):
                    continue
                nxt.add(_merge(c, a, b))
        current = nxt
    return sorted(current, key=lambda c: sorted(sorted(f) for f in c.fibers))


def facet_contractions(bp: BoundedPoset) -> list[Contraction]:
    """One facet per Hasse edge of ``P^``, in the order of ``bp.edges``."""
    ident = bp.identity_contraction()
    out = []
    for s, t in bp.edges:
        out.append(_merge(ident, frozenset([s]), frozenset([t])))
    return out


def _is_convex(bp: BoundedPoset, subset: set) -> bool:
    for u in subset:
        for v in subset:
            if u == v or not bp.le(u, v):
                continue
            for w in bp.vertices:
                if w not in subset and bp.le(u, w) and bp.le(w, v):
                    return False
    return True


def convex_cycles(bp: BoundedPoset) -> list[frozenset]:
    """Vertex sets of convex full subposets of ``P^`` whose Hasse diagram is one cycle."""
    g = bp.hasse_graph()
    found = []
    for cyc in nx.chordless_cycles(g):
        if len(cyc) < 4:
            continue
        s = set(cyc)
        if _is_convex(bp, s):
            found.append(frozenset(s))
    return found


def minimal_convex_cycles(bp: BoundedPoset) -> list[Contraction]:
    """Contractions collapsing exactly one minimal convex cycle to a point."""
    cycles = convex_cycles(bp)
    minimal = [c for c in cycles if not any(o < c for o in cycles)]
    out = []
    for cyc in minimal:
        if BOTTOM in cyc and TOP in cyc:
            continue
        fibers = [frozenset([v]) for v in bp.vertices if v not in cyc] + [cyc]
        con = Contraction(bp, fibers)
        if con.is_valid():
            out.append(con)
    return sorted(out, key=lambda c: sorted(max(c.fibers, key=len)))


# ----------------------------------------------------------------------------
# extensions
# ----------------------------------------------------------------------------


def extend(poset: Poset, direction: str, name: str | None = None) -> Poset:
    """Adjoin a new global maximum (``"top"``) or minimum (``"bottom"``)."""
    if direction not in ("top", "bottom"):
        raise ValueError("direction must be 'top' or 'bottom'")
    if name is None:
        k = 0
        while f"x{direction[0]}{k}" in poset.index:
            k += 1
        name = f"x{direction[0]}{k}"
    covers = list(poset.covers)
    if direction == "top":
        covers += [(name, m) for m in poset.maximal()]
        els = list(poset.elements) + [name]
    else:
        covers += [(m, name) for m in poset.minimal()]
        els = [name] + list(poset.elements)
    return Poset(els, covers)


def global_max(poset: Poset) -> str | None:
    mx = poset.maximal()
    return mx[0] if len(mx) == 1 else None


def global_min(poset: Poset) -> str | None:
    mn = poset.minimal()
    return mn[0] if len(mn) == 1 else None


def strip_one(poset: Poset) -> Poset | None:
    """Remove a global maximum (preferred) or minimum; None if neither exists."""
    if len(poset) <= 1:
        return None
    top = global_max(poset)
    if top is not None:
        return poset.induced([e for e in poset.elements if e != top])
    bot = global_min(poset)
    if bot is not None:
        return poset.induced([e for e in poset.elements if e != bot])
    return None


def reduce_extensions(poset: Poset) -> tuple[Poset, int]:
    """Strip iterated global maxima/minima down to the core (never below one element)."""
    d = 0
    cur = poset
    while True:
        nxt = strip_one(cur)
        if nxt is None:
            return cur, d
        cur, d = nxt, d + 1


# ----------------------------------------------------------------------------
# layered planar layout
# ----------------------------------------------------------------------------


def layered_layout(poset: Poset) -> list[list[str]]:
    """Left-to-right order of each height level of ``P^`` with no crossing Hasse edges.

    Only pure posets are supported (every edge joins adjacent levels).  A stored
    embedding constrains the search: the lower covers of each vertex must appear
    in the given left-to-right order.
    """
    hf = poset.heights()
    if not hf.pure:
        raise PosetError("layered layout needs a pure poset")
    bp = poset.bounded()
    levels: list[list[str]] = [[] for _ in range(hf.h_P + 1)]
    for v in bp.vertices:
        levels[bp.height[v]].append(v)
    emb = poset.embedding or {}

    def lower_of(v):
        return bp.lower(v)

    def respects(upper_order, lower_order):
        pos = {v: i for i, v in enumerate(lower_order)}
        edges = [(i, pos[t]) for i, s in enumerate(upper_order) for t in lower_of(s)]
        for (a, b), (c, d) in itertools.combinations(edges, 2):
            if (a - c) * (b - d) < 0:
                return False
        for s in upper_order:
            if s in emb:
                idx = [pos[t] for t in emb[s]]
                if idx != sorted(idx):
                    return False
        return True

    # top level fixed; search level orders downward with backtracking
    result = [None] * len(levels)
    result[-1] = levels[-1]

    def search(k):
        if k < 0:
            return True
        for perm in itertools.permutations(levels[k]):
            if respects(result[k + 1], list(perm)):
                result[k] = list(perm)
                if search(k - 1):
                    return True
        return False

    if not search(len(levels) - 2):
        raise PosetError("no crossing-free layered drawing matches the poset/embedding")
    return result


def embedding_from_layout(poset: Poset, layout: list[list[str]]) -> dict[str, list[str]]:
    bp = poset.bounded()
    pos = {v: i for lev in layout for i, v in enumerate(lev)}
    emb = {}
    for v in [TOP] + list(poset.elements):
        low = [t for t in bp.lower(v) if t != BOTTOM]
        if v == TOP or low:
            emb[v] = sorted(low, key=pos.get)
    return emb


def with_embedding(poset: Poset) -> Poset:
    """Copy of ``poset`` carrying a crossing-free embedding (computed if absent)."""
    layout = layered_layout(poset)
    return Poset(poset.elements, poset.covers, embedding_from_layout(poset, layout))
