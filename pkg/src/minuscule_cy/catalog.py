"""Named minuscule posets and operators, and loading posets from JSON files."""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from functools import lru_cache

from .posets import Poset, PosetError, with_embedding
from .roots import RootSystem
from .schubert import SIGMA_WORD, ColoredMinusculePoset, WQLattice


class CatalogError(KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "catalog error"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    node: int
    word: str | None  # None: the whole homogeneous space
    description: str


_FIXED = {
    "sigma": ("E6", 1, SIGMA_WORD, "Schubert variety Sigma in the Cayley plane"),
    "og510": ("D5", 5, None, "spinor tenfold OG(5,10)"),
    "op2": ("E6", 1, None, "Cayley plane"),
    "e7": ("E7", 7, None, "Freudenthal variety E7/P7"),
}


def catalog_entry(name: str) -> CatalogEntry:
    if name in _FIXED:
        fam, node, word, desc = _FIXED[name]
        return CatalogEntry(name, fam, node, word, desc)
    m = re.fullmatch(r"chain-(\d+)", name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise CatalogError(f"chain length must be positive: {name}")
        return CatalogEntry(name, f"A{n}", 1, None, f"projective space P^{n}")
    m = re.fullmatch(r"rect-(\d+)-(\d+)", name)
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if a < 1 or b < 1:
            raise CatalogError(f"rectangle sides must be positive: {name}")
        return CatalogEntry(name, f"A{a + b - 1}", a, None, f"Grassmannian G({a},{a + b})")
    m = re.fullmatch(r"quadric-(\d+)", name)
    if m:
        d = int(m.group(1))
        if d < 6 or d % 2:
            raise CatalogError(f"quadric dimension must be even and at least 6: {name}")
        return CatalogEntry(name, f"D{d // 2 + 1}", 1, None, f"quadric Q^{d}")
    raise CatalogError(f"unknown poset name {name!r}; known: {', '.join(catalog_names())}")


def catalog_names() -> list[str]:
    return ["sigma", "chain-n", "rect-a-b", "og510", "op2", "quadric-2n", "e7"]


def default_catalog() -> list[str]:
    """Concrete instances used by the property suites."""
    return ["sigma", "chain-4", "chain-5", "rect-2-3", "rect-2-4", "rect-3-3", "og510", "op2",
            "quadric-6", "e7"]


@lru_cache(maxsize=None)
def _lattice(family: str, node: int) -> WQLattice:
    return WQLattice(RootSystem(family), node)


def catalog_colored(name: str) -> ColoredMinusculePoset:
    e = catalog_entry(name)
    L = _lattice(e.family, e.node)
    return L.minuscule_poset(e.word) if e.word else L.poset


@lru_cache(maxsize=None)
def catalog_poset(name: str) -> Poset:
    """The catalog poset with a crossing-free planar embedding attached."""
    return with_embedding(catalog_colored(name).poset)


def chevalley_degree(name: str) -> int:
    """Degree of the Schubert variety from the Chevalley rule on the weight orbit.

    Every Chevalley coefficient is 1 for a minuscule weight, so the degree is
    the number of saturated chains from the identity up to ``w``.
    """
    e = catalog_entry(name)
    L = _lattice(e.family, e.node)
    w = L.element_from_word(e.word) if e.word else L.top
    below = L.ideal_bits
    count = {L.identity: 1}
    for mu in L.elements[1:]:
        if below[mu] & ~below[w]:
            continue
        count[mu] = sum(count.get(nu, 0) for _, nu in L.down[mu])
    return count[w]


def load_poset(spec: str) -> Poset:
    """A catalog name or a path to a poset JSON file."""
    if os.path.exists(spec):
        with open(spec) as fh:
            try:
                return Poset.from_json(json.load(fh))
            except (ValueError, KeyError, TypeError) as exc:
                raise PosetError(f"invalid poset file {spec}: {exc}") from exc
    return catalog_poset(spec)
