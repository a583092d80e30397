import time

import pytest

from minuscule_cy.catalog import catalog_colored
from minuscule_cy.roots import RootSystem, RootSystemError
from minuscule_cy.schubert import (SIGMA_WORD, WQLattice, classify_cicy3, partitions_into,
                                   peaks_holes, schubert_report)

# dimensions of the minuscule representations
ORBIT_SIZES = [("A4", 1, 5), ("A4", 2, 10), ("A5", 3, 20), ("D5", 1, 10), ("D5", 5, 16),
               ("D6", 6, 32), ("E6", 1, 27), ("E7", 7, 56)]


@pytest.mark.parametrize("family,node,size", ORBIT_SIZES)
def test_orbit_sizes(family, node, size):
    L = WQLattice(RootSystem(family), node)
    assert len(L) == size
    # covers are simple reflections raising the length by one
    for mu in L.elements:
        for i, nu in L.up[mu]:
            assert L.length[nu] == L.length[mu] + 1
            assert L.rs.reflect_weight(i, mu) == nu


def test_non_minuscule_node_rejected():
    with pytest.raises(RootSystemError):
        WQLattice(RootSystem("E6"), 2)


def test_coloring_restricts():
    L = WQLattice(RootSystem("E6"), 1)
    whole = L.poset
    cp = L.minuscule_poset(SIGMA_WORD)
    assert set(cp.poset.elements) <= set(whole.poset.elements)
    assert all(cp.color[u] == whole.color[u] for u in cp.poset.elements)
    assert cp.poset.isomorphic(whole.poset.induced(cp.poset.elements))


def test_sigma_report():
    rep = schubert_report(catalog_colored("sigma"))
    assert rep.dimension == 12 and rep.degree == 33
    assert rep.gorenstein and rep.fano_index == 9 and rep.locally_factorial
    assert len(rep.essential_holes) == 1
    (comp,) = rep.singular_components
    assert comp.color == 2 and comp.dimension == 5 and comp.degree == 1 and comp.codim == 7


@pytest.mark.parametrize("name", ["chain-4", "rect-2-3", "rect-3-3", "og510", "op2", "quadric-6", "e7"])
def test_homogeneous_spaces_are_smooth(name):
    rep = schubert_report(catalog_colored(name))
    assert rep.smooth and rep.gorenstein and rep.locally_factorial


def test_grassmannian_schubert_divisor():
    # the Schubert divisor of G(2,4) is a quadric cone with an isolated singular point
    L = WQLattice(RootSystem("A3"), 2)
    w = next(mu for mu in L.elements if L.length[mu] == 3)
    rep = schubert_report(L.minuscule_poset(w))
    assert rep.degree == 2
    (comp,) = rep.singular_components
    assert comp.dimension == 0 and comp.degree == 1
    peaks, holes, essential = peaks_holes(L.minuscule_poset(w))
    assert len(peaks) == 2 and holes == essential


def test_partitions():
    assert partitions_into(9, 5) == [(1, 1, 1, 1, 5), (1, 1, 1, 2, 4), (1, 1, 1, 3, 3),
                                     (1, 1, 2, 2, 3), (1, 2, 2, 2, 2)]


def test_classification():
    t = time.perf_counter()
    classes = classify_cicy3()
    assert time.perf_counter() - t < 60
    names = {c.name for c in classes}
    assert names == {"P^4(5)", "P^5(2,4)", "P^5(3^2)", "P^6(2^2,3)", "P^7(2^4)",
                     "G(2,5)(1,2^2)", "G(2,5)(1^2,3)", "G(2,6)(1^4,2)", "G(3,6)(1^6)",
                     "G(2,7)(1^7)", "OG(5,10)(1^6,2)", "Sigma(1^9)"}
    sigma = next(c for c in classes if c.name == "Sigma(1^9)")
    L = WQLattice(RootSystem("E6"), 1)
    target = L.element_from_word(SIGMA_WORD)
    assert any(r.type == "E6" and L.element_from_word(r.word) == target for r in sigma.realizations)
    assert not any(r.homogeneous for r in sigma.realizations)
