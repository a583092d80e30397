from fractions import Fraction

import pytest

import oracle
from minuscule_cy.catalog import catalog_poset
from minuscule_cy.invariants import parse_degrees
from minuscule_cy.periods import (count_hasse_paths, dual_graph, period, period_binomial,
                                  period_flow, sigma_period)
from minuscule_cy.posets import Poset, PosetError, chain

CASES = [("sigma", "1x9"), ("rect-2-3", "1x5"), ("rect-2-3", "1,2,2"), ("rect-2-4", "1x6"),
         ("chain-4", "5"), ("og510", "1^6,2"), ("quadric-6", "1x6")]


@pytest.mark.parametrize("name,degs", CASES)
def test_flow_equals_binomial(name, degs):
    P = catalog_poset(name)
    d = parse_degrees(degs)
    assert period_flow(P, d, 5) == period_binomial(P, d, 5)


def test_sigma_displayed_sum():
    s = period(catalog_poset("sigma"), (1,) * 9, 12)
    assert [int(c) for c in s] == [oracle.sigma_displayed_sum(m) for m in range(12)]
    assert s == sigma_period(12)


def test_quintic():
    s = period(catalog_poset("chain-4"), (5,), 10)
    assert [int(c) for c in s] == oracle.multinomial_period((5,), 5, 10)
    assert list(s)[:3] == [1, 120, 113400]


def test_linear_coefficient_counts_paths():
    for name in ["sigma", "rect-2-4", "og510", "op2"]:
        P = catalog_poset(name)
        h = P.heights().h_P
        s = period(P, (1,) * h, 2)
        assert s[1] == count_hasse_paths(P) == oracle.hasse_paths(list(P.elements), list(P.covers))
    assert count_hasse_paths(catalog_poset("sigma")) == 7


def test_dual_graph_euler_count():
    for name in ["sigma", "rect-2-3", "rect-2-4", "og510", "op2", "chain-4"]:
        P = catalog_poset(name)
        B = dual_graph(P)
        bp = P.bounded()
        # the Hasse edges plus the edge through infinity separating b_L from b_R
        assert len(B.faces) == (len(bp.edges) + 1) - (len(P) + 2) + 2
        assert B.b_L != B.b_R
    assert len(dual_graph(catalog_poset("sigma")).interior) == 4
    B = dual_graph(chain(4))
    assert len(B.faces) == 2 and B.interior == []


def test_integrality_with_unit_degrees():
    s = period(catalog_poset("og510"), (1,) * 8, 8)
    assert all(c.denominator == 1 and c > 0 for c in s)


def test_errors():
    with pytest.raises(ValueError):
        period(catalog_poset("sigma"), (1, 1), 3)
    with pytest.raises(PosetError):
        period(Poset(["a", "b", "c"], [("a", "b")]), (1, 1, 1), 3)
    with pytest.raises(ValueError):
        period(catalog_poset("sigma"), (1,) * 9, 3, method="other")
