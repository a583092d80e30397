import pytest

from minuscule_cy.catalog import catalog_poset
from minuscule_cy.invariants import (CICYInstance, InstanceError, c2H, degree_ci, euler_number,
                                     invariant_report, node_count, parse_degrees, stringy_h1)

# (deg, c2.H, chi) of the classical complete intersection Calabi-Yau threefolds
CLASSICAL = [
    ("chain-4", "5", (5, 50, -200)),
    ("chain-5", "2,4", (8, 56, -176)),
    ("chain-5", "3,3", (9, 54, -144)),
    ("chain-6", "2,2,3", (12, 60, -144)),
    ("chain-7", "2x4", (16, 64, -128)),
    ("rect-2-3", "1,2,2", (20, 68, -120)),
    ("rect-2-3", "1,1,3", (15, 66, -150)),
    ("rect-2-4", "1x4,2", (28, 76, -116)),
    ("rect-3-3", "1x6", (42, 84, -96)),
    ("rect-2-5", "1x7", (42, 84, -98)),
]


@pytest.mark.parametrize("name,degs,expected", CLASSICAL)
def test_classical_threefolds(name, degs, expected):
    rep = invariant_report(CICYInstance(catalog_poset(name), parse_degrees(degs)))
    assert (rep.deg, rep.c2H, rep.chi) == expected
    assert rep.h11 == 1 and rep.chi == 2 * (rep.h11 - rep.h21)


def test_sigma_invariants():
    inst = CICYInstance(catalog_poset("sigma"), parse_degrees("1x9"))
    rep = invariant_report(inst)
    assert (rep.deg, rep.c2H, rep.chi, rep.h21) == (33, 78, -102, 52)
    assert (rep.h11_Y, rep.h21_Y, rep.chi_Y, rep.nodes) == (5, 37, -64, 19)
    st = stringy_h1(inst)
    assert st.facet_sum == 59
    assert degree_ci(inst) == 33 and c2H(inst) == 78 and node_count(inst) == 19
    assert euler_number(inst) == -102


def test_og510_degree():
    inst = CICYInstance(catalog_poset("og510"), parse_degrees("1^6,2"))
    assert degree_ci(inst) == 24


def test_parse_degrees():
    assert parse_degrees("1x9") == (1,) * 9
    assert parse_degrees("1^6,2") == (1,) * 6 + (2,)
    assert parse_degrees("1, 1, 2") == (1, 1, 2)


def test_bad_instances():
    P = catalog_poset("sigma")
    with pytest.raises(InstanceError):
        CICYInstance(P, (1, 1, 1))
    with pytest.raises(InstanceError):
        invariant_report(CICYInstance(catalog_poset("rect-2-3"), (1, 1, 1, 1, 1)))
