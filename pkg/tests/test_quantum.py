from fractions import Fraction
from math import factorial

import pytest
import sympy

from minuscule_cy.ode import ThetaOperator
from minuscule_cy.quantum import flat_section_series, quantum_chevalley, quantum_operator
from minuscule_cy.roots import RootSystem
from minuscule_cy.schubert import WQLattice

theta = sympy.Symbol("theta")


def test_projective_space():
    op = quantum_operator("A4", 1)
    assert op.equal_up_to_scalar(ThetaOperator.from_polys([theta**5, -1]))


def test_grassmannian_g24():
    op = quantum_operator("A3", 2)
    assert op.equal_up_to_scalar(ThetaOperator.from_polys([theta**5, -2 * (2 * theta + 1)]))


def test_og510():
    op = quantum_operator("D5", 5)
    expected = ThetaOperator.from_polys([theta**11 * (theta - 1)**5,
                                         -theta**5 * (2 * theta + 1) * (17 * theta**2 + 17 * theta + 5), 1])
    assert op.equal_up_to_scalar(expected)


@pytest.mark.parametrize("family,node", [("A4", 2), ("D5", 5), ("E6", 1), ("D5", 1)])
def test_chevalley_grading(family, node):
    L = WQLattice(RootSystem(family), node)
    qc = quantum_chevalley(L)
    qc.check_homogeneous()
    M0, M1 = qc.matrix()
    # the classical part counts the Chevalley degree along saturated chains
    assert sum(map(sum, M0)) == len(L.covers())
    # one quantum term from the point class back to the bottom of the grading
    assert sum(map(sum, M1)) >= 1
    assert qc.index == L.poset.poset.heights().h_P


def test_flat_section_of_projective_space():
    qc = quantum_chevalley(WQLattice(RootSystem("A4"), 1))
    s = flat_section_series(qc, 8)
    # theta^5 - q is solved by sum q^m / m!^5
    assert list(s) == [Fraction(1, factorial(m) ** 5) for m in range(8)]
