from fractions import Fraction

import pytest
import sympy

from minuscule_cy.monodromy import (MonodromyComputation, MonodromyError, SymplecticNormalization,
                                    a_candidates, integral_basis_search, invariant_symplectic_form,
                                    is_maximally_unipotent, is_symplectic_family, make_context,
                                    monodromy_report, product_in_order, trivial_product_orders)
from minuscule_cy.ode import OperatorError, ThetaOperator

theta = sympy.Symbol("theta")
QUINTIC = ThetaOperator.from_polys([theta**4, -5 * (5 * theta + 1) * (5 * theta + 2) * (5 * theta + 3) * (5 * theta + 4)])


@pytest.fixture(scope="module")
def quintic():
    mc = MonodromyComputation(QUINTIC, digits=30)
    norm, mats = integral_basis_search(mc, 5, 50, -200)
    return mc, norm, monodromy_report(mc, norm, mats)


def test_quintic_integral_basis(quintic):
    mc, norm, rep = quintic
    assert norm.a == Fraction(-1, 2)
    assert rep.defect < 1e-25
    assert rep.matrices["zeta1"] == [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert rep.matrices["0"] == [[1, 0, 0, 0], [1, 1, 0, 0], [2, 5, 1, 0], [-5, -3, -1, 1]]


def test_quintic_relations(quintic):
    mc, norm, rep = quintic
    assert product_in_order(rep.matrices, ["0", "zeta1", "oo"]) == [[int(i == j) for j in range(4)] for i in range(4)]
    assert ("0", "zeta1", "oo") in trivial_product_orders(rep.matrices)
    form = invariant_symplectic_form(list(rep.matrices.values()))
    assert form == [[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]]
    assert is_maximally_unipotent(rep.matrices["0"])
    assert is_symplectic_family(list(rep.matrices.values()))


def test_wrong_invariants_fail(quintic):
    mc, _, _ = quintic
    with pytest.raises(MonodromyError):
        integral_basis_search(mc, 5, 50, -198, candidates=[Fraction(-1, 2)])


def test_transvection_primitivity():
    # with the quintic MUM matrix, I + 3 e_03 still preserves a unimodular form
    # but is not a transvection along a primitive vector
    mum = [[1, 0, 0, 0], [1, 1, 0, 0], [2, 5, 1, 0], [-5, -3, -1, 1]]
    M = [[1, 0, 0, 3], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert invariant_symplectic_form([mum, M]) is not None
    assert not is_symplectic_family([mum, M])
    M[0][3] = 1
    assert is_symplectic_family([mum, M])


def test_normalization_transform_shape():
    ctx = make_context(30)
    T = SymplecticNormalization(33, 78, -102, Fraction(-1, 2)).transform(ctx)
    assert len(T) == 4 and all(len(r) == 4 for r in T)
    assert SymplecticNormalization(33, 78, -102, Fraction(-1, 2)).kappa == -33


def test_candidates_start_near_zero():
    c = a_candidates(33)
    assert Fraction(-1, 2) in c and Fraction(33, 2) in c
    assert [abs(a) for a in c] == sorted(abs(a) for a in c)


def test_non_mum_rejected():
    with pytest.raises(OperatorError):
        MonodromyComputation(ThetaOperator.from_polys([theta**2 * (theta - 1) * (theta - 2), -1]), digits=20)


def test_precision_shortfall_is_reported(quintic):
    from minuscule_cy.monodromy import PrecisionError
    mc, _, _ = quintic
    with pytest.raises(PrecisionError):
        integral_basis_search(mc, 5, 50, -200, tol=1e-200)
