from fractions import Fraction

import pytest
import sympy

import oracle
from minuscule_cy.catalog import catalog_poset
from minuscule_cy.ode import (FitError, OperatorError, ThetaOperator, fit_operator, frobenius_basis,
                              frobenius_check, invert_and_conjugate, is_mum, riemann_scheme)
from minuscule_cy.periods import period, sigma_period
from minuscule_cy.series import RationalPowerSeries

theta = sympy.Symbol("theta")

SIGMA_ROWS = [121 * theta**4,
              -77 * (130 * theta**4 + 266 * theta**3 + 210 * theta**2 + 77 * theta + 11),
              -(32126 * theta**4 + 89990 * theta**3 + 103725 * theta**2 + 55253 * theta + 11198),
              -(28723 * theta**4 + 74184 * theta**3 + 63474 * theta**2 + 20625 * theta + 1716),
              -7 * (1135 * theta**4 + 2336 * theta**3 + 1881 * theta**2 + 713 * theta + 110),
              -49 * (theta + 1)**4]


@pytest.fixture(scope="module")
def sigma_op():
    return fit_operator(sigma_period(50), 4, 6)


def test_sigma_fit(sigma_op):
    assert sigma_op.equal_up_to_scalar(ThetaOperator.from_polys(SIGMA_ROWS))
    assert (sigma_op.order, sigma_op.degree) == (4, 5)
    # annihilates the series, checked with an independent evaluator
    coeffs = list(sigma_period(40))
    assert all(v == 0 for v in oracle.apply_theta_operator(sigma_op.c, coeffs, 40))


def test_quintic_fit():
    s = period(catalog_poset("chain-4"), (5,), 30)
    op = fit_operator(s, 4, 2).normalized()
    expected = ThetaOperator.from_polys([theta**4, -5 * (5 * theta + 1) * (5 * theta + 2) * (5 * theta + 3) * (5 * theta + 4)])
    assert op.equal_up_to_scalar(expected)


def test_fit_fails_within_small_bounds():
    with pytest.raises(FitError):
        fit_operator(sigma_period(50), 3, 3)


def test_sigma_scheme(sigma_op):
    rs = riemann_scheme(sigma_op)
    cubic = "x**3 + 159*x**2 + 84*x - 1"
    assert rs.discriminant == ["(7*x + 11)^2", cubic]
    ex = {p.label: [str(e) for e in p.exponents] for p in rs.points}
    assert ex["0"] == ["0"] * 4
    assert ex["-11/7"] == ["0", "1", "3", "4"]
    assert ex["oo"] == ["1"] * 4
    for k in (1, 2, 3):
        assert ex[f"root{k}[{cubic}]"] == ["0", "1", "1", "2"]
    assert rs.fuchs_sum() == rs.fuchs_expected(4) == 24


def test_quintic_scheme():
    op = ThetaOperator.from_polys([theta**4, -5 * (5 * theta + 1) * (5 * theta + 2) * (5 * theta + 3) * (5 * theta + 4)])
    rs = riemann_scheme(op)
    assert [str(e) for e in rs.point("oo").exponents] == ["1/5", "2/5", "3/5", "4/5"]
    assert [str(e) for e in rs.point("1/3125").exponents] == ["0", "1", "1", "2"]


def test_frobenius_basis(sigma_op):
    fb = frobenius_basis(sigma_op, 12)
    assert fb.omega0 == sigma_period(12)
    assert frobenius_check(sigma_op, fb)


def test_quintic_frobenius():
    op = ThetaOperator.from_polys([theta**4, -5 * (5 * theta + 1) * (5 * theta + 2) * (5 * theta + 3) * (5 * theta + 4)])
    fb = frobenius_basis(op, 4)
    assert list(fb.regular[1])[:3] == [0, 770, 810225]


def test_inversion(sigma_op):
    opz = invert_and_conjugate(sigma_op, Fraction(-1))
    assert opz.var == "z" and is_mum(opz)
    assert opz.normalized().c[0][-1] == 49
    back = invert_and_conjugate(opz, Fraction(-1), var="x")
    assert back.equal_up_to_scalar(sigma_op)


def test_json_round_trip(sigma_op):
    data = sigma_op.to_json()
    assert all(isinstance(c, str) for row in data["coeffs"] for c in row)
    assert ThetaOperator.from_json(data).c == sigma_op.c


def test_irregular_rejected():
    with pytest.raises(OperatorError):
        riemann_scheme(ThetaOperator.from_polys([theta**2, 1]))


def test_apply_matches_oracle():
    op = ThetaOperator.from_polys([theta**2 - 1, 3 * theta + 2])
    s = RationalPowerSeries([Fraction(n + 1, n + 2) for n in range(10)])
    assert list(op.apply(s)) == oracle.apply_theta_operator(op.c, list(s), 10)
