"""Property suites: brute-force Ehrhart equivalence, degree triple consistency,
distributivity sampling, Birkhoff round trips, JSON round trips and gauge
invariance of the genus zero pipeline.
"""
from fractions import Fraction
from math import factorial

import networkx as nx
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracle
from minuscule_cy.bps import bps_from_period
from minuscule_cy.catalog import catalog_poset, chevalley_degree, default_catalog
from minuscule_cy.hibi import ehrhart_polynomial, lattice_points, strict_points
from minuscule_cy.ode import ThetaOperator, fit_operator, invert_and_conjugate
from minuscule_cy.periods import period
from minuscule_cy.posets import Poset
from minuscule_cy.series import RationalPowerSeries


@st.composite
def posets(draw, max_size=6):
    n = draw(st.integers(min_value=1, max_value=max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_edges_from((j, i) for i, j in chosen)  # j covers-or-exceeds i
    red = nx.transitive_reduction(g)
    return Poset([f"p{i}" for i in range(n)], [(f"p{u}", f"p{v}") for u, v in red.edges])


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(posets(), st.integers(min_value=0, max_value=4))
def test_ehrhart_brute_force(P, k):
    els, cov = list(P.elements), list(P.covers)
    assert lattice_points(P, k) == oracle.monotone_maps(els, cov, k)
    assert strict_points(P, k) == oracle.monotone_maps(els, cov, k, strict=True)


@settings(max_examples=40, deadline=None)
@given(posets())
def test_ehrhart_polynomial_interpolates(P):
    coeffs = ehrhart_polynomial(P)
    k = len(P) + 2
    assert sum(c * k ** i for i, c in enumerate(coeffs)) == lattice_points(P, k)
    assert coeffs[-1] * factorial(len(P)) == oracle.linear_extensions(list(P.elements), list(P.covers))


def test_degree_triple_on_catalog():
    for name in default_catalog():
        P = catalog_poset(name)
        chains = P.order_ideal_lattice().count_maximal_chains()
        assert chains == chevalley_degree(name)
        assert ehrhart_polynomial(P)[-1] * factorial(len(P)) == chains


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(default_catalog()), st.data())
def test_distributivity_sampling(name, data):
    L = catalog_poset(name).order_ideal_lattice()
    ideals = L.ideals
    a, b, c = (data.draw(st.sampled_from(ideals)) for _ in range(3))
    assert L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c))
    assert L.join(a, L.meet(b, c)) == L.meet(L.join(a, b), L.join(a, c))
    assert L.leq(L.meet(a, b), a) and L.leq(a, L.join(a, b))


@settings(max_examples=40, deadline=None)
@given(posets())
def test_birkhoff_round_trip_random(P):
    L = P.order_ideal_lattice()
    assert P.isomorphic(L.join_irreducibles())
    assert len(L) == len(oracle.order_ideals(list(P.elements), list(P.covers)))


@settings(max_examples=30, deadline=None)
@given(posets())
def test_poset_json_round_trip(P):
    Q = Poset.from_json(P.to_json())
    assert Q.covers == P.covers and Q.elements == P.elements


def quintic_period(N):
    return period(catalog_poset("chain-4"), (5,), N)


QUINTIC_N0 = [2875, 609250, 317206375]


@settings(max_examples=8, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda x: x != 0))
def test_bps_gauge_invariance(a, scale):
    """Replacing the period by ``scale * (1 + a x) * period`` leaves the BPS numbers unchanged."""
    N = 40
    w = quintic_period(N)
    f = RationalPowerSeries([1, a] + [0] * (N - 2))
    op, n0 = bps_from_period((w * f).scale(scale), 5, 3, max_degree=8)
    assert n0 == QUINTIC_N0


@settings(max_examples=10, deadline=None)
@given(st.fractions(min_value=-7, max_value=7, max_denominator=5).filter(lambda x: x != 0))
def test_inversion_is_an_involution(c):
    op = fit_operator(quintic_period(30), 4, 2)
    back = invert_and_conjugate(invert_and_conjugate(op, c), c, var="x")
    assert back.equal_up_to_scalar(op)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=4), min_size=1, max_size=4))
def test_operator_json_round_trip(rows):
    try:
        op = ThetaOperator([list(r) for r in rows])
    except ValueError:
        return
    assert ThetaOperator.from_json(op.to_json()).c == op.c


@settings(max_examples=30, deadline=None)
@given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=12))
def test_series_json_round_trip(coeffs):
    s = RationalPowerSeries(coeffs)
    assert RationalPowerSeries.from_json(s.to_json()) == s
