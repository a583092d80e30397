"""Acceptance criteria 1 to 11, one test each, with a pass/fail line per criterion.

Printed values are compared with the expected-values asset; runtime budgets
are asserted.  Run directly (``python tests/test_acceptance.py``) or under
pytest, where the lines appear in the terminal summary.
"""
from __future__ import annotations

import functools
import sys
import time
from fractions import Fraction
from math import factorial

import oracle
from minuscule_cy.catalog import catalog_poset, default_catalog
from minuscule_cy.invariants import CICYInstance, invariant_report, parse_degrees
from minuscule_cy.periods import period
from minuscule_cy.reproduce import SECTION_FUNCS, load_expected, values_match

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script outside pytest
    ACCEPTANCE_LINES = []

EXPECTED = load_expected()["entries"]


def criterion(number: int, title: str, budget: float | None = None):
    """Record ``criterion N: PASS|FAIL`` with the elapsed time, enforcing ``budget`` seconds."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            t = time.perf_counter()
            try:
                fn(*args, **kwargs)
                elapsed = time.perf_counter() - t
                if budget is not None:
                    assert elapsed < budget, f"took {elapsed:.1f} s, budget {budget} s"
            except BaseException as exc:
                ACCEPTANCE_LINES.append(f"criterion {number}: FAIL  {title}  ({type(exc).__name__}: {exc})")
                raise
            ACCEPTANCE_LINES.append(f"criterion {number}: PASS  {title}  [{elapsed:.1f} s]")
        return run

    return wrap


def check_section(section: str, values: dict):
    for key, entry in EXPECTED.items():
        if entry["section"] == section:
            assert key in values, f"{key} not computed"
            assert values_match(entry.get("kind", "exact"), entry["value"], values[key]), \
                f"{key}: expected {entry['value']!r}, got {values[key]!r}"


@criterion(1, "combinatorial core of Sigma and Birkhoff round trips", budget=5)
def test_criterion_1_combinatorics():
    t = time.perf_counter()
    P = catalog_poset("sigma")
    L = P.order_ideal_lattice()
    hf = P.heights()
    assert len(L) == 21 and hf.pure and hf.h_P == 9
    assert L.count_maximal_chains() == 33
    assert len(P.bounded().edges) == 17
    assert time.perf_counter() - t < 1
    for name in default_catalog():
        t = time.perf_counter()
        Q = catalog_poset(name)
        assert Q.isomorphic(Q.order_ideal_lattice().join_irreducibles())
        assert time.perf_counter() - t < 1
    check_section("combinatorics", SECTION_FUNCS["combinatorics"]({}))


@criterion(2, "Schubert analysis of Sigma")
def test_criterion_2_schubert():
    check_section("schubert", SECTION_FUNCS["schubert"]({}))


@criterion(3, "classification of smooth CICY threefolds", budget=60)
def test_criterion_3_classification():
    values = SECTION_FUNCS["classification"]({})
    assert len(values["cicy3.classes"]) == 12
    check_section("classification", values)


@criterion(4, "invariants of Sigma(1^9) and intermediates", budget=60)
def test_criterion_4_invariants():
    check_section("invariants", SECTION_FUNCS["invariants"]({}))
    rep = invariant_report(CICYInstance(catalog_poset("sigma"), parse_degrees("1x9")))
    assert (rep.deg, rep.c2H, rep.chi) == (33, 78, -102)


@criterion(5, "period engine cross checks")
def test_criterion_5_periods():
    values = SECTION_FUNCS["periods"]({})
    check_section("periods", values)
    q = period(catalog_poset("chain-4"), (5,), 10)
    assert [int(c) for c in q] == oracle.multinomial_period((5,), 5, 10)
    assert all(q[m] == Fraction(factorial(5 * m), factorial(m) ** 5) for m in range(10))


@criterion(6, "Picard-Fuchs recovery and Riemann scheme", budget=60)
def test_criterion_6_ode():
    check_section("ode", SECTION_FUNCS["ode"]({}))


@criterion(7, "quantum operators and appendix Picard-Fuchs operators", budget=300)
def test_criterion_7_appendix():
    check_section("appendix", SECTION_FUNCS["appendix"]({}))


@criterion(8, "monodromy at 120 digits, integral bases, S_xz and the degree scan", budget=1800)
def test_criterion_8_monodromy():
    check_section("monodromy", SECTION_FUNCS["monodromy"]({"digits": 120}))


@criterion(9, "genus zero BPS numbers on both sides", budget=300)
def test_criterion_9_bps():
    check_section("bps", SECTION_FUNCS["bps"]({}))


def test_criterion_10_out_of_scope():
    ACCEPTANCE_LINES.append("criterion 10: N/A   higher genus BPS columns are out of scope (no criterion)")


@criterion(11, "property suites")
def test_criterion_11_properties():
    import test_properties as tp
    tp.test_ehrhart_brute_force()
    tp.test_ehrhart_polynomial_interpolates()
    tp.test_degree_triple_on_catalog()
    tp.test_distributivity_sampling()
    tp.test_birkhoff_round_trip_random()
    tp.test_bps_gauge_invariance()


if __name__ == "__main__":
    import os
    sys.path.insert(0, os.path.dirname(__file__))
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except Exception:
                failed += 1
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        print(line)
    sys.exit(1 if failed else 0)
