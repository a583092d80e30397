"""Reproduction battery: recompute every headline number and compare it with
the versioned expected-values asset shipped in ``data/expected.json``.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import factorial

from .bps import bps_from_operator
from .catalog import catalog_colored, catalog_poset, default_catalog
from .hibi import facet_interior_table
from .invariants import CICYInstance, invariant_report, parse_degrees
from .ode import ThetaOperator, fit_operator, invert_and_conjugate, riemann_scheme
from .periods import count_hasse_paths, period, period_binomial, period_flow, sigma_period
from .quantum import quantum_operator
from .schubert import classify_cicy3, schubert_report

SECTIONS = ["combinatorics", "schubert", "classification", "invariants", "periods", "ode",
            "appendix", "monodromy", "bps"]

SIGMA_INVARIANTS = (33, 78, -102)


class ExpectedFileError(ValueError):
    pass


def load_expected(path: str | None = None) -> dict:
    """Parse and validate the expected-values asset."""
    try:
        if path is None:
            text = resources.files("minuscule_cy").joinpath("data/expected.json").read_text()
        else:
            with open(path) as fh:
                text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ExpectedFileError(f"cannot read expected values: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("version"), int) \
            or not isinstance(data.get("entries"), dict):
        raise ExpectedFileError("expected values need an integer 'version' and an 'entries' object")
    for key, entry in data["entries"].items():
        if not isinstance(entry, dict) or "value" not in entry or entry.get("section") not in SECTIONS:
            raise ExpectedFileError(f"malformed entry {key!r}")
        if entry.get("kind", "exact") not in ("exact", "set", "operator"):
            raise ExpectedFileError(f"unknown comparison kind in {key!r}")
        if entry.get("source") not in ("published", "derived"):
            raise ExpectedFileError(f"entry {key!r} needs source 'published' or 'derived'")
    return data


def operator_rows(op: ThetaOperator) -> list[str]:
    return op.normalized().factored_rows()


def values_match(kind: str, expected, actual) -> bool:
    if kind == "set":
        return sorted(map(json.dumps, expected)) == sorted(map(json.dumps, actual))
    if kind == "operator":
        try:
            return ThetaOperator.from_polys(expected).equal_up_to_scalar(ThetaOperator.from_polys(actual))
        except Exception:
            return False
    return json.loads(json.dumps(expected)) == json.loads(json.dumps(actual))


# ----------------------------------------------------------------------------
# sections
# ----------------------------------------------------------------------------


def _birkhoff_round_trip(name: str) -> bool:
    P = catalog_poset(name)
    Q = P.order_ideal_lattice().join_irreducibles()
    return P.isomorphic(Q)


def section_combinatorics(opts) -> dict:
    P = catalog_poset("sigma")
    L = P.order_ideal_lattice()
    hf = P.heights()
    return {
        "sigma.order_ideals": len(L),
        "sigma.pure": hf.pure,
        "sigma.h_P": hf.h_P,
        "sigma.maximal_chains": L.count_maximal_chains(),
        "sigma.hasse_edges": len(P.bounded().edges),
        "catalog.birkhoff_round_trip": all(_birkhoff_round_trip(n) for n in default_catalog()),
    }


def section_schubert(opts) -> dict:
    rep = schubert_report(catalog_colored("sigma"))
    comps = rep.singular_components
    return {
        "sigma.gorenstein": rep.gorenstein,
        "sigma.fano_index": rep.fano_index,
        "sigma.locally_factorial": rep.locally_factorial,
        "sigma.essential_hole_colors": [c.color for c in comps],
        "sigma.singular_dimensions": [c.dimension for c in comps],
        "sigma.singular_degrees": [c.degree for c in comps],
    }


def section_classification(opts) -> dict:
    return {"cicy3.classes": [c.name for c in classify_cicy3()]}


def section_invariants(opts) -> dict:
    P = catalog_poset("sigma")
    rep = invariant_report(CICYInstance(P, parse_degrees("1x9")))
    table = facet_interior_table(P, [8, 9])
    return {
        "X.deg": rep.deg,
        "X.c2H": rep.c2H,
        "X.chi": rep.chi,
        "X.h21": rep.h21,
        "Y.h11": rep.h11_Y,
        "Y.h21": rep.h21_Y,
        "Y.chi": rep.chi_Y,
        "X0.nodes": rep.nodes,
        "facets.interior_sum": sum(r["counts"][9] - 9 * r["counts"][8] for r in table),
        "facets.some_l9_equals_3": any(r["counts"][9] == 3 for r in table),
    }


PERIOD_CASES = [("sigma", "1x9"), ("rect-2-3", "1x5"), ("rect-2-4", "1x6"), ("chain-4", "5")]


def section_periods(opts) -> dict:
    agree, a1 = True, True
    for name, degs in PERIOD_CASES:
        P = catalog_poset(name)
        d = parse_degrees(degs)
        b = period_binomial(P, d, 5)
        agree &= b == period_flow(P, d, 5)
        if all(x == 1 for x in d):
            a1 &= b[1] == count_hasse_paths(P)
    quintic = period(catalog_poset("chain-4"), (5,), 8)
    sig = period(catalog_poset("sigma"), parse_degrees("1x9"), 8)
    return {
        "period.flow_equals_binomial": agree,
        "period.a1_counts_hasse_paths": a1,
        "period.quintic_is_multinomial": all(quintic[m] == Fraction(factorial(5 * m), factorial(m) ** 5)
                                             for m in range(8)),
        "period.sigma_matches_displayed_sum": sig == sigma_period(8),
        "period.sigma_first_terms": [int(c) for c in sig],
    }


def sigma_operator(terms: int = 50) -> ThetaOperator:
    return fit_operator(sigma_period(terms), 4, 6).normalized()


def section_ode(opts) -> dict:
    op = sigma_operator()
    rs = riemann_scheme(op)
    exps = {p.label: [str(e) for e in p.exponents] for p in rs.points}
    return {
        "sigma.picard_fuchs": operator_rows(op),
        "sigma.discriminant": rs.discriminant,
        "sigma.exponents": exps,
        "sigma.fuchs_relation": rs.fuchs_sum() == rs.fuchs_expected(op.order),
    }


def _fit_period(name: str, degs: str, order: int, degree: int, terms: int = 40) -> ThetaOperator:
    s = period(catalog_poset(name), parse_degrees(degs), terms)
    return fit_operator(s, order, degree).normalized()


def section_appendix(opts) -> dict:
    return {
        "og510.quantum": operator_rows(quantum_operator("D5", 5)),
        "op2.quantum": operator_rows(quantum_operator("E6", 1)),
        "og510_cy3.picard_fuchs": operator_rows(_fit_period("og510", "1^6,2", 4, 4)),
        "og510_k3.picard_fuchs": operator_rows(_fit_period("og510", "1x8", 3, 4)),
        "op2_cy4.picard_fuchs": operator_rows(_fit_period("op2", "1x12", 5, 4)),
    }


def section_monodromy(opts) -> dict:
    from .monodromy import (MonodromyError, invariant_symplectic_form, integral_basis_search,
                            integrality_defect, identity, monodromy_report, mirror_pair,
                            round_matrix, product_in_order, MonodromyComputation)

    digits = opts.get("digits", 120)
    mc = MonodromyComputation(sigma_operator(), digits=digits)
    norm_x, mats = integral_basis_search(mc, *SIGMA_INVARIANTS)
    rep = monodromy_report(mc, norm_x, mats)
    order = _loop_order(mc)
    prod_x = product_in_order(rep.matrices, order)
    mp = mirror_pair(mc, c=-1)
    hits = mp.z_invariant_scan(range(1, 51))
    if not hits:
        raise MonodromyError("no integral symplectic basis at the second MUM point")
    norm_z = hits[0]
    Z = mp.z_integral(norm_z)
    S = mp.connection(norm_x, norm_z)
    defect = max([rep.defect, integrality_defect(mc.ctx, S)] +
                 [integrality_defect(mc.ctx, M) for M in Z.values()])
    Zr = {lab: round_matrix(mc.ctx, M) for lab, M in Z.items()}
    S_int = round_matrix(mc.ctx, S)
    # Pi^X = N_z S_xz (z Pi^Z): the sign N_z is fixed by making the first
    # nonzero entry of S_xz positive
    n_z = 1 if next(v for row in S_int for v in row if v) > 0 else -1
    opts.setdefault("_artifacts", {})["monodromy"] = {
        "x": rep.to_json(), "z_matrices": Zr, "S_xz": [[n_z * v for v in row] for row in S_int],
        "N_z": n_z, "z_normalization": norm_z.to_json(), "loop_order": order}
    form = invariant_symplectic_form(list(rep.matrices.values()) + list(Zr.values()))
    return {
        "X.a": str(norm_x.a),
        "Z.a": str(norm_z.a),
        "mirror.c": str(mp.c),
        "Z.invariants": [[n.deg, n.c2H, n.chi] for n in hits],
        "X.matrices": {lab: rep.matrices[lab] for lab in order},
        "Z.matrices": {lab: Zr[lab] for lab in order},
        "connection.S_xz": [[n_z * v for v in row] for row in S_int],
        "connection.N_z": n_z,
        "loops.product_is_identity": prod_x == identity(4),
        "loops.common_symplectic_form": form is not None,
        "integrality.below_1e-20": defect < 1e-20,
        "apparent.points_trivial": all(rep.matrices[lab] == identity(4)
                                       for lab in rep.labels if lab not in order),
    }


def _loop_order(mc) -> list[str]:
    """Non-apparent points in the order zeta_1, zeta_2, 0, zeta_3, ... by real part, then infinity."""
    pts = [p for p in mc.plan.points if not p.apparent and p.value is not None]
    pts.sort(key=lambda p: p.value.real)
    return [p.label for p in pts] + [p.label for p in mc.plan.points if p.value is None]


def section_bps(opts) -> dict:
    op = sigma_operator()
    opz = invert_and_conjugate(op, Fraction(-1), var="z")
    return {
        "X.genus0": bps_from_operator(op, 33, 11),
        "Z.genus0": bps_from_operator(opz, 21, 10),
    }


SECTION_FUNCS = {
    "combinatorics": section_combinatorics,
    "schubert": section_schubert,
    "classification": section_classification,
    "invariants": section_invariants,
    "periods": section_periods,
    "ode": section_ode,
    "appendix": section_appendix,
    "monodromy": section_monodromy,
    "bps": section_bps,
}


# ----------------------------------------------------------------------------
# runner
# ----------------------------------------------------------------------------


@dataclass
class CheckResult:
    key: str
    section: str
    source: str
    passed: bool
    expected: object
    actual: object

    def to_json(self) -> dict:
        out = {"key": self.key, "section": self.section, "source": self.source, "pass": self.passed}
        if not self.passed:
            out["expected"] = self.expected
            out["actual"] = self.actual
        return out


@dataclass
class ReproductionReport:
    version: int
    results: list[CheckResult] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {"version": self.version, "passed": self.passed, "skipped": self.skipped,
                "timings": {k: round(v, 2) for k, v in self.timings.items()},
                "results": [r.to_json() for r in self.results]}

    def table(self) -> str:
        lines = [f"{'section':<15} {'key':<38} {'source':<8} result"]
        for r in self.results:
            lines.append(f"{r.section:<15} {r.key:<38} {r.source:<8} {'pass' if r.passed else 'FAIL'}")
            if not r.passed:
                lines.append(f"    expected: {json.dumps(r.expected)}")
                lines.append(f"    actual:   {json.dumps(r.actual)}")
        for s in self.skipped:
            lines.append(f"{s:<15} {'(skipped)':<38}")
        lines.append("ALL PASS" if self.passed else "MISMATCH")
        return "\n".join(lines)


def run_sections(sections, opts=None, expected: dict | None = None) -> ReproductionReport:
    opts = dict(opts or {})
    expected = expected or load_expected()
    report = ReproductionReport(expected["version"])
    entries = expected["entries"]
    for sec in SECTIONS:
        if sec not in sections:
            report.skipped.append(sec)
            continue
        t = time.perf_counter()
        values = SECTION_FUNCS[sec](opts)
        report.timings[sec] = time.perf_counter() - t
        for key, entry in entries.items():
            if entry["section"] != sec:
                continue
            actual = values.get(key, "<missing>")
            ok = values_match(entry.get("kind", "exact"), entry["value"], actual)
            report.results.append(CheckResult(key, sec, entry["source"], ok, entry["value"], actual))
    return report


__all__ = ["SECTIONS", "ExpectedFileError", "load_expected", "values_match", "run_sections",
           "ReproductionReport", "CheckResult", "sigma_operator", "operator_rows", "SECTION_FUNCS"]
