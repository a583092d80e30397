"""Command line entry point ``mcy``.

Exit codes: 0 success, 1 a computed result failed a check or mismatched the
expected values, 2 usage, configuration or catalog error, 3 the requested
numeric precision was insufficient.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .bps import BPSError, bps_from_operator
from .catalog import CatalogError, catalog_colored, load_poset
from .hibi import (facet_interior_table, interior_points_face, lattice_points, nef_partition,
                   singular_components)
from .invariants import CICYInstance, InstanceError, degree_ci, invariant_report, parse_degrees
from .ode import (FitError, OperatorError, ThetaOperator, fit_operator, invert_and_conjugate,
                  riemann_scheme)
from .periods import period
from .posets import PosetError, facet_contractions
from .quantum import QuantumError, quantum_operator
from .reproduce import SECTIONS, ExpectedFileError, load_expected, run_sections, sigma_operator
from .roots import RootSystem
from .schubert import WQLattice, classify_cicy3, schubert_report
from .series import RationalPowerSeries, SeriesError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

NAMED_OPERATORS = {"sigma-pf": sigma_operator}


class UsageError(ValueError):
    pass


@dataclass
class PipelineConfig:
    """Validated options shared by all commands."""

    command: str
    fmt: str = "json"
    output: str | None = None
    digits: int = 120
    flags: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.fmt not in ("json", "table"):
            raise UsageError("--format must be json or table")
        if self.digits < 15:
            raise UsageError("--digits must be at least 15")


# ----------------------------------------------------------------------------
# input helpers
# ----------------------------------------------------------------------------


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def load_operator(spec: str) -> ThetaOperator:
    """A named operator or an operator JSON file."""
    if spec in NAMED_OPERATORS:
        return NAMED_OPERATORS[spec]()
    data = _read_json(spec)
    try:
        return ThetaOperator.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid operator file {spec}: {exc}") from exc


def load_series(path: str) -> RationalPowerSeries:
    """A JSON array of rationals, or an object with a ``coeffs`` array."""
    data = _read_json(path)
    try:
        if isinstance(data, list):
            return RationalPowerSeries([Fraction(c) for c in data])
        return RationalPowerSeries.from_json(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid series file {path}: {exc}") from exc


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma separated integers, got {text!r}") from exc


def _instance(args) -> CICYInstance:
    return CICYInstance(load_poset(args.poset), parse_degrees(args.degrees))


def _colored(args):
    if args.poset:
        return catalog_colored(args.poset)
    if not args.type or args.node is None:
        raise UsageError("give --poset NAME or --type and --node")
    L = WQLattice(RootSystem(args.type), args.node)
    return L.minuscule_poset(args.word) if args.word else L.poset


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------


def cmd_minuscule(args, cfg):
    if args.action == "generate":
        L = WQLattice(RootSystem(args.type), args.node)
        cp = L.minuscule_poset(args.word) if args.word else L.poset
        return {"type": args.type, "node": args.node, "lattice_size": len(L),
                "words": [L.word_string(w) for w in L.elements],
                "poset": cp.poset.to_json(), "coloring": cp.color}
    if args.action == "report":
        return schubert_report(_colored(args)).to_json()
    guards = {"A": args.guard_a, "D": args.guard_d}
    return [c.to_json() for c in classify_cicy3(guards)]


def cmd_hibi(args, cfg):
    P = load_poset(args.poset)
    if args.action == "count":
        return {"k": args.k, "lattice_points": str(lattice_points(P, args.k))}
    if args.action == "face-interior":
        facets = facet_contractions(P.bounded())
        if args.edge is None:
            rows = facet_interior_table(P, [args.k])
            return [{"edge": r["edge"], "upper": r["upper"], "lower": r["lower"],
                     "interior_points": str(r["counts"][args.k])} for r in rows]
        if not 1 <= args.edge <= len(facets):
            raise UsageError(f"--edge must lie in 1..{len(facets)}")
        return {"edge": args.edge, "k": args.k,
                "interior_points": str(interior_points_face(facets[args.edge - 1], args.k))}
    if args.action == "singular":
        return [s.to_json() for s in singular_components(P)]
    if not args.degrees:
        raise UsageError("nef needs --degrees")
    part = nef_partition(P, parse_degrees(args.degrees))
    return part.to_json(P.bounded())


def cmd_invariants(args, cfg):
    return invariant_report(_instance(args)).to_json()


def cmd_period(args, cfg):
    s = period(load_poset(args.poset), parse_degrees(args.degrees), args.terms, args.method)
    return [str(c) for c in s]


def cmd_ode(args, cfg):
    if args.action == "fit":
        op = fit_operator(load_series(args.series), args.max_order, args.max_degree)
        out = op.normalized()
    elif args.action == "scheme":
        return riemann_scheme(load_operator(args.op)).to_json()
    else:
        out = invert_and_conjugate(load_operator(args.op), Fraction(args.c), var=args.var)
    data = out.to_json()
    data["factored"] = out.factored_rows()
    return data


def cmd_quantum(args, cfg):
    op = quantum_operator(args.type, args.node, max_degree=args.max_degree).normalized()
    data = op.to_json()
    data["var"] = "q"
    data["factored"] = op.factored_rows()
    return data


def _monodromy_setup(args, cfg):
    from .monodromy import MonodromyComputation, integral_basis_search

    op = load_operator(args.op)
    inv = parse_int_list(args.invariants)
    if len(inv) != 3:
        raise UsageError("--invariants needs deg,c2H,chi")
    mc = MonodromyComputation(op, digits=cfg.digits)
    norm, mats = integral_basis_search(mc, *inv)
    return mc, norm, mats


def cmd_monodromy(args, cfg):
    from .monodromy import (MonodromyError, integrality_defect, mirror_pair, monodromy_report,
                            round_matrix)

    mc, norm, mats = _monodromy_setup(args, cfg)
    rep = monodromy_report(mc, norm, mats)
    if args.action == "run":
        return rep.to_json()
    mp = mirror_pair(mc, c=Fraction(args.c))
    hits = mp.z_invariant_scan(range(1, args.max_deg + 1))
    if not hits:
        raise MonodromyError("no integral symplectic basis at the second MUM point")
    nz = hits[0]
    S = mp.connection(norm, nz)
    Z = mp.z_integral(nz)
    S_int = round_matrix(mc.ctx, S)
    n_z = 1 if next(v for row in S_int for v in row if v) > 0 else -1
    return {"x": rep.to_json(),
            "z": {"normalization": nz.to_json(), "candidates": [h.to_json() for h in hits],
                  "matrices": {lab: round_matrix(mc.ctx, M) for lab, M in Z.items()},
                  "defect": f"{max(integrality_defect(mc.ctx, M) for M in Z.values()):.3e}"},
            "c": str(mp.c), "N_z": n_z, "S_xz": [[n_z * v for v in row] for row in S_int],
            "S_defect": f"{integrality_defect(mc.ctx, S):.3e}",
            "operator_z": mp.op_z.to_json()}


def cmd_bps(args, cfg):
    if args.op:
        if args.deg is None:
            raise UsageError("--op needs --deg")
        op, deg = load_operator(args.op), args.deg
    else:
        if not (args.poset and args.degrees):
            raise UsageError("give --poset and --degrees, or --op and --deg")
        inst = _instance(args)
        inst.require_threefold()
        terms = max(40, args.dmax + 10)
        op = fit_operator(period(inst.poset, inst.degrees, terms), 4, args.max_degree).normalized()
        deg = degree_ci(inst)
        if args.side == "z":
            deg = args.deg if args.deg is not None else _z_degree(op, Fraction(args.c), cfg, inst)
    if args.side == "z":
        op = invert_and_conjugate(op, Fraction(args.c), var="z")
    n0 = bps_from_operator(op, deg, args.dmax)
    source = {"operator": args.op} if args.op else {"poset": args.poset, "degrees": args.degrees}
    source["side"] = args.side
    return {"deg": deg, **source, "genus0": {str(d + 1): str(n) for d, n in enumerate(n0)}}


def _z_degree(op, c: Fraction, cfg, inst) -> int:
    """Degree at the second MUM point, read off from the monodromy integrality scan."""
    from .monodromy import MonodromyComputation, integral_basis_search, mirror_pair

    rep = invariant_report(inst)
    mc = MonodromyComputation(op, digits=cfg.digits)
    integral_basis_search(mc, rep.deg, rep.c2H, rep.chi)
    hits = mirror_pair(mc, c=c).z_invariant_scan()
    if not hits:
        raise BPSError("no integral structure at the second MUM point; pass --deg")
    return hits[0].deg


def cmd_reproduce(args, cfg):
    unknown = set(args.skip) - set(SECTIONS)
    if unknown:
        raise UsageError(f"unknown sections {sorted(unknown)}; known: {', '.join(SECTIONS)}")
    expected = load_expected(args.expected)
    sections = [s for s in SECTIONS if s not in args.skip and (not args.only or s in args.only)]
    return run_sections(sections, {"digits": cfg.digits}, expected)


COMMANDS = {
    "minuscule": cmd_minuscule,
    "hibi": cmd_hibi,
    "invariants": cmd_invariants,
    "period": cmd_period,
    "ode": cmd_ode,
    "quantum": cmd_quantum,
    "monodromy": cmd_monodromy,
    "bps": cmd_bps,
    "reproduce": cmd_reproduce,
}


# ----------------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # the global options are accepted before or after the subcommand; each
    # parser gets its own copy, and the subcommand copies suppress their
    # defaults so they never override a value given earlier
    def options(top: bool) -> argparse.ArgumentParser:
        c = argparse.ArgumentParser(add_help=False)
        c.add_argument("--format", choices=["json", "table"], default="json" if top else argparse.SUPPRESS)
        c.add_argument("--digits", type=int, default=120 if top else argparse.SUPPRESS,
                       help="working precision in decimal digits (default 120)")
        c.add_argument("-o", "--output", default=None if top else argparse.SUPPRESS,
                       help="write the result to this file instead of stdout")
        return c

    p = argparse.ArgumentParser(prog="mcy", parents=[options(True)],
                                description="Calabi-Yau complete intersections in minuscule Schubert varieties")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("minuscule", parents=[options(False)], help="minuscule posets and Schubert varieties")
    m.add_argument("action", choices=["generate", "report", "classify"])
    m.add_argument("--type", help="Dynkin type such as A4, D5, E6, E7")
    m.add_argument("--node", type=int)
    m.add_argument("--word", help="reduced word of the Schubert variety (default: the whole space)")
    m.add_argument("--poset", help="catalog name (report only)")
    m.add_argument("--guard-a", type=int, default=12, help="largest rank scanned in type A")
    m.add_argument("--guard-d", type=int, default=8, help="largest rank scanned in type D")

    h = sub.add_parser("hibi", parents=[options(False)], help="order polytope and Hibi toric variety")
    h.add_argument("action", choices=["count", "face-interior", "singular", "nef"])
    h.add_argument("--poset", required=True, help="catalog name or poset JSON file")
    h.add_argument("--k", type=int, default=1)
    h.add_argument("--edge", type=int, help="facet index, 1-based in Hasse edge order")
    h.add_argument("--degrees", default=None)

    i = sub.add_parser("invariants", parents=[options(False)], help="deg, c2.H and Euler number")
    i.add_argument("--poset", required=True)
    i.add_argument("--degrees", required=True)

    pe = sub.add_parser("period", parents=[options(False)], help="fundamental period series")
    pe.add_argument("--poset", required=True)
    pe.add_argument("--degrees", required=True)
    pe.add_argument("--terms", type=int, default=20)
    pe.add_argument("--method", choices=["binomial", "flow"], default="binomial")

    o = sub.add_parser("ode", parents=[options(False)], help="operator fitting and analysis")
    o.add_argument("action", choices=["fit", "scheme", "invert"])
    o.add_argument("--series", help="series JSON file (fit)")
    o.add_argument("--op", help="operator JSON file or 'sigma-pf'")
    o.add_argument("--max-order", type=int, default=4)
    o.add_argument("--max-degree", type=int, default=6)
    o.add_argument("--c", default="-1", help="inversion constant, x = c / z")
    o.add_argument("--var", default="z")

    q = sub.add_parser("quantum", parents=[options(False)], help="quantum differential operators")
    q.add_argument("action", choices=["ode"])
    q.add_argument("--type", required=True)
    q.add_argument("--node", type=int, required=True)
    q.add_argument("--max-degree", type=int, default=3)

    mo = sub.add_parser("monodromy", parents=[options(False)], help="integral monodromy")
    mo.add_argument("action", choices=["run", "connect"])
    mo.add_argument("--op", default="sigma-pf")
    mo.add_argument("--invariants", default="33,78,-102", help="deg,c2H,chi at x = 0")
    mo.add_argument("--c", default="-1")
    mo.add_argument("--max-deg", type=int, default=50, help="degree scan bound at the second MUM point")

    b = sub.add_parser("bps", parents=[options(False)], help="genus zero BPS numbers")
    b.add_argument("--poset")
    b.add_argument("--degrees")
    b.add_argument("--side", choices=["x", "z"], default="x")
    b.add_argument("--dmax", type=int, default=10)
    b.add_argument("--op")
    b.add_argument("--deg", type=int)
    b.add_argument("--c", default="-1")
    b.add_argument("--max-degree", type=int, default=8, help="x-degree bound when fitting the operator")

    r = sub.add_parser("reproduce", parents=[options(False)], help="run the full battery against expected values")
    r.add_argument("--skip", nargs="*", default=[], metavar="SECTION")
    r.add_argument("--only", nargs="*", default=[], metavar="SECTION")
    r.add_argument("--expected", help="alternative expected-values file")
    return p


# ----------------------------------------------------------------------------
# output
# ----------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "to_json"):
        return obj.to_json()
    raise TypeError(f"not serializable: {type(obj).__name__}")


def render(result, fmt: str) -> str:
    if hasattr(result, "table") and fmt == "table":
        return result.table()
    if fmt == "json":
        return json.dumps(result, default=_jsonable, indent=1)
    data = json.loads(json.dumps(result, default=_jsonable))
    lines = []

    def walk(prefix, v):
        if isinstance(v, dict):
            for k, w in v.items():
                walk(f"{prefix}.{k}" if prefix else str(k), w)
        elif isinstance(v, list) and v and all(isinstance(w, (dict, list)) for w in v):
            for k, w in enumerate(v):
                walk(f"{prefix}[{k}]", w)
        else:
            lines.append(f"{prefix or 'value'}: {v if not isinstance(v, list) else ' '.join(map(str, v))}")

    walk("", data)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    from .monodromy import MonodromyError, PrecisionError

    try:
        cfg = PipelineConfig(args.command, args.format, args.output, args.digits)
        result = COMMANDS[args.command](args, cfg)
    except PrecisionError as exc:
        print(f"precision error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (UsageError, CatalogError, PosetError, InstanceError, ExpectedFileError, SeriesError,
            OperatorError, ValueError) as exc:
        if isinstance(exc, (FitError, QuantumError, BPSError)):
            print(f"failed: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MonodromyError, BPSError, FitError, QuantumError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    text = render(result, cfg.fmt)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if hasattr(result, "passed") and not result.passed:
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
