import json
from fractions import Fraction

import pytest

from minuscule_cy.cli import main
from minuscule_cy.ode import ThetaOperator
from minuscule_cy.posets import Poset
from minuscule_cy.reproduce import load_expected


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_invariants(capsys):
    code, out = run(capsys, "invariants", "--poset", "sigma", "--degrees", "1x9")
    data = json.loads(out)
    assert code == 0 and (data["deg"], data["c2H"], data["chi"]) == (33, 78, -102)


def test_period_strings(capsys):
    code, out = run(capsys, "period", "--poset", "sigma", "--degrees", "1x9", "--terms", "12")
    data = json.loads(out)
    assert code == 0 and len(data) == 12 and all(isinstance(c, str) for c in data)
    assert [Fraction(c) for c in data[:4]] == [1, 7, 199, 8359]


def test_deterministic(capsys):
    a = run(capsys, "period", "--poset", "og510", "--degrees", "1^6,2", "--terms", "6", "--method", "flow")
    b = run(capsys, "period", "--poset", "og510", "--degrees", "1^6,2", "--terms", "6", "--method", "flow")
    assert a == b


def test_catalog_error(capsys):
    assert main(["invariants", "--poset", "unknown", "--degrees", "1x9"]) == 2
    assert main(["hibi", "count", "--poset", "chain-0"]) == 2


def test_usage_error(capsys):
    assert main(["period", "--poset", "sigma"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--digits", "5", "period", "--poset", "sigma", "--degrees", "1x9"]) == 2


def test_hibi_commands(capsys):
    code, out = run(capsys, "hibi", "count", "--poset", "sigma", "--k", "9")
    assert code == 0 and json.loads(out)["lattice_points"] == "2212210"
    code, out = run(capsys, "hibi", "face-interior", "--poset", "sigma", "--k", "9")
    assert code == 0 and "3" in [r["interior_points"] for r in json.loads(out)]
    code, out = run(capsys, "hibi", "singular", "--poset", "sigma")
    assert code == 0 and sum(s["degree"] for s in json.loads(out) if s["codim"] == 3) == 19
    code, out = run(capsys, "hibi", "nef", "--poset", "sigma", "--degrees", "1,1,1,1,1,1,1,1,1")
    assert code == 0 and len(json.loads(out)["parts"]) == 9
    assert main(["hibi", "face-interior", "--poset", "sigma", "--edge", "99", "--k", "9"]) == 2


def test_minuscule_commands(capsys, tmp_path):
    code, out = run(capsys, "minuscule", "generate", "--type", "E6", "--node", "1")
    data = json.loads(out)
    assert code == 0 and data["lattice_size"] == 27
    P = Poset.from_json(data["poset"])
    assert len(P) == 16
    f = tmp_path / "p.json"
    f.write_text(json.dumps(data["poset"]))
    code, out = run(capsys, "hibi", "count", "--poset", str(f), "--k", "1")
    assert json.loads(out)["lattice_points"] == "27"
    code, out = run(capsys, "minuscule", "report", "--poset", "sigma")
    rep = json.loads(out)
    assert rep["fano_index"] == 9 and rep["singular_components"][0]["dimension"] == 5


def test_ode_pipeline(capsys, tmp_path):
    series = tmp_path / "s.json"
    code, _ = run(capsys, "period", "--poset", "sigma", "--degrees", "1x9", "--terms", "50", "-o", str(series))
    assert code == 0
    code, out = run(capsys, "ode", "fit", "--series", str(series))
    assert code == 0
    op = ThetaOperator.from_json(json.loads(out))
    assert op.c[0][4] == 121
    opfile = tmp_path / "op.json"
    opfile.write_text(out)
    code, out = run(capsys, "ode", "scheme", "--op", str(opfile))
    assert code == 0 and json.loads(out)["discriminant"][-1] == "x**3 + 159*x**2 + 84*x - 1"
    code, out = run(capsys, "ode", "invert", "--op", str(opfile), "--c", "-1")
    assert code == 0 and json.loads(out)["var"] == "z"
    zfile = tmp_path / "opz.json"
    zfile.write_text(out)
    code, out = run(capsys, "bps", "--op", str(zfile), "--deg", "21", "--dmax", "3")
    assert code == 0 and json.loads(out)["genus0"] == {"1": "387", "2": "4671", "3": "124323"}
    assert main(["ode", "scheme", "--op", str(tmp_path / "missing.json")]) == 2


def test_fit_failure_exit_code(capsys, tmp_path):
    series = tmp_path / "s.json"
    series.write_text(json.dumps([str(Fraction(1, n + 1) ** 3 + n) for n in range(20)]))
    assert main(["ode", "fit", "--series", str(series), "--max-order", "1", "--max-degree", "1"]) == 1


def test_quantum(capsys):
    code, out = run(capsys, "quantum", "ode", "--type", "A4", "--node", "1", "--format", "table")
    assert code == 0 and "theta**5" in out


def test_bps_poset(capsys):
    code, out = run(capsys, "--format", "json", "bps", "--poset", "sigma", "--degrees", "1x9", "--dmax", "4")
    assert code == 0 and json.loads(out)["genus0"]["4"] == "567063"


def test_bps_named_operator_side_z(capsys):
    code, out = run(capsys, "bps", "--op", "sigma-pf", "--side", "z", "--deg", "21", "--dmax", "3")
    assert code == 0
    data = json.loads(out)
    assert data["side"] == "z" and data["genus0"] == {"1": "387", "2": "4671", "3": "124323"}


def test_reproduce_partial(capsys):
    code, out = run(capsys, "reproduce", "--only", "combinatorics", "schubert", "invariants")
    data = json.loads(out)
    assert code == 0 and data["passed"] and "monodromy" in data["skipped"]


def test_reproduce_mismatch(capsys, tmp_path):
    exp = load_expected()
    exp["entries"]["X.deg"]["value"] = 34
    f = tmp_path / "e.json"
    f.write_text(json.dumps(exp))
    code, out = run(capsys, "reproduce", "--only", "invariants", "--expected", str(f), "--format", "table")
    assert code == 1 and "FAIL" in out


def test_reproduce_corrupted(capsys, tmp_path):
    f = tmp_path / "e.json"
    f.write_text("{not json")
    assert main(["reproduce", "--expected", str(f)]) == 2
    f.write_text(json.dumps({"version": 1, "entries": {"k": {"value": 1, "section": "nowhere"}}}))
    assert main(["reproduce", "--expected", str(f)]) == 2
    assert main(["reproduce", "--skip", "nonsense"]) == 2


def test_precision_exit_code(capsys, tmp_path, monkeypatch):
    import minuscule_cy.monodromy as mono

    def short(*args, **kwargs):
        raise mono.PrecisionError("integral only to 1e-10")

    monkeypatch.setattr(mono, "integral_basis_search", short)
    monkeypatch.setattr(mono.MonodromyComputation, "__init__", lambda self, op, digits=120, plan=None: None)
    assert main(["--digits", "20", "monodromy", "run"]) == 3
