import json
import shutil
import subprocess
import sys

import pytest

from garnier.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_figure1_text(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "figure1")
    assert code == 0
    assert out.startswith("PASS  [figure1]")
    assert "1/1 checks passed" in out


def test_verify_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "theorem2", "--seed", "3", "--output", "json")
    _, b, _ = run(capsys, "verify", "--suite", "theorem2", "--seed", "3", "--output", "json")
    assert a == b
    rep = json.loads(a)
    assert rep["passed"] and rep["config"]["seed"] == 3
    assert {c["suite"] for c in rep["checks"]} == {"theorem2"}


def test_verify_reports_failures_with_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hamiltonian", "--trials", "3")
    assert code == 1
    assert "FAIL" in out and "wk0" in out


def test_bad_configuration_exits_two(capsys):
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2
    assert run(capsys, "verify", "--convention", "sideways")[0] == 2
    assert run(capsys, "verify", "--model", "X99")[0] == 2
    assert run(capsys, "act", "--word", "wt9")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "apply", "--word", "s4", "--point", "1,2", "--params", "1,1,1,1,1,1,2,3")[0] == 2


def test_act(capsys):
    code, out, _ = run(capsys, "act", "--word", "wt1")
    assert code == 0
    assert "E1 -> E2" in out and "E2 -> E1" in out
    code, out, _ = run(capsys, "act", "--word", "wkI,wt1", "--degrees", "3", "--output", "json")
    rep = json.loads(out)
    assert rep["word"] == ["wkI", "wt1"] and len(rep["degree_sequence"]) == 3
    assert len(rep["roots"]) == 6


def test_act_wa0_on_x10_is_rejected(capsys):
    assert run(capsys, "act", "--word", "wa0", "--model", "X10")[0] == 2
    assert run(capsys, "act", "--word", "wa0", "--model", "X21")[0] == 0


def test_apply(capsys):
    code, out, _ = run(capsys, "apply", "--word", "s4", "--point", "2,3,5,7", "--params", "1,1,1,1,1,1,2,3")
    assert code == 0
    assert out.splitlines()[0] == "(3, 2, 7, 5)"
    params = json.dumps({"kappa0": "1", "kappa1": "1", "kappa_inf": "1", "theta1": "1",
                         "theta2": "1", "alpha0": "1", "s1": "2", "s2": "3"})
    code, out, _ = run(capsys, "apply", "--word", "wa0", "--point", "1,1,1,1", "--params", params,
                       "--output", "json")
    rep = json.loads(out)
    assert rep["point_out"] == ["0", "0", "-1", "-1"]
    assert rep["params_out"]["kappa0"] == "6"


def test_apply_polar_hit(capsys):
    code, out, _ = run(capsys, "apply", "--word", "wt1", "--coords", "qp", "--point", "0,3,5,7",
                       "--params", "1,1,1,1,1,1,2,3", "--output", "json")
    assert code == 1
    assert json.loads(out)["error"]["type"] == "polar"


def test_atlas(capsys):
    code, out, _ = run(capsys, "atlas", "--output", "json")
    assert code == 0
    assert len(json.loads(out)["charts"]) == 21


@pytest.mark.skipif(shutil.which("garnier") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["garnier", "verify", "--suite", "figure1"], capture_output=True, text=True)
    assert res.returncode == 0 and "PASS" in res.stdout


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "garnier.cli", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("0.1.0")
