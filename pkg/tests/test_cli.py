import json
import subprocess
import sys

import pytest

from hhcert.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_bound_cor1_example(capsys):
    code, env, _ = run(capsys, "bound", "--theorem", "cor1", "--fn", "poly:0,0,1", "--a", "0", "--b", "1", "--s", "1", "--q", "2")
    assert code == 0
    assert set(env) == {"tool_version", "command", "inputs_echo", "results", "warnings"}
    assert abs(env["results"]["lhs"] - 1 / 12) < 1e-12
    assert env["results"]["holds"]


def test_bound_t2_exp(capsys):
    code, env, _ = run(capsys, "bound", "--theorem", "t2", "--fn", "exp", "--a", "0", "--b", "1", "--n", "1", "--lambda", "0.5", "--s", "1")
    assert code == 0 and env["results"]["holds"]


def test_bound_constant_tightness_zero(capsys):
    code, env, _ = run(capsys, "bound", "--theorem", "t5", "--fn", "poly:4", "--a", "0", "--b", "2", "--q", "2")
    assert code == 0 and env["results"]["tightness"] == 0.0


def test_lambda_defaults_to_midpoint_and_is_echoed(capsys):
    _, env, _ = run(capsys, "bound", "--theorem", "t3", "--fn", "exp", "--a", "0", "--b", "2")
    assert env["inputs_echo"]["lam"] == 1.0


def test_certify_exit_code(capsys):
    # |exp'| is not concave, so t4's hypothesis fails
    code, env, _ = run(capsys, "bound", "--theorem", "t4", "--fn", "exp", "--a", "0", "--b", "1", "--certify")
    assert code == 2
    assert any("hypothesis" in w for w in env["warnings"])
    code, _, _ = run(capsys, "bound", "--theorem", "t4", "--fn", "exp", "--a", "0", "--b", "1")
    assert code == 0


def test_printed_violation_exit_code(capsys):
    code, env, _ = run(capsys, "bound", "--theorem", "cor1", "--fn", "poly:0,0,1", "--a", "0", "--b", "0.2", "--q", "2", "--variant", "printed")
    assert code == 3 and not env["results"]["holds"]


def test_quad(capsys, tmp_path):
    code, env, _ = run(capsys, "quad", "--rule", "midpoint", "--fn", "poly:0,0,1", "--a", "0", "--b", "1", "--pieces", "2")
    assert code == 0
    cert = env["results"]["certificate"]
    assert cert["value"] == 0.3125 and abs(cert["oracle_error"] - 0.0208333333333) < 1e-12
    csv_path = tmp_path / "study.csv"
    code, env, _ = run(
        capsys, "quad", "--rule", "midpoint", "--fn", "exp", "--a", "0", "--b", "1", "--variant", "printed",
        "--study", "2,4,8,16,32", "--csv", str(csv_path),
    )
    assert code == 0 and -2.2 <= env["results"]["study"]["slope"] <= -1.8
    assert csv_path.read_text().splitlines()[0] == "pieces,value,bound,oracle_error"


def test_quad_linear_zero_error(capsys):
    _, env, _ = run(capsys, "quad", "--rule", "trapezoid", "--fn", "poly:1,2", "--a", "0", "--b", "3", "--pieces", "4")
    assert env["results"]["certificate"]["oracle_error"] < 1e-13


def test_means(capsys):
    code, env, _ = run(capsys, "means", "--a", "2", "--b", "8", "--chain")
    vals = {m["tag"]: m["value"] for m in env["results"]["means"]}
    assert code == 0 and vals["H"] == 3.2 and vals["G"] == 4.0 and vals["A"] == 5.0
    assert len(vals) == 6
    assert env["results"]["chain"]["verdict"] == "pass"
    _, env, _ = run(capsys, "means", "--a", "3", "--b", "3")
    assert {m["value"] for m in env["results"]["means"]} == {3.0}


@pytest.mark.parametrize(
    "argv",
    [
        ["means", "--a", "-1", "--b", "2"],
        ["audit", "--claim", "t99"],
        ["bound", "--theorem", "t2", "--fn", "nope", "--a", "0", "--b", "1"],
        ["bound", "--theorem", "t6", "--fn", "exp", "--a", "0", "--b", "1", "--lambda", "0.5"],
        ["bound", "--theorem", "t2", "--fn", "exp", "--a", "0", "--b", "1", "--q", "0.5"],
        ["quad", "--rule", "simpson", "--fn", "exp", "--a", "0", "--b", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_64(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 64 and "usage" in err


def test_evaluation_failure_exit_1(capsys):
    code, _, err = run(capsys, "bound", "--theorem", "t2", "--fn", "sqrt", "--a", "0", "--b", "1")
    assert code == 1 and "evaluation failed" in err


def test_audit_exit_codes(capsys, tmp_path):
    code, env, _ = run(capsys, "audit", "--claim", "chain", "--grid", "small")
    assert code == 0 and env["results"]["summary"]["chain/corrected"]["violations"] == 0
    path = tmp_path / "r.json"
    code, env, _ = run(capsys, "audit", "--claim", "m_prop1", "--grid", "full", "--json", str(path))
    assert code == 0
    assert any("m_prop1/as_printed" in w and "printed-variant" in w for w in env["warnings"])
    assert json.loads(path.read_text()) == env
    code, _, _ = run(capsys, "audit", "--claim", "jagers")
    assert code == 0


def test_round_trip_from_inputs_echo(capsys):
    _, env, _ = run(capsys, "bound", "--theorem", "t9", "--fn", "reciprocal", "--a", "0.5", "--b", "2", "--n", "2", "--s", "0.5", "--q", "3")
    echo = env["inputs_echo"]
    argv = ["bound", "--theorem", echo["theorem"], "--fn", echo["fn"], "--a", repr(echo["a"]), "--b", repr(echo["b"]),
            "--n", str(echo["n"]), "--s", repr(echo["s"]), "--q", repr(echo["q"]), "--variant", echo["variant"]]
    _, again, _ = run(capsys, *argv)
    assert again["results"] == env["results"]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hhcert", "means", "--a", "2", "--b", "8"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "means"
