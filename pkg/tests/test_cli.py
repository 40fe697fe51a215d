"""The command-line surface."""

import json
import subprocess
import sys

import pytest

from higherfano.cli import run, solve_n, parse_ci
from higherfano.verdict import Verdict


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_space_text(capsys):
    code, out, _ = call(capsys, "check", "--space", "E8/P6", "--condition", "F3")
    assert code == 0 and "Fails" in out


def test_check_space_json_round_trip(capsys):
    code, out, _ = call(capsys, "check", "--space", "G2/P2", "--condition", "F3", "--json")
    v = Verdict.from_json(out)
    assert code == 0 and v.fails and v.certificate.value == -1
    assert Verdict.from_json(v.to_json()).to_dict() == json.loads(out)


def test_check_a1(capsys):
    code, out, _ = call(capsys, "check", "--space", "A1/P1", "--condition", "F1")
    assert code == 0 and "Holds" in out


def test_check_ci(capsys):
    code, out, _ = call(capsys, "check", "--ci", "P^(n+1); d=3", "--condition", "F3", "--n", "26")
    assert code == 0 and "Holds" in out
    code, out, _ = call(capsys, "check", "--ci", "P^(n+1); d=3", "--condition", "F3", "--solve-n", "--json")
    assert json.loads(out)["minimal_n"] == 26


def test_solve_n_weighted():
    assert solve_n("P(2,1^(n+1)); d=4", 3) == 56
    assert solve_n("P(3,2,1^n); d=6", 3) == 182


def test_parse_ci_forms():
    assert parse_ci("P^5; d=2,3").degrees == (2, 3)
    assert parse_ci("E6/P6; d=1").dimension == 15
    assert parse_ci("P(2,1^(n+2)); d=2,2", 3).ambient.weights == (2, 1, 1, 1, 1, 1)


def test_classify_sweep(capsys):
    code, out, _ = call(capsys, "classify", "--family", "exceptional", "--condition", "F2")
    assert code == 0 and "0 disagreements" in out
    code, out, _ = call(capsys, "classify", "--family", "classical", "--max-rank", "5",
                        "--condition", "F3", "--json")
    assert code == 0 and all(row["agrees"] for row in json.loads(out))


def test_bounds(capsys):
    code, out, _ = call(capsys, "bounds", "--theorem", "1.3")
    assert code == 0 and "X_4 in P^(n+1)" in out and "63" in out


def test_bounds_disagreement_exit_code(capsys, tmp_path, monkeypatch):
    from higherfano import data

    rec = json.loads(data.data_path().read_text())
    rec["ci_thresholds"]["families"][0]["bound"] = 99
    (tmp_path / data.FILENAME).write_text(json.dumps(rec))
    monkeypatch.setenv(data.ENV_VAR, str(tmp_path))
    code, out, _ = call(capsys, "bounds")
    assert code == 1 and "MISMATCH" in out


def test_expand(capsys):
    code, out, _ = call(capsys, "expand", "--gr", "4,8", "--product", "s[3]*s[2,1]")
    assert code == 0 and "s[3,2,1]" in out.replace(" ", "")
    code, out, _ = call(capsys, "expand", "--gr", "4,8", "--product", "s[2,1]*s[2,1]", "--json")
    terms = {tuple(lam): c for lam, c in json.loads(out)["terms"]}
    assert terms[(3, 2, 1)] == "2"


def test_roots(capsys):
    code, out, _ = call(capsys, "roots", "--diagram", "F4")
    assert code == 0 and "24 positive roots" in out
    code, out, _ = call(capsys, "roots", "--diagram", "G2", "--json")
    rows = {r["space"]: r for r in json.loads(out)["spaces"]}
    assert rows["G2/P2"]["index"] == 3 and rows["G2/P1"]["short"]


@pytest.mark.parametrize("argv", [
    ["check", "--space", "E9/P1"],
    ["check", "--space", "E8/P6", "--condition", "G3"],
    ["check"],
    ["check", "--ci", "P^(n+1); d=3"],
    ["check", "--ci", "Z^3; d=2"],
    ["expand", "--gr", "2,4", "--product", "s[5]"],
    ["roots", "--diagram", "Q7"],
    ["bounds", "--theorem", "2.1"],
    ["classify", "--condition", "F5"],
    ["nosuchverb"],
])
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higherfano.cli", "check", "--space", "Q^7",
                           "--condition", "F3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Holds" in proc.stdout
