import json

import pytest

from fibluc_avoid.builtins import THEOREM1_M, THEOREM1_N
from fibluc_avoid.cli import EXIT_FAILED, EXIT_INPUT, EXIT_LIMIT, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_covering_builtin(capsys):
    code, out, _ = run(capsys, "verify", "covering", "--builtin", "fib33")
    assert code == EXIT_OK
    assert "lcm: 1152" in out
    assert run(capsys, "verify", "covering", "--builtin", "erdos")[0] == EXIT_OK


def test_verify_covering_file(capsys, tmp_path):
    path = tmp_path / "sys.json"
    path.write_text(json.dumps({"classes": [{"a": 0, "m": 2}, {"a": 1, "m": 4}]}))
    code, out, _ = run(capsys, "verify", "covering", "--file", str(path))
    assert code == EXIT_FAILED
    assert "uncovered witness: 3" in out
    code, out, _ = run(capsys, "verify", "covering", "--file", str(path), "--json")
    assert json.loads(out)["uncovered_witness"] == "3"


@pytest.mark.parametrize("content", ["not json", '{"classes": [{"a": 1}]}', '{"nope": 1}'])
def test_verify_covering_bad_input(capsys, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    assert run(capsys, "verify", "covering", "--file", str(path))[0] == EXIT_INPUT


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "verify", "certificate", "--file", str(tmp_path / "none.json"))[0] == EXIT_INPUT


def test_verify_certificate_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "certificate", "--builtin", "theorem1")
    assert code == EXIT_OK
    assert f"S = {THEOREM1_M}" in out
    assert f"T = {THEOREM1_N}" in out


def test_verify_certificate_corollary2_json(capsys):
    code, out, _ = run(capsys, "verify", "certificate", "--builtin", "corollary2", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["progression"] == {"S": str(23 * 578938092213810), "T": str(23 * 85206628521871)}
    assert data["base_progression"] == {"S": "578938092213810", "T": "85206628521871"}


def test_tampered_certificate(capsys, tmp_path):
    run(capsys, "verify", "certificate", "--builtin", "theorem1", "--json")
    from fibluc_avoid.builtins import theorem1
    data = theorem1().to_json()
    data["fib_clauses"][0]["r"] = "0"
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "certificate", "--file", str(path), "--json")
    assert code == EXIT_FAILED
    failures = json.loads(out)["failures"]
    assert failures[0]["stage"] == 2 and failures[0]["subject"] == "(1,3,0,2)_f"


def test_json_reports_deterministic(capsys):
    first = run(capsys, "verify", "certificate", "--builtin", "theorem1", "--json", "--verbose")[1]
    second = run(capsys, "verify", "certificate", "--builtin", "theorem1", "--json", "--verbose")[1]
    assert first == second
    assert "alternative_witnesses" in json.loads(first)


def test_chi_and_table(capsys):
    assert run(capsys, "chi", "--kind", "lucas", "--modulus", "5")[1].strip() == "4"
    assert run(capsys, "chi", "--kind", "fib", "--modulus", "2")[1].strip() == "3"
    code, out, _ = run(capsys, "table", "--kind", "fib", "--modulus", "17")
    rows = out.strip().splitlines()
    assert code == EXIT_OK and len(rows) == 36
    assert rows[8] == "9\t0"


@pytest.mark.parametrize("argv", [
    ["chi", "--kind", "fib", "--modulus", "1"],
    ["table", "--kind", "pell", "--modulus", "7"],
    ["rep", "--n", "1"],
    ["enumerate", "--set", "C", "--limit", "100"],
    ["check-progression", "--kmax", "3"],
    ["bogus"],
])
def test_invalid_input_exit_code(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INPUT


def test_resource_limit_exit_code(capsys):
    assert run(capsys, "enumerate", "--limit", str(10**9 + 1))[0] == EXIT_LIMIT


def test_rep(capsys):
    assert run(capsys, "rep", "--n", "221")[1].strip() == "r_f=0 r_l=0"
    assert json.loads(run(capsys, "rep", "--n", "4", "--json")[1])["r_f"] == 3


def test_enumerate_csv(capsys, tmp_path):
    path = tmp_path / "b.csv"
    code, _, err = run(capsys, "enumerate", "--set", "B", "--limit", "2000", "--out", str(path))
    assert code == EXIT_OK
    assert "count 12" in err
    lines = path.read_text().splitlines()
    assert lines[0] == "n" and lines[1:3] == ["221", "535"] and len(lines) == 13
    code, out, err = run(capsys, "enumerate", "--limit", "1000", "--out", "-")
    assert out.splitlines() == ["n", "221", "535", "697", "793"]


def test_check_progression(capsys):
    code, out, _ = run(capsys, "check-progression", "--builtin", "corollary3", "--kmax", "1000")
    assert code == EXIT_OK and "1001 terms lie in B_l" in out
    code, out, _ = run(capsys, "check-progression", "--step", "222", "--offset", "221", "--kmax", "3", "--json")
    data = json.loads(out)
    assert code == EXIT_FAILED and data["first_failure"] == 1 and "seconds" not in data


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("FIBLUC_THREADS", "3")
    assert run(capsys, "enumerate", "--limit", "2000")[1].strip() == "count 12"
