import json
import subprocess
import sys

import pytest

from clustertilt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_algebra_info(capsys):
    code, doc = run_json(capsys, "algebra", "info", "fixB")
    assert code == 0
    assert set(doc) >= {"command", "inputs", "prime", "seed", "cap", "trials", "results", "verdicts", "certificates"}
    assert doc["results"]["dimension"] == 16


def test_module_analyze(capsys):
    code, doc = run_json(capsys, "module", "analyze", "fixC", "M34.mod")
    assert code == 0
    assert doc["results"]["pd"] == 1 and doc["results"]["id"] == 2
    assert doc["verdicts"]["rigid"] is True


def test_resolve_reports_lower_bound(capsys):
    code, doc = run_json(capsys, "resolve", "fixB", "M45.mod", "--cap", "4")
    assert code == 0
    assert doc["results"]["terms"] == [[1, 1, 0, 1, 1], [1, 1, 1, 0, 0], [1, 0, 1, 1, 1], [1, 1, 0, 1, 1]]
    assert doc["results"]["terminated"] is False
    assert doc["verdicts"]["dimension"] == "at-least(4)"


def test_classify_and_rigidity(capsys):
    code, doc = run_json(capsys, "classify-pd", "fixpair", "M12.mod")
    assert code == 0 and doc["verdicts"]["pd_B"] == "infinite"
    code, doc = run_json(capsys, "rigidity-report", "fixpair", "M45_M12.mod")
    assert code == 0
    r = doc["results"]
    assert (r["rigid_C"], r["rigid_B"]) == (True, False)


def test_tilting_report(capsys):
    code, doc = run_json(capsys, "tilting-report", "fixA", "tiltA.mod")
    assert code == 0 and doc["verdicts"]["tilting"] == "tilting"


def test_json_is_deterministic(capsys):
    a = run(capsys, "classify-pd", "fixpair", "M34.mod", "--json")
    b = run(capsys, "classify-pd", "fixpair", "M34.mod", "--json")
    assert a == b


def test_input_errors_exit_1(capsys, tmp_path):
    assert run(capsys, "algebra", "info", "no-such-file")[0] == 1
    bad = tmp_path / "bad.alg"
    bad.write_text("algebra X\nvertices 2\narrow a 1 9\n")
    code = main(["algebra", "info", str(bad)])
    assert code == 1 and "bad.alg:3:" in capsys.readouterr().err
    assert run(capsys, "algebra", "info", "fixC", "--prime", "10")[0] == 1
    code, doc = run_json(capsys, "algebra", "info", "no-such-file")
    assert code == 1 and doc["error"]["type"] == "FileNotFoundError"
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 1


def test_budget_exhaustion_exits_2(capsys):
    assert run(capsys, "classify-pd", "fixpair", "M34.mod", "--trials", "0")[0] == 2


def test_verify_suite(capsys):
    code, out = run(capsys, "verify", "--suite", "paper")
    assert code == 0
    assert out.count("PASS") == 7 and "criterion 4: MISMATCH" in out


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "clustertilt", "algebra", "info", "fixC", "--json"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["results"]["dimension"] == 13
