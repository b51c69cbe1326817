import json
import subprocess
import sys

import pytest

from starinv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_text(capsys):
    code, out, _ = run_cli(capsys, "classify", "--ring", "zn(6)", "--elem", "2")
    assert code == 0
    assert "is_ep = True" in out and "is_cep = True" in out
    assert "clean-cep: u = 5, p = 3" in out


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--ring", "zn(6)", "--elem", "2",
                           "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["is_ep"] is True
    assert doc["invocation"]["command"] == "classify"
    assert doc["ring"]["carrier_size"] == 6
    assert doc["counts"]["witness_counts"]["mp"] == 1


def test_classify_m2z5_example(capsys):
    code, out, _ = run_cli(capsys, "classify", "--ring", "mat(2,zn(5),transpose)",
                           "--elem", "[[1,2],[2,4]]", "--json")
    assert code == 0
    doc = json.loads(out)
    r = doc["result"]
    assert r["is_ep"] is False
    assert r["is_star_dmp"] is True and r["dmp_index"] == 2
    assert not r["inverses"]["mp"]["exists"]
    assert not r["inverses"]["group"]["exists"]
    assert r["systems"]["axa-mixed"]["solvable"] is True


def test_classify_shape_mismatch(capsys):
    code, _, err = run_cli(capsys, "classify", "--ring", "zn(6)",
                           "--elem", "[[1,0],[0,0]]")
    assert code == 2 and "error" in err


def test_ring_parse_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--ring", "zn(1)",
                           "--theorem", "ep-theo1")
    assert code == 2 and "error" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--ring", "zn(6)",
                           "--theorem", "cep-order322")
    assert code == 0 and "VERIFIED" in out
    code, _, err = run_cli(capsys, "verify", "--ring", "zn(6)",
                           "--theorem", "no-such-claim")
    assert code == 2
    code, _, err = run_cli(capsys, "verify", "--ring", "mat(2,zn(7),transpose)",
                           "--theorem", "lem-commute")
    assert code == 3


def test_counterexample_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--ring",
                           "mat(2,zn(5),transpose)", "--claim", "axa-implies-ep")
    assert code == 1 and "counterexample a =" in out
    code, out, _ = run_cli(capsys, "counterexample", "--ring", "zn(6)",
                           "--claim", "x-ax2-implies-ep")
    assert code == 0 and "no counterexample" in out


def test_counterexample_all(capsys):
    code, out, _ = run_cli(capsys, "counterexample", "--ring",
                           "mat(2,zn(5),transpose)", "--claim",
                           "axa-implies-ep", "--all", "--json")
    assert code == 1
    doc = json.loads(out)
    assert len(doc["witnesses"]) > 1


def test_survey_json(capsys):
    code, out, _ = run_cli(capsys, "survey", "--ring", "zn(4)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["ep"] == 3 and doc["result"]["star_dmp"] == 4
    assert doc["result"]["invariants_ok"] is True


def test_json_determinism(capsys):
    docs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "verify", "--ring",
                               "mat(2,zn(2),transpose)", "--theorem",
                               "ep-eightway", "--json")
        assert code == 0
        docs.append(json.loads(out))
    for d in docs:
        d.pop("elapsed_ms")
    assert json.dumps(docs[0], sort_keys=True) == json.dumps(docs[1], sort_keys=True)


def test_usage_error(capsys):
    assert main(["classify", "--ring", "zn(6)"]) == 2  # missing --elem
    assert main(["frobnicate"]) == 2


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "starinv.cli", "survey",
                          "--ring", "zn(6)"], capture_output=True, text=True)
    assert out.returncode == 0 and "survey of zn(6)" in out.stdout
    out = subprocess.run(["starinv", "classify", "--ring", "gauss(3)",
                          "--elem", "(1,2)"], capture_output=True, text=True)
    assert out.returncode == 0 and "is_ep = True" in out.stdout


def test_cli_on_numpy_backend():
    import os
    env = dict(os.environ, STARINV_BACKEND="numpy")
    out = subprocess.run(["starinv", "verify", "--ring", "zn(12)",
                          "--theorem", "ep-eightway", "--json"],
                         env=env, capture_output=True, text=True)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["result"]["verdict"] == "verified"
