import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from moduli_hilbert.cli import main
from moduli_hilbert.coefficient_formulas import gamma_formula
from moduli_hilbert.hilbert_triangle import compute_alpha


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_triangle_plain_reproduces_table():
    code, text = run("triangle", "--n", "6", "--format", "plain")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 7
    assert lines[-1].split() == ["1", "219", "3292", "7723", "3292", "219", "1", "14747"]
    assert [line.split()[-1] for line in lines] == ["1", "2", "7", "34", "213", "1630", "14747"]


def test_triangle_zero():
    code, text = run("triangle", "--n", "0")
    assert code == 0
    assert text.split() == ["1", "1"]


def test_triangle_json_deterministic_and_roundtrips():
    _, a = run("triangle", "--n", "8", "--format", "json")
    _, b = run("triangle", "--n", "8", "--format", "json")
    assert a == b
    obj = json.loads(a)
    assert json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n" == a
    assert obj["command"] == "triangle"
    assert obj["payload"][8]["alpha"] == [str(a) for a in compute_alpha(8).rows[8]]


def test_triangle_csv():
    code, text = run("triangle", "--n", "2", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "n,i,j,alpha,sigma"
    assert "2,1,1,5,7" in text.splitlines()


def test_sigma_command():
    code, text = run("sigma", "--n", "6", "--format", "json")
    assert code == 0
    assert json.loads(text)["payload"] == ["1", "2", "7", "34", "213", "1630", "14747"]


def test_fj_plain():
    _, text = run("fj", "--j", "0")
    assert text.splitlines() == ["freq 0: [-1/1, -1/1]", "freq 1: [1/1]"]
    _, text = run("fj", "--j", "1")
    assert text.splitlines() == ["freq 1: [-2/1, -2/1, -1/2]", "freq 2: [2/1]"]


def test_fj_json_leading_coefficient():
    _, text = run("fj", "--j", "4", "--format", "json")
    terms = json.loads(text)["payload"]
    last = terms[-1]
    assert last["freq"] == 5
    (c,) = last["poly"]
    assert F(int(c["num"]), int(c["den"])) == gamma_formula(0, 5) == F(5**8, 120)


def test_fj_csv():
    _, text = run("fj", "--j", "1", "--format", "csv")
    assert text.splitlines() == ["freq,power,coeff", "1,0,-2/1", "1,1,-2/1", "1,2,-1/2", "2,0,2/1"]


@pytest.mark.parametrize(
    "s,t,k,value",
    [(1, 2, 1, F(-20)), (0, 1, 0, F(1)), (3, 3, 0, F(-(3**10), 2**3 * 6 * 6))],
)
def test_coeff_match(s, t, k, value):
    code, text = run("coeff", "--s", str(s), "--t", str(t), "--k", str(k), "--format", "json")
    assert code == 0
    payload = json.loads(text)["payload"]
    assert payload["verdict"] == "MATCH"
    assert F(int(payload["formula"]["num"]), int(payload["formula"]["den"])) == value


def test_coeff_out_of_domain():
    assert run("coeff", "--s", "0", "--t", "0", "--k", "0")[0] == 2
    assert run("coeff", "--s", "1", "--t", "2", "--k", "2")[0] == 2


def test_asymptotics_small():
    code, text = run("asymptotics", "--n", "10")
    assert code == 0
    assert text.splitlines()[-1].startswith("growth-rate estimate")
    assert run("asymptotics", "--n", "9")[0] == 2


def test_asymptotics_json():
    code, text = run("asymptotics", "--n", "12", "--format", "json")
    rows = json.loads(text)["payload"]["rows"]
    assert rows[5]["sigma"] == "14747"


def test_conjecture_command():
    code, text = run("conjecture", "--k", "1")
    assert code == 0
    assert "consistent: True" in text
    code, text = run("conjecture", "--k", "0", "--format", "json")
    assert json.loads(text)["payload"]["consistent"] is True


@pytest.mark.parametrize("suite", ["tables", "identities"])
def test_verify_suites_pass(suite):
    code, text = run("verify", "--suite", suite)
    assert code == 0
    assert all(line.startswith("PASS") for line in text.splitlines()[:-1])


def test_verify_reports_every_check():
    code, text = run("verify", "--suite", "asymptotics")
    assert code in (0, 1)
    lines = text.splitlines()
    assert all(line.split()[0] in ("PASS", "FAIL") for line in lines[:-1])
    assert code == (1 if any(line.startswith("FAIL") for line in lines) else 0)


@pytest.mark.parametrize(
    "argv",
    [["triangle"], ["triangle", "--n", "x"], ["bogus"], [], ["fj", "--j", "1", "--format", "xml"], ["triangle", "--n", "-1"], ["verify", "--suite", "none"]],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "moduli_hilbert", "triangle", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.split()[-1] == "7"
    proc = subprocess.run([sys.executable, "-m", "moduli_hilbert", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stdout == ""
