import json
import subprocess
import sys

import pytest

from klcanon.cli import main
from klcanon.laurent import LaurentPoly, QPolynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pkl_text(capsys):
    code, out, _ = run(capsys, "pkl", "--weight", "1,1", "--u", "-1", "--tau", "1,2", "--sigma", "2,1")
    assert code == 0
    assert out.strip() == "P = 1"


def test_pkl_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "pkl", "--weight", "1,1,1,1", "--u", "-1",
                       "--tau", "1,3,2,4", "--sigma", "3,4,1,2")
    assert code == 0
    data = json.loads(out)
    assert data == {"tau": "1,3,2,4", "sigma": "3,4,1,2", "u": "-1", "P": {"0": 1, "1": 1}}
    assert QPolynomial.from_json(data["P"]) == QPolynomial({0: 1, 1: 1})


def test_kl(capsys):
    code, out, _ = run(capsys, "kl", "--n", "4", "--y", "1,3,2,4", "--w", "3,4,1,2")
    assert code == 0 and out.strip() == "P = q + 1"


def test_dual_canonical_example(capsys):
    code, out, _ = run(capsys, "dual-canonical", "--k", "2", "--word", "++--")
    assert code == 0
    assert out.strip() == "b^[++--] = e[++--] - v^-1 e[+-+-] - v^-1 e[-+-+] + v^-2 e[--++]"


def test_canonical_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "canonical", "--k", "2", "--word", "+-")
    assert code == 0
    assert json.loads(out) == {"basis": "canonical", "k": 2, "I": "+-",
                               "terms": [{"I": "+-", "coeff": {"0": 1}}, {"I": "-+", "coeff": {"-1": 1}}]}


def test_words_starting_with_minus(capsys):
    code, out, _ = run(capsys, "canonical", "--k", "2", "--word", "--++")
    assert code == 0 and out.strip() == "b_[--++] = e[--++]"


def test_grassmann_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "grassmann", "--I", "+-+-", "--J", "--++")
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"I", "J", "c", "c0", "h"}
    c = LaurentPoly.from_json(data["c"])
    assert LaurentPoly.from_json(data["c0"]) == c.shift(data["h"])
    assert data["h"] == 3


def test_grassmann_uncontrolled(capsys):
    code, out, _ = run(capsys, "--format", "json", "grassmann", "--I", "+-", "--J", "-+")
    assert code == 0
    data = json.loads(out)
    assert data["c"] == {"-1": 1} and data["c0"] is None and data["h"] is None


def test_verify_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "grassmann", "--max-n", "4")
    assert code == 0
    assert out.startswith("[PASS] suite grassmann")


def test_verify_failure_exit_one(capsys, monkeypatch):
    from klcanon import verify
    from klcanon.verify import CheckResult

    monkeypatch.setitem(verify.SUITES, "deodhar", lambda n: [CheckResult("broken", 1, ["case"])])
    code, out, _ = run(capsys, "verify", "--suite", "deodhar")
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize("argv, token", [
    (["canonical", "--k", "2", "--word", "+x-"], "+x-"),
    (["pkl", "--weight", "2,2", "--u", "7", "--tau", "1,2,3,4", "--sigma", "1,2,3,4"], "--u"),
    (["pkl", "--weight", "a,b", "--u", "q", "--tau", "1", "--sigma", "1"], "--weight"),
    (["kl", "--n", "3", "--y", "1,2", "--w", "2,1,3"], "--y"),
    (["verify", "--suite", "nope"], "--suite"),
    (["grassmann", "--I", "+-", "--J", "++"], "weight"),
    (["pkl", "--weight", "2,2", "--u", "q", "--tau", "2,1,3,4", "--sigma", "3,4,1,2"], "2,1,3,4"),
    ([], "command"),
])
def test_input_errors_exit_two(capsys, argv, token):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert token in err


def test_deterministic_output(capsys):
    outs = {run(capsys, "--format", "json", "dual-canonical", "--k", "3", "--word", "3,1,2,1")[1] for _ in range(3)}
    assert len(outs) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "klcanon", "kl", "--n", "2", "--y", "1,2", "--w", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "P = 1"
