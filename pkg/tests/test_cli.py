import json

import pytest

from ncdist.cli import main
from ncdist.operator_model import random_input
from ncdist.serialization import model_input_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def moment_list(text, n):
    coeffs = json.loads(text)["coeffs"]
    return [coeffs.get(",".join(["1"] * j), "0") for j in range(1, n + 1)]


@pytest.mark.parametrize("kind,n,count", [("nc", 4, "14"), ("interval", 4, "8"), ("nc2", 3, "4"), ("nc", 10, "16796")])
def test_enumerate_counts(capsys, kind, n, count):
    code, out, _ = run(capsys, "enumerate", kind, str(n))
    assert code == 0 and out == count + "\n"


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "nc2", "3", "--list")
    assert out.splitlines() == ["4", "{1}{2}{3}", "{1}{2,3}", "{1,2}{3}", "{1,3}{2}"]
    assert run(capsys, "enumerate", "nc", "13")[0] == 2
    assert run(capsys, "enumerate", "tree", "3")[0] == 2


def test_transform_semicircular(capsys):
    code, out, _ = run(capsys, "transform", "--op", "semicircular", "--t", "1", "--k", "1", "--degree", "6")
    assert code == 0
    assert moment_list(out, 6) == ["0", "1", "0", "2", "0", "5"]


def test_transform_phi_and_bt(capsys, tmp_path):
    d0 = write(tmp_path, "d0.json", {"k": 1, "degree": 4, "coeffs": {}})
    code, out, _ = run(capsys, "transform", "--op", "phi", d0)
    assert code == 0 and json.loads(out)["degree"] == 6
    assert moment_list(out, 6) == ["0", "1", "0", "1", "0", "1"]
    code, out, _ = run(capsys, "transform", "--op", "bt", "--t", "1", d0)
    assert code == 0 and json.loads(out)["coeffs"] == {}


def test_transform_ops(capsys, tmp_path):
    bern = write(tmp_path, "b.json", {"k": 1, "degree": 6, "coeffs": {"1,1": "1", "1,1,1,1": "1", "1,1,1,1,1,1": "1"}})
    assert moment_list(run(capsys, "transform", "--op", "bt", "--t", "1", bern)[1], 6) == ["0", "1", "0", "2", "0", "5"]
    for route in ("r", "eta"):
        out = run(capsys, "transform", "--op", "bt", "--t", "1/2", "--route", route, bern)[1]
        assert moment_list(out, 6) == ["0", "1", "0", "3/2", "0", "5/2"]
    assert moment_list(run(capsys, "transform", "--op", "dilate", "--r", "2", bern)[1], 4) == ["0", "4", "0", "16"]
    assert moment_list(run(capsys, "transform", "--op", "free-conv", bern, bern)[1], 2) == ["0", "2"]
    assert moment_list(run(capsys, "transform", "--op", "boolean-power", "--t", "2", bern)[1], 2) == ["0", "2"]
    assert moment_list(run(capsys, "transform", "--op", "free-power", "--t", "2", bern)[1], 2) == ["0", "2"]
    assert moment_list(run(capsys, "transform", "--op", "boolean-conv", bern, bern)[1], 2) == ["0", "2"]
    # (xy)^n for free symmetric +-1 variables is a reduced word of the infinite dihedral group
    assert moment_list(run(capsys, "transform", "--op", "mult-conv", bern, bern)[1], 6) == ["0"] * 6
    assert moment_list(run(capsys, "transform", "--op", "brownian", "--t", "1", bern, "--degree", "2")[1], 2) == ["0", "2"]
    ones = write(tmp_path, "s.json", {"k": 1, "degree": 4, "coeffs": {"1": "1", "1,1": "1", "1,1,1": "1", "1,1,1,1": "1"}})
    assert moment_list(run(capsys, "transform", "--op", "reta", ones)[1], 4) == ["1", "1", "2", "5"]
    out = run(capsys, "transform", "--op", "reta-inv", ones)[1]
    assert "role" not in json.loads(out)


def test_transform_out_file_and_determinism(capsys, tmp_path):
    target = tmp_path / "out.json"
    args = ["transform", "--op", "semicircular", "--t", "1/3", "--k", "2", "--degree", "4"]
    assert run(capsys, *args, "--out", str(target))[1] == ""
    assert target.read_text() == run(capsys, *args)[1]


@pytest.mark.parametrize("argv,code", [
    (["transform", "--op", "free-power", "--t", "0", "IN"], 3),
    (["transform", "--op", "bt", "--t=-1/2", "IN"], 3),
    (["transform", "--op", "dilate", "--r", "-1", "IN"], 3),
    (["transform", "--op", "bt", "--t", "x", "IN"], 2),
    (["transform", "--op", "bt", "IN"], 2),
    (["transform", "--op", "free-conv", "IN"], 2),
    (["transform", "--op", "phi", "missing.json"], 2),
    (["transform", "--op", "phi", "BAD"], 2),
    (["transform", "--op", "phi", "IN", "--k", "2"], 2),
    (["transform", "--op", "nope", "IN"], 2),
])
def test_transform_exit_codes(capsys, tmp_path, argv, code):
    good = write(tmp_path, "in.json", {"k": 1, "degree": 3, "coeffs": {"1": "1"}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    argv = [good if a == "IN" else str(bad) if a == "BAD" else a for a in argv]
    got, _, err = run(capsys, *argv)
    assert got == code
    if code == 3:
        assert "must be" in err


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "semigroup", "--k", "2", "--degree", "6", "--trials", "5", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["assertion_count"] == 25
    assert run(capsys, "verify", "lemma35", "--n", "7")[0] == 0
    code, out, _ = run(capsys, "verify", "phi-brownian", "--k", "2", "--degree", "4", "--t", "1/2")
    assert code == 0 and json.loads(out)["params"]["t"] == "1/2"


def test_verify_output_is_byte_identical(capsys):
    args = ["verify", "commutation", "--k", "1", "--degree", "5", "--trials", "2", "--seed", "3"]
    assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_verify_operator_model_with_input(capsys, tmp_path):
    path = write(tmp_path, "m.json", model_input_to_dict(random_input(2, 2, seed=3)))
    code, out, _ = run(capsys, "verify", "operator-model", "--input", path, "--degree", "4")
    assert code == 0 and json.loads(out)["assertions"][0]["passed"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    import ncdist.suites as suites

    def broken(params, result):
        result.assertions.append({"name": "always fails", "passed": False, "mismatches": [{"word": "1"}]})

    monkeypatch.setitem(suites.SUITES, "semigroup", broken)
    code, out, _ = run(capsys, "verify", "semigroup")
    assert code == 1 and json.loads(out)["passed"] is False


@pytest.mark.parametrize("argv", [
    ["verify", "nope"],
    ["verify", "semigroup", "--trials", "0"],
    ["verify", "lemma35", "--n", "40"],
    ["verify", "semigroup", "--input", "x.json"],
    [],
])
def test_verify_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2
