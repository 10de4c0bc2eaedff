import json

import pytest

from stanleyverify.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pfunc(capsys):
    code, out, _ = run(capsys, "pfunc", "--max", "5")
    assert code == 0
    assert out.splitlines() == ["0,1", "1,1", "2,2", "3,3", "4,5", "5,7"]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4")
    assert out.splitlines() == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    code, out, _ = run(capsys, "enumerate", "--n", "0")
    assert code == 0 and out == "\n"


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "--n", "7", "--k", "3")
    d = json.loads(out)
    assert code == 0
    assert d["schedule"] == {"q": [2, 2, 3], "r": [1, 2, 0], "s": 2}
    assert d["A"] == d["B"] == "30"
    code, _, err = run(capsys, "stats", "--n", "2", "--k", "3")
    assert code == 2 and "probe-beyond-k" in err
    code, out, _ = run(capsys, "stats", "--n", "2", "--k", "3", "--probe-beyond-k")
    assert code == 0 and "schedule" not in json.loads(out)


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "--map", "Q", "--partition", "2,2,2", "--params", "r=2,i=3")
    assert code == 0
    assert out.splitlines() == ["input: 2,2,2", "output: 3,3", "exponent_delta: 0"]
    code, out, _ = run(capsys, "bijection", "--map", "T", "--partition", "1,1,1", "--params", "r=1,k=3,i=1")
    assert out.splitlines()[1:] == ["output: 3,1", "exponent_delta: 1"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bijection", "--map", "Q", "--partition", "2,2,2", "--params", "r=2"],
        ["bijection", "--map", "Q", "--partition", "2,x", "--params", "r=2,i=3"],
        ["bijection", "--map", "Q", "--partition", "2", "--params", "r=2,i=3"],
        ["bijection", "--map", "X", "--partition", "2", "--params", "r=2,i=3"],
        ["verify", "--identity", "theorem1"],
        ["verify", "--identity", "nope", "--n-max", "3"],
        ["verify", "--identity", "theorem1", "--n-max", "0"],
        ["pfunc", "--max", "-1"],
        ["pfunc", "--max", "999999"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_verify_theorem1_json(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "theorem1", "--n-max", "60")
    d = json.loads(out)
    assert code == 0 and d["failures"] == [] and d["cells_checked"] == 1830


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "lemma12", "--n-max", "6", "--format", "csv")
    assert code == 0 and out == "params,lhs,rhs\n"


def test_verify_failure_exits_1(capsys, monkeypatch):
    from stanleyverify import campaigns

    monkeypatch.setattr(campaigns, "a_sum", lambda n, k, t, **kw: 0)
    code, out, _ = run(capsys, "verify", "--identity", "theorem1", "--n-max", "3", "--oracle", "formula-only")
    assert code == 1
    assert json.loads(out)["failures"][0]["lhs"] == "0"


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max", "20")
    d = json.loads(out)
    assert code == 0 and d["theorem1_cells"] == 210 and d["theorem1_passed"]
