import json
import subprocess
import sys

import pytest

from dimzero.cli import dumps, main

X7X6_CURVE = {"q": 2, "h": [1], "f": [1, 0, 0, 0, 0, 0, 1, 1]}
HERMITIAN = '{"q":3,"g":3,"a":[1,0,9,0,27,0,27]}'


@pytest.fixture
def curve_file(tmp_path):
    p = tmp_path / "curve.json"
    p.write_text(json.dumps(X7X6_CURVE))
    return str(p)


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv)
    assert status == 0, err
    return json.loads(out), out


def test_exists_on_curve_file(capsys, curve_file):
    data, _ = run_json(capsys, "exists", "--k", "1", "--curve", curve_file)
    assert data["exact"] == 2 and data["degree"] == 2 and data["exists"] is True


def test_density_and_kmin(capsys):
    data, _ = run_json(capsys, "density", "--q", "16", "--k", "3")
    assert data["bound"] == "287/288"
    data, _ = run_json(capsys, "density", "--q", "256", "--k", "1", "--precision", "30")
    assert data["bound"] == "224/225" and data["decimal"].startswith("0.99555555555555555555")
    data, _ = run_json(capsys, "kmin", "--q", "3")
    assert data["kmin"] == 2 and data["l_decimal"].startswith("1.85")


def test_lpoly_and_counts(capsys, curve_file):
    data, _ = run_json(capsys, "lpoly", "--curve", curve_file)
    assert data["a"] == [1, -2, 2, -2, 4, -8, 8] and data["h"] == 3 and data["p_rank"] == 0
    data, _ = run_json(capsys, "counts", "--n", "4", "--oracle", "--curve", curve_file)
    assert data["A"] == data["oracle"] == [1, 1, 3, 5, 13]
    data, _ = run_json(capsys, "lpoly", "--lpoly", HERMITIAN)
    assert data["h"] == 64


def test_places(capsys, curve_file):
    data, _ = run_json(capsys, "places", "--max-degree", "3", "--curve", curve_file)
    assert data["N"] == [1, 5, 7] and data["B"] == [1, 2, 2]


def test_exact_needs_hyperelliptic_input(capsys, curve_file):
    data, _ = run_json(capsys, "exact", "--k", "2", "--curve", curve_file)
    assert data["exact"] == 2
    status, _, err = run(capsys, "exact", "--k", "2", "--lpoly", HERMITIAN)
    assert status == 1 and "hyperelliptic" in err
    data, _ = run_json(capsys, "exact", "--k", "2", "--lpoly", HERMITIAN, "--hyperelliptic")
    assert data["exact"] == 60


def test_exists_with_b1_override(capsys):
    data, _ = run_json(capsys, "exists", "--k", "2", "--lpoly", HERMITIAN, "--b1", "10")
    assert data["best_bound"] == 60
    assert any(c["name"] == "induction" for c in data["criteria"])


def test_asymptotic(capsys):
    data, _ = run_json(capsys, "asymptotic", "--q", "4", "--beta", "1:1", "--g", "100", "--epsilon", "1/4")
    assert data["log_h_estimate"] == "120.751874963942"
    assert data["margin"]["sign"] == "positive"


def test_verify(capsys, tmp_path):
    data, _ = run_json(capsys, "verify")
    assert data["failures"] == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"label": "x", "lpoly": {"q": 2, "g": 1, "a": [1, 0, 2]},
                                "expected": [{"quantity": "h", "value": 4, "provenance": "derived"}]}]))
    status, out, _ = run(capsys, "verify", "--corpus", str(bad))
    assert status == 2 and json.loads(out)["failures"] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["exists", "--k", "1"],
        ["exists", "--k", "x", "--lpoly", HERMITIAN],
        ["lpoly", "--lpoly", "{oops"],
        ["lpoly", "--lpoly", '{"q":2,"g":1,"a":[1,5,3]}'],
        ["lpoly", "--curve", "/nonexistent.json"],
        ["density", "--q", "2", "--k", "1"],
        ["exists", "--k", "9", "--lpoly", HERMITIAN],
        ["places", "--max-degree", "2", "--lpoly", HERMITIAN],
    ],
)
def test_validation_errors_exit_1(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 1 and out == "" and err.startswith("dimzero:")


def test_both_inputs_rejected(capsys, curve_file):
    status, _, _ = run(capsys, "lpoly", "--curve", curve_file, "--lpoly", HERMITIAN)
    assert status == 1


def test_consistency_failure_exits_2(capsys, monkeypatch):
    import dimzero.existence as ex

    monkeypatch.setattr(ex, "h_gk0_closed", lambda L, k: 0)
    status, _, err = run(capsys, "exists", "--k", "1", "--lpoly", HERMITIAN, "--hyperelliptic")
    assert status == 2 and "consistency" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["kmin", "--q", "2"],
        ["density", "--q", "16", "--k", "3"],
        ["exists", "--k", "1", "--lpoly", HERMITIAN],
        ["asymptotic", "--q", "2", "--beta", "1:sqrt(2)-1", "--g", "50", "--a", "30"],
    ],
)
def test_json_round_trips_byte_identical(capsys, argv):
    data, out = run_json(capsys, *argv)
    assert dumps(data) + "\n" == out
    _, again = run_json(capsys, *argv)
    assert again == out
    assert "e-" not in out and not any(isinstance(v, float) for v in data.values())


def test_table_format(capsys, curve_file):
    status, out, _ = run(capsys, "places", "--max-degree", "2", "--curve", curve_file, "--format", "table")
    assert status == 0
    assert "degree" in out and "places" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_console_entry_point(curve_file):
    proc = subprocess.run([sys.executable, "-m", "dimzero.cli", "kmin", "--q", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["kmin"] == 2
    proc = subprocess.run([sys.executable, "-m", "dimzero.cli", "kmin"], capture_output=True, text=True)
    assert proc.returncode == 1
