import csv

import pytest

from rawmoments.cli import run


def test_moment_prints_fraction():
    assert run(["moment", "--n", "2", "--p", "1/2", "--k", "2"]) == (0, "3/2\n")
    assert run(["moment", "--n", "2", "--p", "0.5", "--k", "2"]) == (0, "3/2\n")


def test_asymptote_output():
    code, out = run(["asymptote", "--beta", "1", "--p", "0.5"])
    assert code == 0
    assert "1.27846454276" in out
    assert "0.56437658856" in out
    assert "-0.414682637799" in out
    assert "2.65518253392" in out
    assert "exceeds the ceiling" in out


def test_check_passes():
    code, out = run(["check", "--kmax", "100"])
    assert code == 0
    assert "all properties hold" in out


def test_domain_error_exit_code():
    assert run(["asymptote", "--beta", "1", "--p", "1.5"])[0] == 1
    assert run(["moment", "--n", "0", "--p", "1/2", "--k", "2"])[0] == 1


@pytest.mark.parametrize("argv", [["moment", "--n", "x"], ["nope"], [], ["mc", "--n", "3"]])
def test_usage_error_exit_code(argv):
    assert run(argv)[0] == 64


def test_bounds_and_temme_tables():
    code, out = run(["bounds", "--n", "10", "--p", "1/2", "--k", "10"])
    assert code == 0 and "22.0853726538" in out
    code, out = run(["temme", "--k", "20", "--j", "10"])
    assert code == 0 and "true" in out


def test_converge_csv(tmp_path):
    path = tmp_path / "c.csv"
    code, _ = run(["converge", "--beta", "1", "--p", "1/2", "--k", "20", "40", "--out", str(path)])
    assert code == 0
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["k", "n", "normalized_log_moment", "log_psi", "gap"]
    assert [r[0] for r in rows[1:]] == ["20", "40"]


def test_csv_formats(tmp_path):
    path = tmp_path / "m.csv"
    run(["moment", "--n", "3", "--p", "1/3", "--k", "2", "--out", str(path)])
    header, row = list(csv.reader(path.open()))
    assert header == ["n", "p", "k", "moment", "log_moment"]
    assert row[1] == "1/3"
    assert row[3] == "5/3"


def test_mc_csv_byte_identical(tmp_path):
    argv = ["mc", "--n", "6", "--p", "0.4", "--k", "3", "--samples", "20000", "--seed", "5"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(argv + ["--out", str(a)])
    run(argv + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
