"""Command-line interface."""

import csv
import io
import json

import pytest

from ptsip import cli
from ptsip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list_table(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    body = out.strip().splitlines()[2:]
    assert len(body) == 11
    assert any(line.startswith("rosen-morse-1") and "first" in line for line in body)


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 11
    assert {"name", "category", "params", "constraints", "spectrum"} <= set(data[0])


def test_list_second_category(capsys):
    _, out, _ = run(capsys, "list", "--category", "second", "--format", "json")
    names = {d["name"] for d in json.loads(out)}
    assert names == {"isotonic", "poschl-teller", "poschl-teller-1", "poschl-teller-2", "scarf-1"}


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--potential", "harmonic", "--params", "omega=2", "--n-max", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "e_closed", "e_swkb", "e_pq", "e_oracle", "swkb_residual", "gamma"]
    assert len(rows) == 6
    assert [float(r[1]) for r in rows[1:]] == [0, 2, 4, 6, 8]


def test_spectrum_csv_is_deterministic(capsys):
    argv = ("spectrum", "--potential", "morse", "--format", "csv")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_spectrum_rosen_morse_2(capsys):
    code, out, _ = run(capsys, "spectrum", "--potential", "rosen-morse-2", "--params", "A=2,B=0.5,alpha=1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 2
    assert float(rows[1][1]) == pytest.approx(2.8125)


def test_spectrum_constraint_violation(capsys):
    code, _, err = run(capsys, "spectrum", "--potential", "rosen-morse-2", "--params", "A=1,B=2,alpha=1")
    assert code == 1
    assert "B<A^2 violated" in err


def test_params_split_across_flags(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--potential", "morse", "--params", "A=2", "--params", "B=1,alpha=1",
        "--no-oracle", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["meta"]["params"] == {"A": 2.0, "B": 1.0, "alpha": 1.0}


@pytest.mark.parametrize(
    "argv",
    [
        ("spectrum",),
        ("spectrum", "--potential", "nope"),
        ("spectrum", "--potential", "harmonic", "--params", "omega"),
        ("spectrum", "--potential", "harmonic", "--params", "omega=abc"),
        ("spectrum", "--potential", "harmonic", "--params", "omega=2,zeta=1"),
        ("eval", "--potential", "harmonic"),
        ("verify",),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "spectrum", "--potential", "poschl-teller-1", "--n-max", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["units"] == "hbar=2m=1"
    assert json.loads(json.dumps(doc)) == doc
    for row in doc["rows"]:
        for key in ("e_closed", "e_swkb", "e_pq", "e_oracle", "gamma"):
            v = row[key]
            # 12 significant digits survive a text round trip unchanged
            assert float(repr(v)) == v
            assert float(f"{v:.12g}") == v


def test_json_nan_becomes_null(capsys):
    _, out, _ = run(capsys, "spectrum", "--potential", "harmonic", "--n-max", "1", "--no-oracle", "--format", "json")
    rows = json.loads(out)["rows"]
    assert all(r["e_oracle"] is None for r in rows)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "spec.csv"
    code, out, _ = run(capsys, "spectrum", "--potential", "harmonic", "--n-max", "2", "--no-oracle",
                       "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("n,e_closed,")


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--potential", "harmonic", "--params", "omega=2", "--x", "0", "1.5", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0]["V"] == pytest.approx(-1.0)
    assert rows[1]["W"] == pytest.approx(1.5)
    assert all(abs(r["riccati_residual"]) < 1e-12 for r in rows)


def test_eval_outside_domain(capsys):
    code, _, err = run(capsys, "eval", "--potential", "kepler-coulomb", "--x", "-1")
    assert code == 1 and "domain" in err


def test_verify_potential(capsys):
    code, out, _ = run(capsys, "verify", "--potential", "eckart", "--params", "A=2,B=20,alpha=1")
    assert code == 0
    assert "FAIL" not in out


def test_verify_moment_integrals(capsys):
    code, out, _ = run(capsys, "verify", "--check", "moment-integrals", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert sum(c["samples"] for c in doc["checks"]) == 300
    assert max(c["max_residual"] for c in doc["checks"]) < 1e-10


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    eq = [c for c in doc["checks"] if c["check"] == "equivalence"]
    assert len(eq) == 11 and all(c["max_residual"] < 1e-8 for c in eq)


def test_verify_flags_with_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("SWKB_TOL_RICCATI", "1e-30")
    code, out, _ = run(capsys, "verify", "--potential", "morse", "--check", "riccati")
    assert code == 2 and "FAIL" in out


def test_spectrum_flags_with_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("SWKB_TOL_ORACLE", "1e-16")
    code, _, _ = run(capsys, "spectrum", "--potential", "harmonic", "--n-max", "1")
    assert code == 2


def test_bad_tolerance_env(capsys, monkeypatch):
    monkeypatch.setenv("SWKB_TOL_LEVEL", "zero")
    code, _, _ = run(capsys, "spectrum", "--potential", "harmonic", "--n-max", "1", "--no-oracle")
    assert code == 1


def test_quadcheck(capsys):
    code, out, _ = run(capsys, "quadcheck")
    assert code == 0 and "FAIL" not in out


def test_parse_params():
    assert cli.parse_params(["A=2, B=0.5", "alpha=1"]) == {"A": 2.0, "B": 0.5, "alpha": 1.0}
    assert cli.parse_params(None) == {}
