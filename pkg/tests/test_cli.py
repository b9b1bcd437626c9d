import csv
import io
import json
import subprocess
import sys

import pytest

from chebtau.cli import CSV_VERSION, TABLE_FIELDS, fmt, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def read_table(text):
    lines = text.splitlines()
    assert lines[0] == CSV_VERSION
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_tau_text(capsys):
    code, out, _ = run(capsys, "tau", "--n", "5", "--k", "1")
    assert code == 0
    fields = dict(line.split(None, 1) for line in out.strip().splitlines())
    assert float(fields["tau"]) == 0.25
    assert float(fields["closed_form"]) == 0.25
    assert abs(float(fields["difference"])) <= 1e-12
    assert fields["method"] == "root-finding"


def test_tau_json(capsys):
    code, out, _ = run(capsys, "tau", "--n", "3", "--k", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert list(rec) == ["n", "k", "tau", "omega", "method", "closed_form", "difference"]
    assert rec["tau"] == pytest.approx(1 / 3, abs=1e-15)


def test_tau_six_one(capsys):
    code, out, _ = run(capsys, "tau", "--n", "6", "--k", "1", "--format", "json")
    assert json.loads(out)["tau"] == pytest.approx(0.2391790669678294, abs=1e-14)


def test_tau_without_closed_form(capsys):
    code, out, _ = run(capsys, "tau", "--n", "20", "--k", "3", "--format", "json")
    assert code == 0 and "closed_form" not in json.loads(out)


@pytest.mark.parametrize("argv", [["tau", "--n", "3", "--k", "3"], ["tau", "--n", "5", "--k", "0"]])
def test_tau_domain_error(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_table_rows_and_header(capsys):
    code, out, _ = run(capsys, "table", "--k-range", "1..3", "--n-max", "12", "--format", "csv")
    rows = read_table(out)
    assert code == 0
    assert out.splitlines()[1] == ",".join(TABLE_FIELDS)
    assert len(rows) == 27
    assert all(r["violations"] == "" for r in rows)
    assert [(int(r["k"]), int(r["n"])) for r in rows] == sorted((int(r["k"]), int(r["n"])) for r in rows)
    cell = next(r for r in rows if r["k"] == "1" and r["n"] == "5")
    assert float(cell["tau"]) == 0.25


def test_table_digits(capsys):
    _, out, _ = run(capsys, "table", "--k-range", "2..2", "--n-max", "9", "--precision", "18")
    for row in read_table(out):
        for f in ("tau", "omega", "delta", "thm12_first", "thm12_second"):
            v = row[f]
            assert "e" not in v.lower()
            digits = v.replace("-", "").replace(".", "").lstrip("0")
            assert len(digits) == 18 or float(v) == 0


def test_table_deterministic_across_threads(tmp_path):
    outs = []
    for threads in ("1", "7"):
        path = tmp_path / f"t{threads}.csv"
        assert main(["table", "--k-range", "1..3", "--n-max", "12", "--threads", threads, "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_table_json_mirrors_csv(capsys):
    _, out_csv, _ = run(capsys, "table", "--k-range", "1..1", "--n-max", "6", "--format", "csv")
    _, out_json, _ = run(capsys, "table", "--k-range", "1..1", "--n-max", "6", "--format", "json")
    rows_csv = read_table(out_csv)
    rows_json = json.loads(out_json)
    assert [list(r) for r in rows_json] == [list(TABLE_FIELDS)] * len(rows_json)
    for a, b in zip(rows_csv, rows_json):
        assert float(a["tau"]) == b["tau"]
        assert float(a["delta"]) == b["delta"]


@pytest.mark.parametrize("k_range", ["3..2", "0..2", "abc", "5..5"])
def test_table_bad_ranges(capsys, k_range):
    code, _, _ = run(capsys, "table", "--k-range", k_range, "--n-max", "6")
    assert code == 2


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "30", "--k", "5", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["violations"] == ""
    assert rec["tau"] < rec["delta"] <= rec["thm12_first"] ** 0.5 <= rec["thm12_second"] ** 0.5


def test_limits(capsys):
    code, out, _ = run(capsys, "limits", "--star", "--k", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["exact"] == pytest.approx(0.217234, abs=1e-5)
    assert rec["asymptotic"] == pytest.approx(0.13764, abs=1e-4)
    assert rec["ratio"] == pytest.approx(rec["exact"] / rec["asymptotic"], rel=1e-12)
    assert [r["n"] for r in rec["convergence"]] == [10, 50, 250, 1000]

    code, out, _ = run(capsys, "limits", "--dstar", "--m", "2", "--format", "json")
    assert json.loads(out)["exact"] == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize(
    "argv",
    [
        ["limits", "--star", "--k", "0"],
        ["limits", "--star"],
        ["limits", "--dstar", "--m", "1"],
        ["limits", "--star", "--k", "2", "--n-list", "3,10"],
    ],
)
def test_limits_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "monotonicity", "--k", "3", "--n-max", "60"],
        ["verify", "majorant", "--n", "20", "--k", "4"],
        ["verify", "szasz", "--lambda", "-0.25", "--n-max", "15"],
        ["verify", "szasz", "--lambda", "0", "--n-max", "12"],
        ["verify", "chain", "--n-max", "25", "--k-range", "1..5"],
        ["verify", "closed-forms", "--k-range", "1..8"],
    ],
)
def test_verify_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.startswith("PASS")


def test_verify_failure_prints_counterexample(capsys, monkeypatch):
    from chebtau import verify

    monkeypatch.setattr(verify, "tau", lambda n, k: type("T", (), {"value": float(n)})())
    code, out, _ = run(capsys, "verify", "monotonicity", "--k", "1", "--n-max", "6")
    assert code == 1
    assert out.startswith("FAIL") and "counterexample" in out


def test_verify_bad_lambda(capsys):
    assert run(capsys, "verify", "szasz", "--lambda", "-0.7")[0] == 2


def test_usage_errors():
    for argv in (["tau"], ["nope"], ["tau", "--n", "5", "--k", "1", "--precision", "10"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chebtau", "tau", "--n", "5", "--k", "1", "--format", "csv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == CSV_VERSION


def test_fmt_significant_digits():
    assert fmt(0.25, 15) == "0.250000000000000"
    assert fmt(1 / 3, 15) == "0.333333333333333"
    assert fmt(123.5, 16) == "123.5000000000000"
    assert fmt(2.5e-7, 15) == "0.000000250000000000000"
    assert fmt(7, 15) == "7"
