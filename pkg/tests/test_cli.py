import csv
import io
import json
import subprocess
import sys
from collections import defaultdict
from fractions import Fraction

import pytest

from bernoulli_explicit import bench, checks
from bernoulli_explicit.bernoulli import BernoulliValue, Method
from bernoulli_explicit.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_bern_json_round_trip():
    code, text = run("bern", "--max", "10", "--formula", "all", "--format", "json")
    assert code == 0
    rows = json.loads(text)
    by_index = defaultdict(set)
    for row in rows:
        assert set(row) == {"index", "value", "method"}
        by_index[row["index"]].add(row["value"])
    assert all(len(values) == 1 for values in by_index.values())
    assert by_index[10] == {"5/66"}
    assert max(by_index) == 11
    methods_at_5 = {r["method"] for r in rows if r["index"] == 5}
    assert methods_at_5 == {"eq1", "eq2", "eq3", "eq4", "oracle"}


def test_bern_csv_and_plain():
    code, text = run("bern", "--max", "3", "--formula", "eq3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [(r["index"], r["value"]) for r in rows] == [("1", "-1/2"), ("2", "1/6"), ("3", "0")]
    code, text = run("bern", "--max", "1", "--formula", "eq1")
    assert text.strip() == "B_2 = 1/6  [eq1]"


def test_tables_formats():
    code, text = run("tables", "--kind", "stirling", "--max", "3", "--format", "csv")
    assert code == 0
    assert text.splitlines() == ["row,index,value", "1,1,1", "2,1,1", "2,2,1", "3,1,1", "3,2,3", "3,3,1"]
    code, text = run("tables", "--kind", "eulerian", "--max", "4", "--format", "json")
    assert json.loads(text) == [["1"], ["1", "1"], ["1", "4", "1"], ["1", "11", "11", "1"]]
    code, text = run("tables", "--kind", "eulerian", "--max", "3", "--format", "csv")
    assert text.splitlines()[1:] == ["1,0,1", "2,0,1", "2,1,1", "3,0,1", "3,1,4", "3,2,1"]


def test_polylog_plain_and_json():
    code, text = run("polylog", "--order", "2", "--form", "both", "--eval", "1/2")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "stirling: (-x + x^2)/(1+x)^3"
    assert lines[1] == "eulerian: (-x + x^2)/(1+x)^3"
    assert lines[2].endswith("= -2/27")
    code, text = run("polylog", "--order", "3", "--form", "eulerian", "--format", "json")
    data = json.loads(text)
    assert data["forms"]["eulerian"]["numerator"] == ["0", "-1", "4", "-1"]
    assert data["forms"]["eulerian"]["denominator_exponent"] == 4


def test_polylog_usage_errors():
    assert run("polylog", "--order", "0", "--form", "eulerian")[0] == 2
    assert run("polylog", "--order", "2", "--eval", "-1")[0] == 2
    assert run("polylog", "--order", "2", "--eval", "x")[0] == 2


def test_verify_small_and_usage():
    code, text = run("verify", "--max", "1")
    assert code == 0
    names = [line.split()[1] for line in text.splitlines()[:-1]]
    assert names[:5] == ["eq1", "eq2", "eq3", "eq4", "forms_equal"]
    assert run("verify", "--max", "0")[0] == 2


def test_verify_fifty():
    code, text = run("verify", "--max", "50", "--format", "json")
    assert code == 0
    assert all(item["pass"] for item in json.loads(text))


def test_verify_names_first_failure(monkeypatch, capsys):
    real = checks.bernoulli_eq2

    def broken(r, table=None):
        v = real(r, table)
        return BernoulliValue(v.index, v.value + (r == 3), v.method)

    monkeypatch.setattr(checks, "bernoulli_eq2", broken)
    code, _ = run("verify", "--max", "5")
    assert code == 1
    assert "eq2 at r=3" in capsys.readouterr().err


def test_quadcheck_json_and_exit_codes():
    code, text = run("quadcheck", "--eq", "11", "--max-r", "1", "--n", "1/3", "--format", "json")
    assert code == 0
    reports = json.loads(text)
    assert [(d["r"], d["n"]) for d in reports] == [(0, "1/3"), (1, "1/3")]
    assert all(d["passed"] for d in reports)
    code, text = run("quadcheck", "--eq", "6", "--format", "json")
    (d,) = json.loads(text)
    assert d["identity"] == "EQ6" and Fraction(d["exact_target"]) == Fraction(-1, 2)
    assert run("quadcheck", "--eq", "5", "--n", "1/2")[0] == 2
    assert run("quadcheck", "--eq", "11", "--n", "3/2")[0] == 2
    assert run("quadcheck", "--eq", "6", "--tol", "1e-40")[0] == 1


def test_quadcheck_all_default():
    code, text = run("quadcheck")
    assert code == 0
    assert len(text.splitlines()) == 1 + 9 + 8 + 21


def test_bench_structure_and_usage():
    code, text = run("bench", "--max", "1", "--reps", "1", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert set(data["method_seconds"]) == {"eq1", "eq2", "eq3", "eq4", "oracle"}
    assert set(data["table_seconds"]) == {"stirling", "eulerian"}
    assert run("bench", "--max", "5", "--reps", "0")[0] == 2


def test_bench_verifies_before_timing(monkeypatch):
    monkeypatch.setattr(bench, "bernoulli_eq4", lambda r, t=None: BernoulliValue(r, Fraction(7), Method.EQ4))
    with pytest.raises(AssertionError):
        bench.run_bench(4, 1)


def test_bench_hundred():
    report = bench.run_bench(100, 3)
    assert len(report.method_seconds) == 5
    assert all(t > 0 for t in report.method_seconds.values())


def test_unknown_flags_and_missing_subcommand():
    assert run("bern", "--max", "3", "--bogus")[0] == 2
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bernoulli_explicit", "bern", "--max", "2", "--formula", "oracle", "--format", "json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert [d["value"] for d in json.loads(proc.stdout)] == ["1", "-1/2", "1/6", "0"]
