"""End-to-end CLI behavior through click's test runner."""

import csv
import io
import json

from click.testing import CliRunner

from fourn.cli import OutputRecord, main


def run(*args):
    return CliRunner().invoke(main, [str(a) for a in args])


def test_solve_basic():
    res = run("solve", 2)
    assert res.exit_code == 0
    assert "1/1 + 1/2 + 1/2" in res.output


def test_solve_all_text_contains_both_known_solutions():
    res = run("solve", 5, "--all", "--format", "text")
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert len(lines) == 2
    assert any("1/2 + 1/4 + 1/20" in ln for ln in lines)
    assert any("1/2 + 1/5 + 1/10" in ln for ln in lines)


def test_solve_rejects_n_below_2():
    res = run("solve", 1)
    assert res.exit_code == 2
    res = run("solve", "abc")
    assert res.exit_code == 2


def test_solve_json_schema():
    res = run("solve", 341, "--format", "json")
    assert res.exit_code == 0
    obj = json.loads(res.output.strip())
    assert list(obj) == ["n", "method", "params", "x", "y", "z"]
    assert obj["n"] == 341
    # record round-trips losslessly
    rec = OutputRecord.from_json(res.output.strip())
    assert rec.to_json() == res.output.strip()


def test_solve_csv():
    res = run("solve", 5, "--format", "csv")
    rows = list(csv.reader(io.StringIO(res.output)))
    assert rows[0] == ["n", "method", "x", "y", "z"]
    assert rows[1] == ["5", "mod3_identity", "2", "5", "10"]


def test_range_stats_clean():
    res = run("range", 2, 100, "--stats")
    assert res.exit_code == 0
    report = json.loads(res.output.strip().splitlines()[-1])
    assert report["range"] == [2, 100]
    assert report["unsolved"] == []
    assert sum(report["per_method_counts"].values()) == 99


def test_range_csv_rows():
    res = run("range", 2, 10, "--format", "csv")
    assert res.exit_code == 0
    rows = list(csv.reader(io.StringIO(res.output)))
    assert rows[0] == ["n", "method", "x", "y", "z"]
    assert len(rows) == 10  # header + 9 data rows


def test_range_invalid_bounds():
    assert run("range", 10, 2).exit_code == 2


def test_range_json_and_csv_same_records():
    jres = run("range", 2, 60, "--format", "json")
    cres = run("range", 2, 60, "--format", "csv")
    jrecs = [
        (o["n"], o["method"], o["x"], o["y"], o["z"])
        for o in map(json.loads, jres.output.strip().splitlines())
    ]
    rows = list(csv.reader(io.StringIO(cres.output)))[1:]
    crecs = [(int(r[0]), r[1], int(r[2]), int(r[3]), int(r[4])) for r in rows]
    assert jrecs == crecs


def test_range_deterministic_output():
    a = run("range", 2, 80, "--format", "json")
    b = run("range", 2, 80, "--format", "json")
    assert a.output == b.output


def test_range_out_file(tmp_path):
    target = tmp_path / "records.jsonl"
    res = run("range", 2, 12, "--out", str(target))
    assert res.exit_code == 0
    lines = target.read_text().strip().splitlines()
    assert len(lines) == 11
    assert json.loads(lines[0])["n"] == 2


def test_oracle_command():
    res = run("oracle", 5, "--all")
    assert res.exit_code == 0
    assert res.output.splitlines() == [
        "4/5 = 1/2 + 1/4 + 1/20",
        "4/5 = 1/2 + 1/5 + 1/10",
    ]
    res = run("oracle", 5)
    assert res.output.strip() == "4/5 = 1/2 + 1/4 + 1/20"
    res = run("oracle", 97, "--x-max", 24)
    assert res.exit_code == 1  # bound excludes the feasible window


def test_greedy_command():
    res = run("greedy", 17)
    assert res.exit_code == 0
    assert res.output.strip() == "4/17 = 1/5 + 1/29 + 1/1233 + 1/3039345"
    res = run("greedy", 17, "--format", "json")
    assert json.loads(res.output)["terms"] == [5, 29, 1233, 3039345]


def test_mordell_command():
    assert run("mordell", 1009).output.strip() == "true"
    assert run("mordell", 5).output.strip() == "false"
    assert run("mordell", 1009).exit_code == 0


def test_lemma1_reports_counterexamples_and_exits_1():
    res = run("lemma1", "--limit", 100)
    assert res.exit_code == 1
    assert "sixfold-union" in res.output
    assert "9" in res.output.split("sixfold-union", 1)[1].splitlines()[0]
    assert "unit-digit-partition: holds up to 100" in res.output


def test_lemma1_json():
    res = run("lemma1", "--limit", 100, "--format", "json")
    objs = [json.loads(ln) for ln in res.output.strip().splitlines()]
    by_name = {o["identity"]: o for o in objs}
    assert by_name["unit-digit-partition"]["holds"] is True
    assert by_name["sixfold-union"]["holds"] is False
    assert {"value": 9, "side": "rhs-only"} in by_name["sixfold-union"]["counterexamples"]


def test_big_integer_input_accepted():
    # arbitrary-width decimal input; 10^18 + 1 is 2 mod 3 so it solves fast
    res = run("solve", 10**18 + 1, "--format", "json")
    assert res.exit_code == 0
    assert json.loads(res.output)["n"] == 10**18 + 1
