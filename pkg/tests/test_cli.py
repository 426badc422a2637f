import json
import subprocess
import sys

import jsonschema
import pytest

from metaplectic_whittaker.cli import main, schema_path

SCHEMA = json.loads(schema_path().read_text())

RUNS = [
    ["whittaker", "-r", "1", "-n", "1", "--lambda", "0"],
    ["whittaker", "-r", "2", "-n", "2", "--lambda", "1,0", "--normalization", "printed"],
    ["gt-ppart", "-r", "2", "-n", "2", "--lambda", "1,1"],
    ["compare", "-r", "1", "-n", "1", "--lambda", "0"],
    ["compare", "-r", "2", "-n", "3", "--lambda", "1,0", "-p", "13", "--points", "2"],
    ["gk", "-r", "2", "-n", "2", "-D", "6"],
    ["gkw", "-r", "2", "-n", "1", "-D", "4", "--word", "1,2"],
    ["gkw", "-r", "3", "-n", "2", "-D", "3", "--random", "2"],
    ["gauss-table", "-p", "13", "-n", "3"],
    ["crystal-enum", "-r", "2", "--lambda", "1,0"],
    ["transition", "--case", "B2", "--m", "1,2,0,3"],
    ["transition", "-r", "3", "--word", "1,2,1,3,2,1", "--target", "3,2,3,1,2,3", "--m", "1,0,2,0,1,1"],
    ["simulate", "-r", "2", "-p", "5", "--samples", "40"],
    ["integrate", "-r", "1", "-p", "5", "-n", "2", "--lambda", "1", "--max-sum", "2"],
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", RUNS, ids=lambda a: " ".join(a))
def test_outputs_validate_against_schema(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["meta"]["config"]["subcommand"] == argv[0]


def test_whittaker_rank_one_terms(capsys):
    _, out, _ = run(["whittaker", "-r", "1", "--lambda", "0", "--normalization", "printed"], capsys)
    poly = json.loads(out)["result"]["polynomial"]
    assert [t["exponents"] for t in poly] == [[0], [1]]
    # -(q-1) q^-2 = -q^-1 + q^-2
    assert sorted((c["q_power"], c["rational"]) for c in poly[1]["coefficient"]) == [(-2, "1"), (-1, "-1")]


def test_verdicts(capsys):
    _, out, _ = run(["gk", "-r", "2", "-n", "2", "-D", "6"], capsys)
    assert json.loads(out)["result"]["verdict"] == "equal"
    _, out, _ = run(["compare", "-r", "1", "-n", "1", "--lambda", "0"], capsys)
    res = json.loads(out)["result"]
    assert res["verdict"] == "match" and "calibration" in res


@pytest.mark.parametrize("argv", [
    ["whittaker", "-r", "2", "--lambda", "1"],
    ["whittaker", "--lambda", "a"],
    ["nonsense"],
    ["gauss-table", "-p", "13", "-n", "5"],
    ["gt-ppart", "-r", "2", "--lambda", "1,-1"],
    ["transition", "--case", "A2", "--m", "1,2"],
    ["integrate", "-r", "3", "-p", "5", "--lambda", "0,0,0"],
    ["simulate", "-r", "2"],
    ["whittaker", "--threads", "0"],
])
def test_invalid_arguments_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == "" and err


def test_resource_limit_exit_3(capsys):
    code, _, err = run(["integrate", "-r", "2", "-p", "5", "-n", "2", "--lambda", "1,1", "--budget", "20"], capsys)
    assert code == 3
    assert "depth" in err


def test_mismatch_exit_4(capsys):
    argv = ["compare", "-r", "2", "-n", "1", "--lambda", "0,0",
            "--normalization", "printed", "--gt-normalization", "printed"]
    code, out, _ = run(argv, capsys)
    assert code == 4
    assert json.loads(out)["result"]["verdict"] == "mismatch"


def test_byte_identical_runs(capsys):
    argv = ["simulate", "-r", "2", "-p", "5", "--samples", "30", "--seed", "7"]
    outs = {run(argv, capsys)[1] for _ in range(2)}
    assert len(outs) == 1
    other = run(argv[:-1] + ["8"], capsys)[1]
    assert json.loads(other)["meta"]["config"]["seed"] == 8


def test_default_seed_is_recorded(capsys):
    _, out, _ = run(["simulate", "-r", "1", "-p", "5", "--samples", "5"], capsys)
    assert json.loads(out)["meta"]["config"]["seed"] == 20240607


def test_threads_do_not_change_the_result(capsys):
    base = ["integrate", "-r", "2", "-p", "3", "-n", "2", "--lambda", "0,1", "--max-sum", "1"]
    one = json.loads(run(base, capsys)[1])["result"]
    two = json.loads(run(base + ["--threads", "2"], capsys)[1])["result"]
    assert one["cells"] == two["cells"]


def test_csv_and_pretty_and_out(tmp_path, capsys):
    code, out, _ = run(["crystal-enum", "-r", "1", "--lambda", "1", "--format", "csv"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "m" and len(lines) == 1 + 3
    code, out, _ = run(["gk", "-r", "1", "--format", "pretty"], capsys)
    assert "verdict: equal" in out
    target = tmp_path / "o.json"
    code, out, _ = run(["gauss-table", "-p", "5", "-n", "2", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    jsonschema.validate(json.loads(target.read_text()), SCHEMA)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "metaplectic_whittaker.cli", "gk", "-r", "1", "-D", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["verdict"] == "equal"
