import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import NINE_GAPS, TABLE_D2_E6
from gns import cli
from gns.enumeration import CountRow
from gns.errors import UsageError

GOLDEN = Path(__file__).parent / "golden"

NINE = json.dumps([list(p) for p in NINE_GAPS])


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_nine_gaps(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--gaps", NINE, "--dim", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["fa"] == [[1, 4], [3, 2]]
    assert doc["report"]["pf"] == [[2, 1], [1, 3], [1, 4], [3, 2]]
    assert doc["report"]["type"] == 4


def test_analyze_trivial(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--gaps", "[]", "--dim", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["trivial"] is True and doc["genus"] == 0


def test_table1_text_rows(capsys):
    code, out, _ = run_cli(capsys, "table1", "--dim", "2", "--edim", "6",
                           "--max-genus", "3", "--format", "text")
    assert code == 0
    assert out.splitlines() == ["1,0,0,0", "2,2,0,2", "3,4,2,2"]


def test_table1_csv_and_json(capsys):
    code, out, _ = run_cli(capsys, "table1", "--dim", "2", "--edim", "6",
                           "--max-genus", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "g,AS,Sym,PSym"
    assert len(lines) == 6
    code, out, _ = run_cli(capsys, "table1", "--dim", "2", "--edim", "6",
                           "--max-genus", "5", "--format", "json")
    rows = json.loads(out)
    for row in rows:
        assert (row["AS"], row["Sym"], row["PSym"]) == TABLE_D2_E6[row["genus"]]


def test_emit_table_direct():
    rows = [CountRow(1, {"AS": 0, "Sym": 0, "PSym": 0})]
    assert cli.emit_table(rows, "text") == "1,0,0,0"
    assert cli.emit_table(rows, "csv").startswith("g,AS,Sym,PSym\n")
    assert json.loads(cli.emit_table(rows, "json"))[0]["genus"] == 1
    with pytest.raises(UsageError):
        cli.emit_table(rows, "tsv")
    with pytest.raises(UsageError):
        cli.emit_table([], "csv")


def test_enumerate_count(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--dim", "2", "--max-genus", "3",
                           "--min-genus", "3", "--up-to-permutation")
    assert code == 0
    assert json.loads(out)["count"] == 12


def test_family_subcommand(capsys):
    params = json.dumps({"kind": "cross", "first": [2, 3], "second": [2, 3]})
    code, out, _ = run_cli(capsys, "family", "--params", params)
    assert code == 0
    doc = json.loads(out)
    assert doc["witnesses"]["points"] == {"tall_gap": [1, 2], "wide_gap": [2, 1]}
    params = json.dumps({"kind": "axis_pair", "axis": 0, "odd_gen": 5, "heights": {"1": 1}})
    code, out, _ = run_cli(capsys, "family", "--params", params)
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_conjecture_subcommand(capsys):
    code, out, _ = run_cli(capsys, "conjecture", "--dim", "2", "--max-genus", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["max_type"] == 2 and doc["counterexamples"] == []


def test_exit_code_undetermined(capsys):
    code, _, err = run_cli(capsys, "construct", "--generators",
                           "[[2,0],[3,0],[0,2],[0,3]]", "--dim", "2")
    assert code == 3
    assert "Undetermined" in err


def test_exit_code_usage(capsys):
    code, _, err = run_cli(capsys, "analyze", "--gaps", "[[1,1]]", "--dim", "2")
    assert code == 2
    code, _, err = run_cli(capsys, "analyze", "--gaps", "not json", "--dim", "2")
    assert code == 2
    code, _, _ = run_cli(capsys, "table1", "--dim", "2", "--edim", "9", "--max-genus", "3")
    assert code == 2
    assert cli.main(["bogus-command"]) == 2


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setenv("GNS_BUDGET_NODES", "10")
    code, _, err = run_cli(capsys, "enumerate", "--dim", "2", "--max-genus", "6")
    assert code == 3 and "BudgetExceeded" in err
    monkeypatch.delenv("GNS_BUDGET_NODES")
    code, _, _ = run_cli(capsys, "enumerate", "--dim", "2", "--max-genus", "3",
                         "--budget-nodes", "5")
    assert code == 3


def test_verify_quick(capsys):
    code, out, _ = run_cli(capsys, "verify", "--quick")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 10 and all(l.startswith("PASS") for l in lines)


def _run_subprocess(*argv):
    env = dict(os.environ)
    return subprocess.run(
        [sys.executable, "-m", "gns.cli", *argv],
        capture_output=True, env=env, check=False,
    )


def test_byte_identical_output_across_runs():
    for argv in (
        ("enumerate", "--dim", "2", "--max-genus", "3", "--up-to-permutation"),
        ("table1", "--dim", "2", "--edim", "6", "--max-genus", "4", "--format", "csv"),
        ("analyze", "--gaps", NINE, "--dim", "2"),
    ):
        first = _run_subprocess(*argv)
        second = _run_subprocess(*argv)
        assert first.returncode == 0
        assert first.stdout == second.stdout


@pytest.mark.parametrize("name,argv", [
    ("analyze_nine_gaps.json", ("analyze", "--gaps", NINE, "--dim", "2")),
    ("construct_six_generators.json",
     ("construct", "--generators", "[[0,3],[0,4],[0,5],[1,0],[4,1],[7,2]]", "--dim", "2")),
    ("table_d2_e6_g5.csv",
     ("table1", "--dim", "2", "--edim", "6", "--max-genus", "5", "--format", "csv")),
    ("enumerate_d2_g3_classes.json",
     ("enumerate", "--dim", "2", "--max-genus", "3", "--min-genus", "3", "--up-to-permutation")),
    ("family_axis_triple.json",
     ("family", "--params",
      '{"kind":"axis_triple","axis":0,"triple":[3,4,5],"heights":{"1":1}}')),
])
def test_golden_outputs(capsys, name, argv):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_input_file_roundtrip(tmp_path, capsys):
    doc = {"dim": 2, "gaps": [list(p) for p in NINE_GAPS]}
    path = tmp_path / "semigroup.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(path))
    assert code == 0
    assert json.loads(out)["genus"] == 9
