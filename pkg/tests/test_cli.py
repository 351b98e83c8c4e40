"""Command-line interface tests: output formats, schemas, exit codes, determinism."""

import dataclasses
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

import tribilliards.cli as cli
from tribilliards.billiard import verify_class
from tribilliards.orbits import OrbitClass

GOLDEN_TABLE = Path(__file__).parent / "data" / "table60.csv"


def run_main(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:

    def test_human(self, capsys):
        code, out, _ = run_main(capsys, "count", "11")
        assert code == 0
        assert out == "O(11)=2\n"
        code, out, _ = run_main(capsys, "count", "12", "--primitive")
        assert code == 0
        assert out == "P(12)=1\n"

    def test_json(self, capsys):
        code, out, _ = run_main(capsys, "count", "11", "--format", "json")
        assert code == 0
        assert json.loads(out) == {"results": [{"n": 11, "kind": "O", "count": 2}]}

    def test_csv(self, capsys):
        code, out, _ = run_main(capsys, "count", "60", "--format", "csv")
        assert code == 0
        assert out == "n,kind,count\n60,O,11\n"

    def test_rejects_nonpositive(self, capsys):
        code, _, _ = run_main(capsys, "count", "0")
        assert code == 2


class TestTable:

    def test_csv_matches_golden_file(self, capsys):
        code, out, _ = run_main(capsys, "table", "--max", "60", "--format", "csv")
        assert code == 0
        assert out == GOLDEN_TABLE.read_text()

    def test_single_row(self, capsys):
        code, out, _ = run_main(capsys, "table", "--max", "1", "--format", "csv")
        assert code == 0
        assert out == "n,period,O,P\n1,2,0,0\n"

    def test_human_contains_aligned_rows(self, capsys):
        code, out, _ = run_main(capsys, "table", "--max", "12")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 13  # header + 12 rows
        assert lines[0].split() == ["n", "period", "O", "P"]
        assert lines[12].split() == ["12", "24", "3", "1"]

    def test_json_row_schema(self, capsys):
        code, out, _ = run_main(capsys, "table", "--max", "2", "--format", "json")
        payload = json.loads(out)
        assert payload["results"] == [
            {"n": 1, "period": 2, "O": 0, "P": 0},
            {"n": 2, "period": 4, "O": 1, "P": 1},
        ]


class TestEnumerate:

    def test_json_schema(self, capsys):
        code, out, _ = run_main(capsys, "enumerate", "11", "--format", "json")
        assert code == 0
        rows = json.loads(out)["results"]
        assert len(rows) == 2
        first = rows[0]
        assert first["x"] == 1 and first["y"] == 10
        assert first["period"] == 22
        assert first["length_squared"] == 111
        assert first["length"] == pytest.approx(10.535654, abs=1e-6)
        assert first["primitive"] is True
        assert first["repeats"] == 1
        assert first["base_x"] == 1 and first["base_y"] == 10
        assert first["angle_kind"] == "three-distinct"
        assert first["theta_tan_sq"] == "25/12"
        assert first["theta_deg"] == pytest.approx(55.284996, abs=1e-6)
        assert rows[1]["x"] == 4 and rows[1]["y"] == 7

    def test_iterate_origin_in_human_output(self, capsys):
        code, out, _ = run_main(capsys, "enumerate", "6")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert "(0,6)" in lines[0] and "2x(0,3)" in lines[0]
        assert "(3,3)" in lines[1] and "3x(1,1)" in lines[1]

    def test_primitive_flag_in_human_output(self, capsys):
        _, out, _ = run_main(capsys, "enumerate", "11")
        assert out.count("primitive") == 2

    def test_empty_enumeration(self, capsys):
        code, out, _ = run_main(capsys, "enumerate", "1")
        assert code == 0
        assert out == "no orbit classes of period 2\n"
        code, out, _ = run_main(capsys, "enumerate", "1", "--format", "json")
        assert json.loads(out) == {"results": []}
        code, out, _ = run_main(capsys, "enumerate", "1", "--format", "csv")
        assert out == ""


class TestVerify:

    def test_single_class(self, capsys):
        code, out, _ = run_main(capsys, "verify", "1", "10")
        assert code == 0
        assert "(1,10)" in out and "22 bounces" in out and "PASS" in out

    def test_whole_period_json(self, capsys):
        code, out, _ = run_main(capsys, "verify", "11", "--format", "json")
        assert code == 0
        rows = json.loads(out)["results"]
        assert [(r["x"], r["y"]) for r in rows] == [(1, 10), (4, 7)]
        for r in rows:
            assert r["passed"] is True
            assert r["closed"] is True
            assert r["bounces"] == 22
            assert r["offset"] == "1/21" or r["offset"] == "1/15"
            assert r["fundamental"] == 22 and r["repeats"] == 1

    def test_iterate_report(self, capsys):
        code, out, _ = run_main(capsys, "verify", "3", "3", "--format", "json")
        assert code == 0
        (row,) = json.loads(out)["results"]
        assert row["period"] == 12
        assert row["repeats"] == 3
        assert row["fundamental"] == 4
        assert row["first_closure"] == 4

    def test_empty_period(self, capsys):
        code, out, _ = run_main(capsys, "verify", "1")
        assert code == 0
        assert "no orbit classes" in out

    def test_singular_offset_exits_3(self, capsys):
        code, _, err = run_main(capsys, "verify", "1", "10", "--b", "9/10")
        assert code == 3
        assert "vertex" in err.lower()

    def test_invalid_class_exits_2(self, capsys):
        code, _, err = run_main(capsys, "verify", "1", "2")
        assert code == 2
        assert "mod 3" in err

    def test_too_many_arguments_exit_2(self, capsys):
        code, _, _ = run_main(capsys, "verify", "1", "2", "3")
        assert code == 2

    def test_check_failure_exits_1(self, capsys, monkeypatch):
        def broken(c, offset=None):
            report = verify_class(c, offset)
            return dataclasses.replace(report, checks=(("forced failure", False),))

        monkeypatch.setattr(cli, "verify_class", broken)
        code, out, _ = run_main(capsys, "verify", "1", "1")
        assert code == 1
        assert "FAIL" in out and "forced failure" in out


class TestFagnano:

    def test_human(self, capsys):
        code, out, _ = run_main(capsys, "fagnano", "1")
        assert code == 0
        assert "period 3" in out and "fundamental period 3" in out

    def test_json(self, capsys):
        code, out, _ = run_main(capsys, "fagnano", "2", "--format", "json")
        (row,) = json.loads(out)["results"]
        assert row == {
            "k": 2, "period": 9, "bounces": 9, "fundamental": 3,
            "closed": True, "labels": row["labels"],
        }
        assert len(row["labels"]) == 9
        assert set(row["labels"]) == {"0", "1", "2"}

    def test_zero_rejected(self, capsys):
        code, _, _ = run_main(capsys, "fagnano", "0")
        assert code == 2


class TestRender:

    def test_folded_file_written(self, capsys, tmp_path):
        out_file = tmp_path / "orbit.svg"
        code, out, _ = run_main(capsys, "render", "1", "10", "--out", str(out_file))
        assert code == 0
        assert str(out_file) in out
        text = out_file.read_text()
        assert text.startswith("<?xml")
        assert 'class="orbit"' in text

    def test_unfolded_file_written(self, capsys, tmp_path):
        out_file = tmp_path / "unfold.svg"
        code, _, _ = run_main(capsys, "render", "1", "1", "--unfolded", "--out", str(out_file))
        assert code == 0
        assert out_file.read_text().count('class="tile"') == 2

    def test_invalid_class_exits_2(self, capsys, tmp_path):
        code, _, err = run_main(capsys, "render", "1", "2", "--out", str(tmp_path / "x.svg"))
        assert code == 2
        assert "mod 3" in err

    def test_unwritable_path_exits_4(self, capsys, tmp_path):
        target = tmp_path / "missing" / "dir" / "o.svg"
        code, _, err = run_main(capsys, "render", "1", "1", "--out", str(target))
        assert code == 4
        assert "cannot write" in err


class TestHarness:

    def test_help_exits_zero(self, capsys):
        code, _, _ = run_main(capsys, "--help")
        assert code == 0

    def test_unknown_command_exits_2(self, capsys):
        code, _, _ = run_main(capsys, "no-such-command")
        assert code == 2

    def test_entry_raises_system_exit(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["tribilliards", "count", "11"])
        with pytest.raises(SystemExit) as info:
            cli.entry()
        assert info.value.code == 0

    def test_output_is_deterministic(self, capsys):
        outputs = set()
        for _ in range(2):
            _, out, _ = run_main(capsys, "enumerate", "24", "--format", "json")
            outputs.add(out)
        assert len(outputs) == 1

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "tribilliards", "table", "--max", "60", "--format", "csv"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == GOLDEN_TABLE.read_text()
