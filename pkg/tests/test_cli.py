import json
import math
import subprocess
import sys

import pytest

from tritoep.cli import main

SQRT2 = math.sqrt(2.0)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRun:
    def test_eig_json(self, capsys):
        code, out, _ = run_cli(capsys, "eig", "-a", "1", "-b", "2", "-c", "1",
                               "-n", "3", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["spec"] == {"a": 1.0, "b": 2.0, "c": 1.0, "n": 3,
                               "symmetrisable": True}
        assert doc["result"]["eigenvalues"] == pytest.approx(
            [2 + SQRT2, 2.0, 2 - SQRT2], rel=1e-13
        )
        assert doc["meta"]["version"]

    def test_eigenvector_flag(self, capsys):
        code, out, _ = run_cli(capsys, "eig", "-a", "4", "-b", "5", "-c", "1",
                               "-n", "2", "-k", "1", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["eigenvector"] == pytest.approx(
            [math.sqrt(3) / 2, math.sqrt(3)], rel=1e-13
        )

    def test_repunit_det_exact(self, capsys):
        code, out, _ = run_cli(capsys, "repunit", "det", "--base", "10",
                               "-n", "3", "--exact")
        assert code == 0
        assert out.strip() == "1111"

    def test_repunit_inverse_rational(self, capsys):
        code, out, _ = run_cli(capsys, "repunit", "inverse", "--base", "10",
                               "-n", "2", "-i", "1", "-j", "2", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["rational"] == "-1/111"

    def test_not_symmetrisable_exit_one(self, capsys):
        code, out, err = run_cli(capsys, "det", "-a", "1", "-b", "0", "-c", "-1",
                                 "-n", "2")
        assert code == 1
        assert out == ""
        assert "NotSymmetrisable" in err

    def test_singular_inverse_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "inverse", "-a", "1", "-b", "0", "-c", "1",
                               "-n", "3", "-i", "1", "-j", "1")
        assert code == 1
        assert "SingularMatrix" in err

    def test_decay_regime_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "decay", "-a", "1", "-b", "2", "-c", "1",
                               "-n", "3", "-i", "1", "-j", "2")
        assert code == 1
        assert "NotInGappedRegime" in err

    def test_unknown_flag_exit_two(self, capsys):
        code, _, _ = run_cli(capsys, "eig", "-a", "1", "-b", "2", "-c", "1",
                             "-n", "3", "--wat", "7")
        assert code == 2

    def test_missing_parameters_exit_two(self, capsys):
        code, _, err = run_cli(capsys, "eig", "-a", "1", "-b", "2")
        assert code == 2
        assert "missing" in err

    def test_solve_methods_agree(self, capsys):
        argv = ["solve", "-a", "10", "-b", "11", "-c", "1", "-n", "3",
                "--rhs", "1,0,0", "--format", "json"]
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv, "--method", "kernel")
        x1 = json.loads(out1)["result"]["solution"]
        x2 = json.loads(out2)["result"]["solution"]
        assert x1 == pytest.approx(x2, rel=1e-11)

    def test_charpoly_zero_at_eigenvalue(self, capsys):
        code, out, _ = run_cli(capsys, "charpoly", "-a", "1", "-b", "2", "-c", "1",
                               "-n", "3", "-t", "2.0", "--format", "json")
        assert code == 0
        assert json.loads(out)["result"]["sign"] == 0

    def test_cond_csv(self, capsys):
        code, out, _ = run_cli(capsys, "cond", "-a", "4", "-b", "5", "-c", "1",
                               "-n", "2", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "lambda_max,lambda_min,positive_definite,cond_weighted,formula_value"
        assert float(lines[1].split(",")[3]) == pytest.approx(7 / 3, rel=1e-13)


class TestVerify:
    def test_all_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "-a", "10", "-b", "11", "-c", "1",
                               "-n", "8")
        assert code == 0
        assert "FAIL" not in out
        assert out.count("PASS") >= 7

    def test_singular_skips(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "-a", "1", "-b", "0", "-c", "1",
                               "-n", "3")
        assert code == 0
        assert "SKIP (singular)" in out
        assert "FAIL" not in out

    def test_envelope_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify", "-a", "1", "-b", "2", "-c", "1",
                               "-n", "500")
        assert code == 2
        assert "envelope" in err

    def test_negative_q_branch_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "-a", "-1", "-b", "0.5", "-c", "-2",
                               "-n", "12")
        assert code == 0
        assert "FAIL" not in out


class TestBench:
    def test_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--grid", "8", "-a", "1",
                               "-b", "2.5", "-c", "1", "--reps", "0")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,apply_inverse_ms,thomas_ms,dense_ms,max_discrepancy"
        assert len(lines) == 2
        cells = lines[1].split(",")
        assert cells[0] == "8"
        assert float(cells[4]) <= 1e-8

    def test_gap_gating(self, capsys):
        # x = 1: apply_inverse is not offered, thomas and dense still compare
        code, out, _ = run_cli(capsys, "bench", "--grid", "16", "-a", "1",
                               "-b", "2", "-c", "1", "--reps", "2")
        assert code == 0
        cells = out.strip().splitlines()[1].split(",")
        assert cells[1] == "n/a"
        assert cells[2] != "n/a"
        assert cells[3] != "n/a"
        assert float(cells[4]) <= 1e-8

    def test_grid_order_and_discrepancy(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--grid", "8,16,32", "-a", "1",
                               "-b", "2.5", "-c", "1", "--reps", "0")
        assert code == 0
        lines = out.strip().splitlines()[1:]
        assert [row.split(",")[0] for row in lines] == ["8", "16", "32"]
        assert all(float(row.split(",")[4]) <= 1e-8 for row in lines)


class TestSpecFile:
    def test_round_trip(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "det", "-a", "10", "-b", "11", "-c", "1",
                               "-n", "3", "--format", "json")
        assert code == 0
        path = tmp_path / "out.json"
        path.write_text(out)
        code, out2, _ = run_cli(capsys, "eig", "--spec-file", str(path),
                                "--format", "json")
        assert code == 0
        code, out3, _ = run_cli(capsys, "eig", "-a", "10", "-b", "11", "-c", "1",
                                "-n", "3", "--format", "json")
        assert out2 == out3

    def test_flag_overrides_file(self, capsys, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"a": 1, "b": 2, "c": 1, "n": 3}))
        code, out, _ = run_cli(capsys, "eig", "--spec-file", str(path), "-n", "2",
                               "--format", "json")
        assert code == 0
        assert json.loads(out)["spec"]["n"] == 2


def test_cross_process_determinism():
    argv = [sys.executable, "-m", "tritoep", "eig", "-a", "1", "-b", "2",
            "-c", "1", "-n", "5", "--format", "json"]
    r1 = subprocess.run(argv, capture_output=True)
    r2 = subprocess.run(argv, capture_output=True)
    assert r1.returncode == r2.returncode == 0
    assert r1.stdout == r2.stdout
