import json

import pytest

from multidisc import disc_value, UniPoly
from multidisc.cli import main, run_selftest


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_reference_quintic(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--coeffs", "1,-5,7,1,-8,4")
        assert code == 0
        assert out.strip() == "2,2,1"

    def test_linear(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--coeffs", "1,0")
        assert code == 0
        assert out.strip() == "1"

    def test_trace_output(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--coeffs", "1,-5,7,1,-8,4", "--trace")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "D(5) = 0"
        assert lines[1] == "D(4,1) = 0"
        assert lines[2].startswith("D(3,2) = ") and "nonzero" in lines[2]
        assert lines[3] == "2,2,1"

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--coeffs", "1,-5,7,1,-8,4", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["input"] == "1,-5,7,1,-8,4"
        assert data["n"] == 5
        assert data["multiplicity"] == [2, 2, 1]
        assert data["steps"][0] == {"gamma": [5], "nonzero": False, "value": "0"}

    def test_json_round_trip_is_byte_identical(self, capsys):
        _, out, _ = run_cli(capsys, "classify", "--coeffs", "3/2,0,-5/7,1", "--json")
        emitted = out.strip()
        assert json.dumps(json.loads(emitted), sort_keys=True) == emitted

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "classify", "--coeffs", "1,-5,7,1,-8,4", "--trace")
        _, second, _ = run_cli(capsys, "classify", "--coeffs", "1,-5,7,1,-8,4", "--trace")
        assert first == second

    def test_zero_leading_coefficient(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--coeffs", "0,1")
        assert code == 2
        assert "leading coefficient is zero" in err

    def test_malformed_rational(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--coeffs", "1,frog,3")
        assert code == 2
        assert "malformed rational" in err

    def test_single_coefficient_rejected(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--coeffs", "5")
        assert code == 2
        assert "at least two" in err

    def test_rational_coefficients(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--coeffs", "1/2,-5/2,7/2,1/2,-4,2")
        assert code == 0
        assert out.strip() == "2,2,1"

    def test_batch_file(self, capsys, tmp_path):
        batch = tmp_path / "polys.txt"
        batch.write_text("1,-5,7,1,-8,4\n\n1,0\n1,2,1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "classify", "--file", str(batch))
        assert code == 0
        assert out.splitlines() == ["2,2,1", "1", "2"]

    def test_batch_file_json_lines(self, capsys, tmp_path):
        batch = tmp_path / "polys.txt"
        batch.write_text("1,0\n1,2,1\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "classify", "--file", str(batch), "--json")
        assert code == 0
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows[0]["multiplicity"] == [1]
        assert rows[1]["multiplicity"] == [2]

    def test_batch_file_bad_line(self, capsys, tmp_path):
        batch = tmp_path / "polys.txt"
        batch.write_text("1,0\n0,9\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "classify", "--file", str(batch))
        assert code == 2
        assert "line 2" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--file", "/nonexistent/path.txt")
        assert code == 2
        assert "cannot read" in err

    def test_coeffs_and_file_are_exclusive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "--coeffs", "1,0", "--file", "x.txt"])
        assert exc.value.code == 2


class TestDiscriminant:
    def test_poly_format_all_ones(self, capsys):
        code, out, _ = run_cli(
            capsys, "discriminant", "--n", "5", "--gamma", "1,1,1,1,1", "--format", "poly"
        )
        assert code == 0
        assert out.strip() == "86400000*a5^4"

    def test_matrix_format_symbolic(self, capsys):
        code, out, _ = run_cli(
            capsys, "discriminant", "--n", "5", "--gamma", "3,2", "--format", "matrix"
        )
        assert code == 0
        data = json.loads(out)
        assert data["size"] == 7
        assert data["symbolic"] is True
        assert data["blocks"] == [
            {"derivative": 0, "rows": [0, 1]},
            {"derivative": 1, "rows": [2, 3, 4]},
            {"derivative": 2, "rows": [5, 6]},
        ]
        assert json.dumps(json.loads(out.strip()), sort_keys=True) == out.strip()

    def test_matrix_format_concrete(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "discriminant",
            "--n",
            "5",
            "--gamma",
            "3,2",
            "--format",
            "matrix",
            "--coeffs",
            "1,-5,7,1,-8,4",
        )
        assert code == 0
        data = json.loads(out)
        assert data["symbolic"] is False
        # first row is F * x^1 right-aligned to width 7
        assert data["entries"][0] == ["1", "-5", "7", "1", "-8", "4", "0"]

    def test_latex_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "discriminant", "--n", "5", "--gamma", "3,2", "--format", "latex"
        )
        assert code == 0
        assert out.startswith(r"\left|\begin{array}")
        assert out.count(r"\hline") == 2

    def test_value_format(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "discriminant",
            "--n",
            "5",
            "--gamma",
            "3,2",
            "--format",
            "value",
            "--coeffs",
            "1,-5,7,1,-8,4",
        )
        assert code == 0
        expected = disc_value(UniPoly.from_descending([1, -5, 7, 1, -8, 4]), (3, 2)).value
        assert out.strip() == str(expected)
        assert expected != 0

    def test_value_requires_coeffs(self, capsys):
        code, _, err = run_cli(
            capsys, "discriminant", "--n", "5", "--gamma", "3,2", "--format", "value"
        )
        assert code == 2
        assert "requires --coeffs" in err

    def test_cap_exceeded_names_cap(self, capsys):
        code, _, err = run_cli(
            capsys, "discriminant", "--n", "7", "--gamma", "7", "--format", "poly"
        )
        assert code == 2
        assert "cap 6" in err

    def test_cap_override(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "discriminant",
            "--n",
            "7",
            "--gamma",
            "1,1,1,1,1,1,1",
            "--format",
            "poly",
            "--cap",
            "7",
        )
        assert code == 0
        assert out.strip().endswith("*a7^6")

    def test_invalid_gamma(self, capsys):
        code, _, err = run_cli(
            capsys, "discriminant", "--n", "5", "--gamma", "2,3", "--format", "matrix"
        )
        assert code == 2
        assert "not a partition" in err

    def test_degree_mismatch(self, capsys):
        code, _, err = run_cli(
            capsys,
            "discriminant",
            "--n",
            "4",
            "--gamma",
            "4",
            "--format",
            "value",
            "--coeffs",
            "1,0,0,0,0,1",
        )
        assert code == 2
        assert "degree" in err


class TestConditionsAndTable:
    def test_conditions_text(self, capsys):
        code, out, _ = run_cli(capsys, "conditions", "--n", "5")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        assert lines[0] == "mult = (1,1,1,1,1)  iff  D(5) != 0"
        assert lines[2] == "mult = (2,2,1)  iff  D(5) = 0 and D(4,1) = 0 and D(3,2) != 0"
        assert lines[-1].startswith("mult = (5)  iff  ")
        assert lines[-1].endswith("D(1,1,1,1,1) != 0")

    def test_conditions_json(self, capsys):
        code, out, _ = run_cli(capsys, "conditions", "--n", "5", "--json")
        assert code == 0
        data = json.loads(out)
        assert data[2] == {"mu": [2, 2, 1], "zero": [[5], [4, 1]], "nonzero": [3, 2]}

    def test_degree_table_csv(self, capsys):
        code, out, _ = run_cli(capsys, "degree-table", "--max-n", "9")
        assert code == 0
        assert out == (
            "n,d_yhz,d_hy21,d_hy22\n"
            "3,5,5,4\n"
            "4,9,7,6\n"
            "5,15,9,8\n"
            "6,27,11,10\n"
            "7,45,13,12\n"
            "8,81,15,14\n"
            "9,135,17,16\n"
        )


class TestSelftest:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run_cli(
            capsys, "selftest", "--max-n", "3", "--trials", "3", "--seed", "42", "--quiet"
        )
        assert code == 0
        assert out.strip().startswith("OK: ")
        assert out.strip().endswith("0 failures")

    def test_deterministic_given_seed(self):
        assert run_selftest(3, 4, 7, quiet=True) == run_selftest(3, 4, 7, quiet=True)
        checked, failures = run_selftest(4, 2, 11, quiet=True)
        assert failures == []
        assert checked > 0

    def test_progress_goes_to_stderr(self, capsys):
        code, out, err = run_cli(capsys, "selftest", "--max-n", "2", "--trials", "2")
        assert code == 0
        assert "degree 1 done" in err
        assert "OK:" in out

    def test_property_violation_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(
            "multidisc.cli.run_selftest",
            lambda *a, **k: (12, ["n=2 mu=(2,) trial=0: forced failure"]),
        )
        code, out, _ = run_cli(capsys, "selftest", "--max-n", "2", "--trials", "1")
        assert code == 1
        assert "FAIL: 12 properties, 1 failures" in out


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
