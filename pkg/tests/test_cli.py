import json

import pytest

from cuspcheck.cli import main

FIGURE1 = [
    "scan",
    "--template",
    "(1c,$b1)+(2s,$b2)",
    "--range",
    "b1=1:7:2",
    "--range",
    "b2=2:6:2",
    "--field",
    "totally-imaginary",
]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDual:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "dual", "7 2^2")
        assert code == 0
        assert out == (
            "p       = [7 2^2]\n"
            "p^t     = [3^2 1^5]\n"
            "(p^t)^- = [3^2 1^4]\n"
            "eta     = [3^2 1^4]\n"
        )

    def test_json(self, capsys):
        code, out, _ = run(capsys, "dual", "[8,8,1,1,1,1,1]", "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "p": "[8^2 1^5]",
            "p_transpose": "[7 2^7]",
            "decremented": "[7 2^6 1]",
            "eta": "[6 2^7]",
        }

    def test_even_weight_is_input_error(self, capsys):
        code, _, err = run(capsys, "dual", "2 2")
        assert code == 2 and "odd weight" in err

    def test_non_orthogonal_is_input_error(self, capsys):
        code, _, err = run(capsys, "dual", "4 1")
        assert code == 2 and "orthogonal" in err


class TestCollapse:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "collapse", "7 2^6 1")
        assert code == 0
        assert out == "p        = [7 2^6 1]\ncollapse = [6 2^7]\n"

    def test_odd_weight_error(self, capsys):
        code, _, err = run(capsys, "collapse", "3")
        assert code == 2 and "even weight" in err


class TestAnalyze:
    def test_text_status(self, capsys):
        code, out, _ = run(capsys, "analyze", "(1c,7)+(2s,2)", "--field", "general")
        assert code == 0
        assert "status    = NoCuspidal" in out
        assert "R2 kudla-rallis -> NoCuspidal" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "analyze", "(1c,7)+(2s,2)", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["status"] == "NoCuspidal"
        assert doc["n"] == 5
        assert doc["p_psi"] == "[7 2^2]"
        assert doc["eta"] == "[3^2 1^4]"
        assert doc["bounds"] == {
            "N_a": 8,
            "N1": 8,
            "N2": 8,
            "N1_witness": "[2^4]",
            "N2_witness": "[2^4]",
        }
        assert {"rule": "R2", "status": "NoCuspidal", "conditional_on": None} in doc["firings"]
        assert {"rule": "R3", "status": "NoCuspidal", "conditional_on": "upbfc"} in doc["firings"]

    def test_assume_flag(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "(1c,5)+(2s,2)", "--assume", "moeglin", "--format", "json"
        )
        assert code == 0 and json.loads(out)["status"] == "NoCuspidal"

    def test_invalid_parameter(self, capsys):
        code, _, err = run(capsys, "analyze", "(2s,3)")
        assert code == 2 and "even multiplicity" in err


class TestBounds:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "bounds", "(5o,1)+(2s,8)", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["bounds"]["N_a"] == 48
        assert doc["bounds"]["N1"] == 24
        assert doc["bounds"]["N2"] == 16
        assert doc["bounds"]["N1_witness"] == "[4^4 2^4]"
        assert doc["bounds"]["N2_witness"] == "[4^2 2^4]"


class TestScan:
    def test_csv_star_rows(self, capsys):
        code, out, _ = run(capsys, *FIGURE1, "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "b1,b2,status,rules"
        assert len(lines) == 13
        undetermined = [l for l in lines[1:] if ",Undetermined," in l]
        assert len(undetermined) == 4
        cells = {tuple(l.split(",")[:2]) for l in undetermined}
        assert cells == {("1", "2"), ("3", "2"), ("5", "2"), ("1", "4")}

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, *FIGURE1)
        assert code == 0
        assert out.splitlines()[0].split() == ["b1", "b2", "status", "rules"]

    def test_json_cells(self, capsys):
        code, out, _ = run(capsys, *FIGURE1, "--format", "json")
        doc = json.loads(out)
        assert code == 0 and len(doc["cells"]) == 12
        assert doc["field"] == "totally-imaginary"

    def test_invalid_cell_csv(self, capsys):
        code, out, _ = run(
            capsys, "scan", "--template", "(1c,$b)+(2s,2)", "--range", "b=1:2:1", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert any(line.startswith("2,Invalid,") for line in lines)

    def test_csv_row_count_matches_ranges(self, capsys):
        code, out, _ = run(
            capsys,
            "scan",
            "--template",
            "(1c,$b1)+(2s,$b2)",
            "--range",
            "b1=1:5:2",
            "--range",
            "b2=2:4:2",
            "--format",
            "csv",
        )
        lines = out.strip().split("\n")
        assert len(lines) - 1 == 3 * 2

    def test_empty_range(self, capsys):
        code, out, _ = run(
            capsys, "scan", "--template", "(1c,$b)+(2s,2)", "--range", "b=5:1:2", "--format", "csv"
        )
        assert code == 0
        assert out.strip() == "b,status,rules"

    def test_bad_range_spec(self, capsys):
        for bad in ["b", "b=1", "b=1:2:0", "b=x:2:1"]:
            code, _, err = run(capsys, "scan", "--template", "(1c,$b)+(2s,2)", "--range", bad)
            assert code == 2, bad

    def test_template_slot_mismatch(self, capsys):
        code, _, err = run(capsys, "scan", "--template", "(1c,$b)+(2s,$c)", "--range", "b=1:3:2")
        assert code == 2 and "slots" in err


class TestSatake:
    def test_json_values(self, capsys):
        for args, expected in [
            (("--n", "4"), {"theta": "2", "sharp": True, "source": "even-sharp"}),
            (
                ("--n", "5", "--field", "totally-imaginary"),
                {"theta": "2", "sharp": False, "source": "odd-imaginary"},
            ),
            (("--n", "5"), {"theta": "135/64", "sharp": False, "source": "odd-general"}),
        ]:
            code, out, _ = run(capsys, "satake", *args, "--format", "json")
            assert code == 0 and json.loads(out) == expected

    def test_text(self, capsys):
        code, out, _ = run(capsys, "satake", "--n", "5")
        assert code == 0 and "theta  = 135/64" in out

    def test_bad_n(self, capsys):
        code, _, _ = run(capsys, "satake", "--n", "0")
        assert code == 2


class TestSmall:
    def test_sp(self, capsys):
        code, out, _ = run(
            capsys, "small", "--group", "sp", "--n", "5", "--field", "totally-imaginary", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {
            "group": "sp",
            "n": 5,
            "nonsingular": "[2^5]",
            "expansion": "[2^5]",
            "grs_minimal": "[4 2^3]",
            "hypercuspidal": "NoneExist",
        }

    def test_so_odd(self, capsys):
        code, out, _ = run(capsys, "small", "--group", "so-odd", "--n", "4", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["nonsingular"] == "[2^4 1]"
        assert doc["expansion"] == "[3 2^2 1^2]"
        assert doc["conjectured_lower_bound"] == {"partition": "[3^2 1^3]", "conjectural": True}

    def test_so_even_text_flags_conjectural(self, capsys):
        code, out, _ = run(capsys, "small", "--group", "so-even", "--n", "4")
        assert code == 0 and "(conjectural)" in out


class TestHarness:
    def test_unknown_verb_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dual", "7 2^2", "--bogus"])
        assert exc.value.code == 2

    def test_csv_rejected_outside_scan(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "(1c,7)+(2s,2)", "--format", "csv"])
        assert exc.value.code == 2

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "result.txt"
        code, out, _ = run(capsys, "dual", "7 2^2", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text(encoding="utf-8").startswith("p       = [7 2^2]")

    def test_repeated_invocations_identical(self, capsys):
        _, first, _ = run(capsys, *FIGURE1, "--format", "csv")
        _, second, _ = run(capsys, *FIGURE1, "--format", "csv")
        assert first == second
