import cmath
import json
import math
import os

from lerchzeta.cli import main
from lerchzeta import Word, monodromy_generator
from lerchzeta.words import Generator
from conftest import PI2_12


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_known_constant(self, capsys):
        code, out, _ = run(capsys, "eval", "--s", "2,0", "--a", "0.5,0", "--c", "1,0", "--tol", "1e-11")
        assert code == 0
        rec = json.loads(out)
        assert abs(rec["value"]["re"] - PI2_12) < 1e-9
        assert abs(rec["value"]["im"]) < 1e-9
        assert rec["abs_err"] < 1e-9

    def test_trivial_branch_matches_plain(self, capsys):
        base = ["--s", "0.5,0", "--a", "0.5,0", "--c", "0.5,0"]
        code1, out1, _ = run(capsys, "eval", *base)
        code2, out2, _ = run(capsys, "eval", *base, "--branch", "Y3^7")
        assert code1 == code2 == 0
        v1, v2 = json.loads(out1), json.loads(out2)
        assert v1["value"] == v2["value"]
        assert v2["branch"]["ky"] == {"3": 7}

    def test_winding_branch_shifts_value(self, capsys):
        base = ["--s", "0.5,0", "--a", "0.5,0", "--c", "0.5,0"]
        _, out0, _ = run(capsys, "eval", *base)
        _, out1, _ = run(capsys, "eval", *base, "--branch", "kx[0]=1")
        v0, v1 = json.loads(out0), json.loads(out1)
        delta = complex(v1["value"]["re"] - v0["value"]["re"], v1["value"]["im"] - v0["value"]["im"])
        want = monodromy_generator(Generator("X", 0), 0.5, 0.5, 0.5)
        assert abs(delta - want) < 1e-12

    def test_puncture_is_machine_readable_error(self, capsys):
        code, out, err = run(capsys, "eval", "--s", "0.5,0", "--a", "1,0", "--c", "0.5,0")
        assert code == 2
        assert out == ""
        rec = json.loads(err)
        assert rec["error"] == "InvalidPoint"
        assert "integer puncture" in rec["message"]

    def test_seventeen_digit_output(self, capsys):
        _, out, _ = run(capsys, "eval", "--s", "2,0", "--a", "0.5,0", "--c", "1,0")
        rec = json.loads(out)
        # round-trips exactly through the printed representation
        assert float(format(rec["value"]["re"], ".17g")) == rec["value"]["re"]


class TestMonodromyCommand:
    def test_commutator_is_zero(self, capsys):
        code, out, _ = run(
            capsys, "monodromy", "--word", "X0 Y0 X0^-1 Y0^-1",
            "--s", "0.3,0", "--a", "0.4,0", "--c", "0.6,0",
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["value"] == {"re": 0.0, "im": 0.0}
        assert rec["abelianization"] == {"kx": {}, "ky": {}}
        assert rec["contributions"] == []

    def test_power_word(self, capsys):
        code, out, _ = run(
            capsys, "monodromy", "--word", "X0^2", "--s", "0.3,0", "--a", "0.4,0", "--c", "0.6,0"
        )
        rec = json.loads(out)
        base = monodromy_generator(Generator("X", 0), 0.3, 0.4, 0.6)
        want = (cmath.exp(2j * math.pi * 0.3) + 1) * base
        got = complex(rec["value"]["re"], rec["value"]["im"])
        assert abs(got - want) < 1e-12
        assert rec["contributions"][0]["generator"] == "X0"
        assert rec["contributions"][0]["winding"] == 2

    def test_special_value_is_exact_zero(self, capsys):
        code, out, _ = run(
            capsys, "monodromy", "--word", "Y0", "--s", "-1,0", "--a", "0.4,0", "--c", "0.6,0"
        )
        rec = json.loads(out)
        assert rec["value"] == {"re": 0.0, "im": 0.0}

    def test_parse_error_exit_code(self, capsys):
        code, _, err = run(capsys, "monodromy", "--word", "Q0", "--s", "0.3,0", "--a", "0.4,0", "--c", "0.6,0")
        assert code == 2
        assert json.loads(err)["error"] == "WordParseError"


class TestVerify:
    def test_deterministic_output(self, capsys):
        args = ("verify", "--suite", "monodromy", "--samples", "5", "--seed", "7")
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "PASS" in out1

    def test_residue_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "residue", "--samples", "3", "--seed", "1")
        assert code == 0
        assert out.count("PASS") == 1


class TestGrid:
    def test_s_grid_shape_and_header(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(
            capsys, "grid", "--axis", "s", "--re", "0,1,11", "--im", "0,0,1",
            "--fixed-a", "0.5,0", "--fixed-c", "0.5,0", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert lines[0] == "coord_re,coord_im,z_re,z_im,abs_err,method"
        assert len(lines) == 12
        assert not any("skipped" in ln for ln in lines[1:])

    def test_removable_c_row_not_skipped(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(
            capsys, "grid", "--axis", "c", "--re", "1.5,2.5,3", "--im", "0,0,1",
            "--fixed-s", "0.7,0", "--fixed-a", "0.3,0.4", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        assert len(lines) == 4
        assert not any("skipped" in ln for ln in lines)
        # middle row is exactly c = 2
        assert lines[2].startswith("2,0,")

    def test_puncture_row_skipped(self, tmp_path, capsys):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(
            capsys, "grid", "--axis", "c", "--re", "-1,1,3", "--im", "0,0,1",
            "--fixed-s", "0.7,0", "--fixed-a", "0.3,0.4", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().splitlines()
        skipped = [ln for ln in lines[1:] if ln.endswith(",skipped")]
        assert len(skipped) == 2  # c = -1 and c = 0 are punctures
        assert any(ln.startswith("1,0,") and not ln.endswith("skipped") for ln in lines[1:])

    def test_json_format(self, tmp_path, capsys):
        out_path = tmp_path / "grid.json"
        code, _, _ = run(
            capsys, "grid", "--axis", "a", "--re", "0.2,0.8,4", "--im", "0.5,0.5,1",
            "--fixed-s", "1.5,0", "--fixed-c", "0.7,0", "--format", "json",
            "--out", str(out_path),
        )
        assert code == 0
        rows = json.loads(out_path.read_text())
        assert len(rows) == 4
        assert all("z" in row for row in rows)

    def test_unwritable_path(self, capsys):
        code, _, err = run(
            capsys, "grid", "--axis", "s", "--re", "0.2,0.8,2", "--im", "0,0,1",
            "--fixed-a", "0.5,0", "--fixed-c", "0.5,0",
            "--out", "/nonexistent-dir/grid.csv",
        )
        assert code == 2
        assert "error" in json.loads(err)

    def test_deterministic_bytes_and_threads(self, tmp_path, capsys):
        args = lambda path: (
            "grid", "--axis", "s", "--re", "0.2,1.4,5", "--im", "-0.3,0.3,2",
            "--fixed-a", "0.3,0.2", "--fixed-c", "0.7,0", "--out", path,
        )
        p1, p2 = str(tmp_path / "g1.csv"), str(tmp_path / "g2.csv")
        assert run(capsys, *args(p1))[0] == 0
        os.environ["LERCH_THREADS"] = "4"
        try:
            assert run(capsys, *args(p2))[0] == 0
        finally:
            del os.environ["LERCH_THREADS"]
        assert open(p1, "rb").read() == open(p2, "rb").read()


class TestGrammarRoundTrip:
    def test_parse_print_parse(self):
        for text in ("X0", "X0 Y-2^-1 X0^3", "Y5^2 X-3", ""):
            w = Word.parse(text)
            assert Word.parse(str(w)) == w
