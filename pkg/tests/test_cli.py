"""Command-line interface: exit codes, formats, config precedence, warnings."""

import csv
import io
import json

import pytest

from stokes_isola import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out, err = run(capsys, "verify")
        assert code == 0
        assert "checks passed" in out
        # every reported line carries an ok marker
        summary = out.strip().splitlines()[-1]
        passed, total = summary.split()[0].split("/")
        assert passed == total

    def test_perturbation_is_caught(self, capsys):
        code, out, err = run(capsys, "verify", "--perturb", "beta3_eff")
        assert code == 1

    def test_unmatched_perturbation_is_usage_error(self, capsys):
        code, out, err = run(capsys, "verify", "--perturb", "no-such-check")
        assert code == 2
        assert "matches no check" in err

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "verify.csv"
        code, out, err = run(capsys, "verify", "--out", str(dest))
        assert code == 0
        header, rows = parse_csv(dest.read_text())
        assert header[0] == "name"
        assert len(rows) >= 70


class TestIsola:
    def test_csv_shape(self, capsys):
        code, out, err = run(
            capsys, "isola", "--eps", "0.06", "--samples", "5", "--trunc", "24"
        )
        assert code == 0
        header, rows = parse_csv(out)
        assert header == [
            "eps", "mu", "re_plus", "im_plus", "re_minus", "im_minus",
            "source", "status",
        ]
        sources = {r[6] for r in rows}
        assert {"theory", "oracle", "summary-theory", "summary-oracle"} <= sources
        for r in rows:
            float(r[0]), float(r[1])

    def test_seventeen_digit_cells(self, capsys):
        code, out, err = run(
            capsys, "isola", "--eps", "0.06", "--samples", "3", "--trunc", "24"
        )
        header, rows = parse_csv(out)
        assert rows[0][0] == "%.17g" % 0.06

    def test_json_roundtrip_and_echo(self, capsys):
        code, out, err = run(
            capsys, "isola", "--eps", "0.05", "--samples", "3", "--trunc", "24",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["config"]["samples"] == 3
        assert doc["config"]["eps"] == [0.05]
        assert len(doc["curves"]) >= 3

    def test_deterministic_output(self, capsys):
        args = ("isola", "--eps", "0.05", "--samples", "3", "--trunc", "24")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_rejects_single_sample(self, capsys):
        code, out, err = run(capsys, "isola", "--samples", "1")
        assert code == 2
        assert "samples" in err

    def test_rejects_negative_eps(self, capsys):
        code, out, err = run(capsys, "isola", "--eps", "-0.1")
        assert code == 2


class TestConfigFile:
    def test_flags_override_file(self, capsys, tmp_path):
        cfgfile = tmp_path / "run.json"
        cfgfile.write_text(json.dumps({"samples": 4, "eps": [0.05], "trunc": [24]}))
        code, out, err = run(
            capsys, "isola", "--config", str(cfgfile), "--samples", "6",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["config"]["samples"] == 6        # flag wins
        assert doc["config"]["eps"] == [0.05]       # file survives
        assert doc["config"]["trunc"] == [24]

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfgfile = tmp_path / "bad.json"
        cfgfile.write_text(json.dumps({"sample": 4}))
        code, out, err = run(capsys, "isola", "--config", str(cfgfile))
        assert code == 2
        assert "sample" in err

    def test_missing_file_rejected(self, capsys, tmp_path):
        code, out, err = run(capsys, "isola", "--config", str(tmp_path / "nope.json"))
        assert code == 2


class TestSpectrum:
    def test_tracked_pair_column(self, capsys):
        code, out, err = run(
            capsys, "spectrum", "--mu", "0.25", "--eps", "0.05", "--trunc", "16"
        )
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["re", "im", "tracked"]
        assert sum(int(r[2]) for r in rows) == 2
        assert len(rows) == 2 * (2 * 16 + 1)

    def test_brillouin_warning(self, capsys):
        code, out, err = run(
            capsys, "spectrum", "--mu", "0.55", "--eps", "0.05", "--trunc", "16"
        )
        assert code == 0
        assert "Floquet window" in err

    def test_rows_sorted_by_imaginary_part(self, capsys):
        code, out, err = run(
            capsys, "spectrum", "--mu", "0.25", "--eps", "0.05", "--trunc", "16"
        )
        _, rows = parse_csv(out)
        ims = [float(r[1]) for r in rows]
        assert ims == sorted(ims)


class TestConvergence:
    def test_ladder(self, capsys):
        code, out, err = run(
            capsys, "convergence", "--mu", "0.2475", "--eps", "0.06",
            "--trunc", "12", "--trunc", "16",
        )
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["N", "re_plus", "im_plus", "re_minus", "im_minus", "delta_prev"]
        assert [r[0] for r in rows] == ["12", "16"]
        assert rows[0][5] == ""
        assert float(rows[1][5]) < 1e-8

    def test_numerical_failure_exit_code(self, capsys):
        code, out, err = run(
            capsys, "convergence", "--mu", "0.55", "--eps", "0.0",
            "--trunc", "8", "--trunc", "12",
        )
        assert code == 3
        assert "numerical failure" in err


class TestCoeffs:
    def test_table(self, capsys):
        code, out, err = run(capsys, "coeffs")
        assert code == 0
        header, rows = parse_csv(out)
        assert header[0] == "name"
        names = {r[0] for r in rows}
        assert "beta3_eff" in names or any("beta3" in n for n in names)


class TestOutFile:
    def test_unwritable_path_is_io_error(self, capsys, tmp_path):
        code, out, err = run(
            capsys, "coeffs", "--out", str(tmp_path / "missing" / "x.csv")
        )
        assert code == 2
