"""Integration tests for the CLI commands using Typer's CliRunner."""

import json
from pathlib import Path

from typer.testing import CliRunner

from bosonise import __version__, config
from bosonise.cli import app
from bosonise.multiplets import psi4
from bosonise.textfmt import format_polynomial

runner = CliRunner()

GOLDEN = Path(__file__).resolve().parents[1] / "golden"
ROW_FIELDS = {"label", "spherical", "polynomial", "norm_sq", "matches_paper", "in_reference_span"}


def run_json(*args: str) -> dict:
    result = runner.invoke(app, list(args))
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def write(tmp_path: Path, name: str, text: str) -> Path:
    path = tmp_path / name
    path.write_text(text)
    return path


class TestMainApp:
    def test_version_flag(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_no_command_shows_help(self):
        result = runner.invoke(app, [])
        assert result.exit_code == 0
        assert "Usage" in result.output

    def test_help_lists_commands(self):
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("shells", "shapes", "multiplets", "table1", "decompose", "rm", "laughlin"):
            assert command in result.output

    def test_verbose_flag(self):
        result = runner.invoke(app, ["-V", "shells", "-s", "1"])
        assert result.exit_code == 0


class TestShellsCommand:
    def test_second_shell(self):
        report = run_json("shells", "-N", "2", "-d", "3", "-s", "2")
        assert report["dimension"] == 28
        assert report["oracle_dimension"] == 28
        assert report["total_degree"] == 3
        assert len(report["basis"]) == 28

    def test_planar_triple(self):
        report = run_json("shells", "-N", "3", "-d", "2", "-s", "1")
        assert report["dimension"] == 6

    def test_one_dimension(self):
        report = run_json("shells", "-N", "2", "-d", "1")
        assert report["dimension"] == 1
        assert len(report["basis"]) == 1

    def test_text_format(self):
        result = runner.invoke(app, ["shells", "-s", "1", "--format", "text"])
        assert result.exit_code == 0
        assert "Dimension" in result.output
        assert "Basis" in result.output

    def test_cap_exceeded(self):
        result = runner.invoke(app, ["shells", "-s", "2", "--cap", "10"])
        assert result.exit_code == 3
        assert "cap" in result.output

    def test_invalid_particles(self):
        result = runner.invoke(app, ["shells", "-N", "0"])
        assert result.exit_code == 2
        assert "particles" in result.output

    def test_golden_must_be_json(self, tmp_path):
        result = runner.invoke(app, ["shells", "--golden", str(tmp_path / "golden.txt")])
        assert result.exit_code == 2

    def test_golden_match(self):
        result = runner.invoke(app, ["shells", "--golden", str(GOLDEN / "shells.json")])
        assert result.exit_code == 0, result.output

    def test_partial_golden_fails(self, tmp_path):
        golden = write(tmp_path, "shell.json", json.dumps({"dimension": 9, "total_degree": 2}))
        result = runner.invoke(app, ["shells", "-s", "1", "--golden", str(golden)])
        assert result.exit_code == 1
        assert "unlisted" in result.output

    def test_golden_mismatch(self, tmp_path):
        golden = write(tmp_path, "shell.json", json.dumps({"dimension": 27}))
        result = runner.invoke(app, ["shells", "-s", "2", "--golden", str(golden)])
        assert result.exit_code == 1
        assert "dimension" in result.output


class TestShapesCommand:
    def test_pair_shapes(self):
        report = run_json("shapes")
        assert report["complete"] is True
        assert report["expected"] == 4
        assert [e["index"] for e in report["shapes"]] == [1, 2, 3, 4]
        assert [e["norm_sq"] for e in report["shapes"]] == ["2", "2", "2", "8"]
        assert [e["shell"] for e in report["shapes"]] == [0, 0, 0, 2]
        assert report["shapes"][0]["polynomial"] == "1*t1+-1*t2"

    def test_planar_triple(self):
        report = run_json("shapes", "-N", "3", "-d", "2")
        assert [e["degree"] for e in report["shapes"]] == [2, 3, 3, 3, 3, 4]

    def test_line(self):
        report = run_json("shapes", "-N", "2", "-d", "1")
        assert len(report["shapes"]) == 1

    def test_max_shell_incomplete(self):
        result = runner.invoke(app, ["shapes", "--max-shell", "1", "--workers", "2"])
        assert result.exit_code == 0
        assert '"complete": false' in result.stdout

    def test_max_shell_capped(self):
        result = runner.invoke(app, ["shapes", "--max-shell", "2", "--cap", "10"])
        assert result.exit_code == 3

    def test_scan_capped(self):
        result = runner.invoke(app, ["shapes", "--cap", "10"])
        assert result.exit_code == 3

    def test_text_format(self):
        result = runner.invoke(app, ["shapes", "--format", "text"])
        assert result.exit_code == 0
        assert "complete" in result.output

    def test_golden(self):
        result = runner.invoke(app, ["shapes", "--golden", str(GOLDEN / "shapes.json")])
        assert result.exit_code == 0, result.output

    def test_golden_rejects_scaled_shape(self, tmp_path):
        doc = json.loads((GOLDEN / "shapes.json").read_text())
        doc["shapes"][0]["polynomial"] = "2*t1+-2*t2"
        golden = write(tmp_path, "shapes.json", json.dumps(doc))
        result = runner.invoke(app, ["shapes", "--golden", str(golden)])
        assert result.exit_code == 1


class TestMultipletsCommand:
    def test_second_shell(self):
        report = run_json("multiplets")
        assert report["dimension"] == 28
        assert report["l_content"] == [3, 3, 2, 1, 1, 1]
        assert [mp["label"] for mp in report["multiplets"]][:2] == ["233-I", "233-II"]
        assert sum(len(mp["states"]) for mp in report["multiplets"]) == 28

    def test_verify_recounts_highest_weights(self):
        report = run_json("multiplets", "-s", "1", "--verify")
        assert report["highest_weight_check"] is True

    def test_no_recount_by_default(self):
        report = run_json("multiplets", "-s", "1")
        assert report["highest_weight_check"] is None

    def test_above_ceiling(self):
        result = runner.invoke(app, ["multiplets", "-s", "5"])
        assert result.exit_code == 2
        assert "ceiling" in result.output

    def test_other_configuration_rejected(self):
        result = runner.invoke(app, ["multiplets", "-N", "3", "-s", "0"])
        assert result.exit_code == 2


class TestTable1Command:
    def test_golden(self):
        result = runner.invoke(app, ["table1", "--golden", str(GOLDEN / "table1.json")])
        assert result.exit_code == 0, result.output

    def test_report(self):
        report = run_json("table1")
        assert report["all_match"] is False
        assert report["all_in_reference_span"] is True
        assert report["psi4_identity"] is True
        assert report["psi_233_II"]["norm_sq"] == "384"
        assert report["psi_211_II"]["matches_paper"] is False

    def test_deterministic(self):
        first = runner.invoke(app, ["table1"])
        second = runner.invoke(app, ["table1"])
        assert first.stdout == second.stdout

    def test_text_format_with_golden(self):
        result = runner.invoke(app, ["table1", "--format", "text", "--golden", str(GOLDEN / "table1.json")])
        assert result.exit_code == 0
        assert "Matches" in result.output

    def test_golden_sign_change_detected(self, tmp_path):
        doc = json.loads((GOLDEN / "table1.json").read_text())
        doc["psi_211_I"]["spherical"] = "1*P10^2*P11+1*P11^2*P1m1"
        golden = write(tmp_path, "table1.json", json.dumps(doc))
        result = runner.invoke(app, ["table1", "--golden", str(golden)])
        assert result.exit_code == 1
        assert "change(s)" in result.output

    def test_golden_rejects_rescaled_state(self, tmp_path):
        doc = json.loads((GOLDEN / "table1.json").read_text())
        doc["psi_233_II"]["polynomial"] = "2*P11^3"
        golden = write(tmp_path, "table1.json", json.dumps(doc))
        result = runner.invoke(app, ["table1", "--golden", str(golden)])
        assert result.exit_code == 1

    def test_golden_lists_every_row_field(self):
        doc = json.loads((GOLDEN / "table1.json").read_text())
        assert set(doc) == set(run_json("table1"))
        for key, row in doc.items():
            if isinstance(row, dict):
                assert set(row) == ROW_FIELDS, key


class TestDecomposeCommand:
    def test_fourth_shape_from_file(self, tmp_path):
        source = write(tmp_path, "psi4.txt", "# fourth shape\n" + format_polynomial(psi4()) + "\n")
        report = run_json("decompose", "--input", str(source))
        assert report["support"] == [4]
        assert report["reconstructs"] is True
        assert len(report["coefficients"]) == 4

    def test_state_label(self):
        report = run_json("decompose", "--state", "233-II")
        assert report["reconstructs"] is True

    def test_parse_error(self, tmp_path):
        source = write(tmp_path, "bad.txt", "1*q1")
        result = runner.invoke(app, ["decompose", "-i", str(source)])
        assert result.exit_code == 2

    def test_not_antisymmetric(self, tmp_path):
        source = write(tmp_path, "sym.txt", "t1+t2")
        result = runner.invoke(app, ["decompose", "-i", str(source)])
        assert result.exit_code == 2
        assert "antisymmetric" in result.output

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["decompose", "-i", str(tmp_path / "absent.txt")])
        assert result.exit_code == 2

    def test_needs_a_source(self):
        result = runner.invoke(app, ["decompose"])
        assert result.exit_code == 2
        assert "exactly one" in result.output


class TestRmCommand:
    def test_septiplet(self):
        report = run_json("rm", "--state", "233-II")
        assert report["state"] == "233-II"
        assert report["pure_rm"] is True
        assert report["n_r"] == 0
        assert report["l"] == 3
        assert report["band"] == "rotational"
        assert set(report["rm_form"]) == {"p", "q", "r", "s"}

    def test_radial_triplet(self):
        report = run_json("rm", "--state", "211-I")
        assert (report["n_r"], report["l"]) == (1, 1)

    def test_fourth_shape_form(self, tmp_path):
        source = write(tmp_path, "psi4.txt", format_polynomial(psi4()))
        report = run_json("rm", "--input", str(source))
        assert report["state"] == "input"
        assert report["pure_rm"] is True
        assert report["band"] == "rotational"

    def test_fourth_shape_golden(self, tmp_path):
        source = write(tmp_path, "psi4.txt", format_polynomial(psi4()))
        result = runner.invoke(app, ["rm", "--input", str(source), "--golden", str(GOLDEN / "rm_psi4.json")])
        assert result.exit_code == 0, result.output

    def test_centre_of_mass_excitation(self, tmp_path):
        source = write(tmp_path, "cm.txt", "t1^2-t2^2")
        report = run_json("rm", "--input", str(source))
        assert report["pure_rm"] is False
        assert report["rm_form"] is None
        assert report["n_r"] is None
        assert report["band"] == "vibrational"

    def test_unknown_state(self):
        result = runner.invoke(app, ["rm", "--state", "299"])
        assert result.exit_code == 2
        assert "Unknown state label" in result.output

    def test_both_sources(self, tmp_path):
        source = write(tmp_path, "psi4.txt", format_polynomial(psi4()))
        result = runner.invoke(app, ["rm", "--state", "233-II", "--input", str(source)])
        assert result.exit_code == 2

    def test_text_format(self):
        result = runner.invoke(app, ["rm", "--state", "233-II", "--format", "text"])
        assert result.exit_code == 0
        assert "Radial quanta" in result.output


class TestLaughlinCommand:
    def test_golden(self):
        result = runner.invoke(app, ["laughlin", "--golden", str(GOLDEN / "laughlin.json")])
        assert result.exit_code == 0, result.output

    def test_report(self):
        report = run_json("laughlin")
        assert report["vandermonde_match"] is True

    def test_capped(self):
        result = runner.invoke(app, ["laughlin", "--cap", "3"])
        assert result.exit_code == 3


class TestCapGuard:
    def test_cap_checked_for_requested_shell(self, mocker):
        spy = mocker.spy(config, "enforce_cap")
        run_json("shells", "-s", "1")
        spy.assert_called_once()
        assert spy.call_args.args[1] == 10000
