"""
Integration tests for the command-line interface
"""

import json

import pytest
from click.testing import CliRunner

from octoverify import __version__
from octoverify.__main__ import cli


@pytest.mark.integration
class TestVerifyCommand:
    """Test the verify command"""

    def setup_method(self):
        """Setup test fixtures"""
        self.runner = CliRunner()

    def test_verify_suite_to_file(self, tmp_path):
        """Test a suite run written to --out"""
        out = tmp_path / "report.json"
        result = self.runner.invoke(cli, ["verify", "--suite", "octonions", "--out", str(out)])
        assert result.exit_code == 0, result.output
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["suite"] == "octonions"
        assert data["engine_version"] == __version__
        assert data["summary"]["fail"] == 0
        assert all("paper_location" in r for r in data["results"])

    def test_verify_format_from_out_suffix(self, tmp_path):
        """Test that a .md --out path selects the markdown report"""
        out = tmp_path / "octonions.md"
        result = self.runner.invoke(cli, ["verify", "-s", "octonions", "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert out.read_text(encoding="utf-8").startswith("# Verification report: octonions")

    def test_explicit_format_beats_suffix(self, tmp_path):
        """Test that --format wins over the --out suffix"""
        out = tmp_path / "octonions.md"
        result = self.runner.invoke(cli, ["verify", "-s", "octonions", "--format", "json",
                                          "--out", str(out)])
        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text(encoding="utf-8"))["suite"] == "octonions"

    def test_verify_markdown_to_stdout(self, monkeypatch):
        """Test markdown output on stdout"""
        monkeypatch.delenv("OCTOVERIFY_OUT", raising=False)
        result = self.runner.invoke(cli, ["verify", "-s", "magic", "--format", "md"])
        assert result.exit_code == 0, result.output
        assert "# Verification report: magic" in result.output
        assert "magic_square_o16_label" in result.output

    def test_verify_output_directory_from_environment(self, tmp_path):
        """Test the output directory environment variable"""
        result = self.runner.invoke(cli, ["verify", "-s", "octonions"],
                                    env={"OCTOVERIFY_OUT": str(tmp_path)})
        assert result.exit_code == 0, result.output
        assert (tmp_path / "report-octonions.json").exists()

    def test_unknown_suite(self):
        """Test the usage exit code for an unknown suite"""
        result = self.runner.invoke(cli, ["verify", "--suite", "everything"])
        assert result.exit_code == 2

    def test_invalid_jobs(self):
        """Test the jobs lower bound"""
        result = self.runner.invoke(cli, ["verify", "--jobs", "0"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestTableCommand:
    """Test the table command"""

    def setup_method(self):
        """Setup test fixtures"""
        self.runner = CliRunner()

    def test_sugra_triplet(self):
        """Test the multiplet headline"""
        result = self.runner.invoke(cli, ["table", "sugra-triplet"])
        assert result.exit_code == 0, result.output
        assert "44 − 128 + 84" in result.output

    def test_spheres_for_algebra(self):
        """Test the sphere table for a single algebra"""
        result = self.runner.invoke(cli, ["table", "spheres", "--algebra", "G2"])
        assert result.exit_code == 0, result.output
        assert "S³ ×̃ S¹¹" in result.output

    def test_magic_square(self):
        """Test the magic square"""
        result = self.runner.invoke(cli, ["table", "magic-square"])
        assert result.exit_code == 0, result.output
        assert "E8 (248)" in result.output

    def test_unknown_table(self):
        """Test the usage exit code for an unknown table"""
        result = self.runner.invoke(cli, ["table", "periodic"])
        assert result.exit_code == 2

    def test_bad_algebra(self):
        """Test the usage exit code for an unparseable algebra"""
        result = self.runner.invoke(cli, ["table", "spheres", "--algebra", "Q7"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestDecomposeCommand:
    """Test the decompose and branch commands"""

    def setup_method(self):
        """Setup test fixtures"""
        self.runner = CliRunner()

    def test_fifth_power_of_spinor(self):
        """Test the fifth exterior power of the Spin(10) spinor"""
        result = self.runner.invoke(cli, ["decompose", "D5", "spinor16", "-k", "5"])
        assert result.exit_code == 0, result.output
        assert "672 + 3696" in result.output

    def test_branch_to_b4(self):
        """Test the third power restricted to Spin(9)"""
        result = self.runner.invoke(cli, ["decompose", "D5", "spinor16", "-k", "3",
                                          "--branch-to", "B4", "--format", "json"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert payload["describe"] == "128 + 432"
        assert payload["dimension"] == 560
        assert payload["algebra"] == "B4"

    def test_zeroth_power(self):
        """Test that the zeroth power is the trivial representation"""
        result = self.runner.invoke(cli, ["decompose", "D5", "spinor16", "-k", "0",
                                          "--format", "json"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["dimension"] == 1

    def test_explicit_coordinates(self):
        """Test a weight given by coordinates"""
        result = self.runner.invoke(cli, ["decompose", "B3", "1,0,0", "-k", "2"])
        assert result.exit_code == 0, result.output
        assert "21 (dimension 21)" in result.output

    def test_bad_weight_token(self):
        """Test the usage exit code for an unparseable coordinate"""
        result = self.runner.invoke(cli, ["decompose", "D5", "1/2,x,1/2,1/2,1/2"])
        assert result.exit_code == 2
        assert "'x'" in result.output

    def test_power_out_of_range(self):
        """Test degrees beyond the dimension"""
        result = self.runner.invoke(cli, ["decompose", "D5", "spinor16", "-k", "17"])
        assert result.exit_code == 2

    def test_missing_projection(self):
        """Test branching to a target without a preset"""
        result = self.runner.invoke(cli, ["decompose", "D5", "vector", "--branch-to", "A4"])
        assert result.exit_code == 2

    def test_branch_command(self):
        """Test the SO(16) vector restricted to Spin(9)"""
        result = self.runner.invoke(cli, ["branch", "D8", "vector", "B4", "-p", "D8->B4",
                                          "--format", "json"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["describe"] == "16"

    def test_branch_projection_mismatch(self):
        """Test a projection that does not match the algebras"""
        result = self.runner.invoke(cli, ["branch", "D5", "vector", "B4", "-p", "B4->D4"])
        assert result.exit_code == 2


@pytest.mark.integration
class TestGroup:
    """Test group-level options"""

    def test_version(self):
        """Test --version"""
        result = CliRunner().invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_log_file(self, tmp_path):
        """Test that --log-file receives debug records"""
        log_path = tmp_path / "octoverify.log"
        result = CliRunner().invoke(cli, ["--log-file", str(log_path), "table", "sugra-triplet"])
        assert result.exit_code == 0, result.output
        assert log_path.exists()
