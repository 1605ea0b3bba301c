"""
End-to-end test of a complete verification run
"""

import json

import pytest
from click.testing import CliRunner

from octoverify.__main__ import cli
from octoverify.checks import SUITES, load_reference_values
from octoverify.report import Report


@pytest.mark.slow
class TestFullVerification:
    """Test the full run through the command line"""

    def test_all_suites(self, tmp_path):
        """Test that a full run passes, flags the two known quotes and is traceable"""
        out = tmp_path / "report-all.json"
        result = CliRunner().invoke(cli, ["verify", "--suite", "all", "--jobs", "2",
                                          "--out", str(out)])
        assert result.exit_code == 0, result.output

        report = Report.from_json_text(out.read_text(encoding="utf-8"))
        assert report.summary["fail"] == 0
        assert {r.check_id for r in report.flagged()} == {
            "magic_square_o16_label",
            "yang_mills_quoted_line",
        }
        assert set(report.suite_summaries()) == set(SUITES)

        reference = load_reference_values()
        assert len(report.results) == len(reference["checks"])
        locations = " ".join(r.location for r in report.results)
        for token in reference["traceability_required"]:
            assert token in locations

        data = json.loads(out.read_text(encoding="utf-8"))
        by_id = {r["check_id"]: r for r in data["results"]}
        assert by_id["spin10_k5"]["actual"] == "672 + 3696"
        assert by_id["kostant_multiplet"]["actual"] == "44 + 84 - 128"
