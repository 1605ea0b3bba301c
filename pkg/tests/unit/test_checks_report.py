"""
Unit tests for the check registry, the runner and verification reports
"""

import json
import re
from fractions import Fraction

import pytest
from loguru import logger

from octoverify import __version__
from octoverify.checks import (
    ENUMERATION_LIMIT,
    MOUFANG_TRIPLES,
    SUITES,
    Check,
    CheckRegistry,
    CheckResult,
    CheckStatus,
    evaluate,
    load_reference_values,
    normalize,
    registry,
    run_checks,
)
from octoverify.composition_algebras import CDElement
from octoverify.error_handling import DomainError, InternalError, UsageError, error_handler
from octoverify.report import Report, default_report_path, run_verify
from octoverify.root_rep_engine.characters import VirtualRep
from octoverify.root_rep_engine.root_system import build_root_system, weyl_order

LOCATION_TOKEN = re.compile(r"(Eq \d+|Table \d+|§\d+)")


def make_reference(expected="3", flagged=False, location="Eq 1"):
    entry = {"location": location, "expected": expected}
    if flagged:
        entry["flagged"] = True
    return {"checks": {"sample": entry}}


class TestReferenceData:
    """Test the shipped reference data against the registry"""

    def setup_method(self):
        """Setup test fixtures"""
        self.reference = load_reference_values()

    def test_every_check_has_an_entry(self):
        """Test that each registered check is described"""
        missing = [c.check_id for c in registry.checks() if c.check_id not in self.reference["checks"]]
        assert missing == []

    def test_every_entry_has_a_check(self):
        """Test that no entry is orphaned"""
        orphans = [name for name in self.reference["checks"] if name not in registry]
        assert orphans == []

    def test_entries_have_locations(self):
        """Test location and expected fields"""
        for name, entry in self.reference["checks"].items():
            assert str(entry.get("location", "")).strip(), name
            assert isinstance(entry["expected"], str), name

    def test_traceability(self):
        """Test that the required locations are covered by some check"""
        covered = set()
        for entry in self.reference["checks"].values():
            covered.update(LOCATION_TOKEN.findall(entry["location"]))
        required = set(self.reference["traceability_required"])
        assert required - covered == set()

    def test_every_suite_is_populated(self):
        """Test that each suite has checks"""
        for suite in SUITES:
            assert registry.checks(suite), suite
        assert len(registry) == len(registry.checks("all"))

    def test_missing_checks_section(self, tmp_path):
        """Test a reference file without checks"""
        path = tmp_path / "broken.yaml"
        path.write_text("version: 1\n", encoding="utf-8")
        with pytest.raises(InternalError, match="no 'checks' section"):
            load_reference_values(str(path))


class TestNormalize:
    """Test value normalization"""

    def test_scalars(self):
        """Test booleans, integers and fractions"""
        assert normalize(True) == "true"
        assert normalize(False) == "false"
        assert normalize(14) == "14"
        assert normalize(Fraction(-1, 2)) == "-1/2"

    def test_sequences(self):
        """Test flat and nested sequences"""
        assert normalize([3, 7, 11]) == "3,7,11"
        assert normalize([[3, 9], [9, 18]]) == "3,9;9,18"
        assert normalize(()) == ""

    def test_algebraic_values(self):
        """Test octonions and virtual representations"""
        assert normalize(CDElement.basis(3, 5)) == "e5"
        a1 = build_root_system("A1")
        assert normalize(VirtualRep.irreducible(a1, a1.from_dynkin([2]))) == "3"

    def test_unsupported(self):
        """Test values without a normal form"""
        with pytest.raises(InternalError):
            normalize(object())


class TestRegistry:
    """Test check registration"""

    def setup_method(self):
        """Setup test fixtures"""
        self.registry = CheckRegistry()

    def test_register_and_select(self):
        """Test registration order and suite selection"""

        @self.registry.register("weyl")
        def first():
            return 1

        @self.registry.register("magic", "renamed")
        def second():
            return 2

        assert [c.check_id for c in self.registry.checks()] == ["first", "renamed"]
        assert [c.check_id for c in self.registry.checks("magic")] == ["renamed"]
        assert "renamed" in self.registry
        assert self.registry.get("first").compute() == 1

    def test_duplicate_registration(self):
        """Test that ids are unique"""
        self.registry.register("weyl", "dup")(lambda: 1)
        with pytest.raises(InternalError, match="registered twice"):
            self.registry.register("weyl", "dup")(lambda: 2)

    def test_unknown_suites(self):
        """Test unknown suites at registration and selection"""
        with pytest.raises(InternalError):
            self.registry.register("physics")
        with pytest.raises(UsageError) as exc_info:
            self.registry.checks("physics")
        assert exc_info.value.token == "physics"


class TestEvaluate:
    """Test evaluation of single checks"""

    def test_pass_and_fail(self):
        """Test comparison with the expected value"""
        sample = Check("sample", "weyl", lambda: 3)
        assert evaluate(sample, make_reference("3")).status is CheckStatus.PASS
        failed = evaluate(sample, make_reference("4"))
        assert failed.status is CheckStatus.FAIL
        assert failed.actual == "3"
        assert failed.location == "Eq 1"

    def test_flagged(self):
        """Test that a flagged mismatch is reported as flagged"""
        sample = Check("sample", "magic", lambda: "so(12) (dim 66)")
        result = evaluate(sample, make_reference("O(16)", flagged=True))
        assert result.status is CheckStatus.FLAGGED

    def test_exception_is_a_failure(self):
        """Test that a raising check fails without stopping the run and is recorded"""
        error_handler.clear()
        sample = Check("sample", "weyl", lambda: 1 // 0)
        result = evaluate(sample, make_reference("1"))
        assert result.status is CheckStatus.FAIL
        assert result.actual.startswith("error: ZeroDivisionError")
        summary = error_handler.get_error_summary()
        assert summary["total_errors"] == 1
        assert "zero" in summary["recent_errors"][0]["message"]
        error_handler.clear()

    def test_missing_entry_or_location(self):
        """Test reference entries that cannot be used"""
        sample = Check("other", "weyl", lambda: 1)
        with pytest.raises(InternalError, match="No reference entry"):
            evaluate(sample, make_reference())
        with pytest.raises(InternalError, match="no location"):
            evaluate(Check("sample", "weyl", lambda: 1), make_reference(location=" "))

    def test_result_json_roundtrip(self):
        """Test the JSON form of a result"""
        result = CheckResult("sample", "Eq 1", "3", "3", CheckStatus.PASS)
        data = result.to_json()
        assert data["paper_location"] == "Eq 1"
        assert CheckResult.from_json(data) == result


class TestRunner:
    """Test suite runs"""

    def test_octonion_suite_passes(self):
        """Test that every octonion check passes"""
        results = run_checks("octonions")
        assert [r.check_id for r in results] == [c.check_id for c in registry.checks("octonions")]
        assert all(r.status is CheckStatus.PASS for r in results), [
            r for r in results if r.status is not CheckStatus.PASS
        ]

    def test_suite_sizes(self):
        """Test the randomized and enumerated coverage of the shipped suites"""
        assert MOUFANG_TRIPLES >= 1000
        for label in ("A8", "B7", "C7", "D7", "E6", "F4"):
            assert weyl_order(build_root_system(label)) <= ENUMERATION_LIMIT, label

    def test_parallel_runs_keep_order(self):
        """Test that jobs > 1 returns results in registration order"""
        serial = run_checks("octonions", jobs=1)
        parallel = run_checks("octonions", jobs=4)
        assert [r.check_id for r in parallel] == [r.check_id for r in serial]
        assert [r.actual for r in parallel] == [r.actual for r in serial]

    def test_run_logs_cache_statistics(self):
        """Test that a run reports the character cache at debug level"""
        messages = []
        sink_id = logger.add(lambda message: messages.append(str(message)), level="DEBUG")
        try:
            run_verify("magic")
        finally:
            logger.remove(sink_id)
        assert any("Character cache:" in m and "'hits'" in m for m in messages)

    def test_reruns_differ_only_in_timestamp(self):
        """Test that two runs give the same report apart from the timestamp"""
        first = run_verify("octonions").to_json()
        second = run_verify("octonions").to_json()
        first.pop("timestamp")
        second.pop("timestamp")
        assert first == second

    def test_magic_suite_flags_without_failing(self):
        """Test the flagged label in the magic suite"""
        report = run_verify("magic")
        flagged = {r.check_id for r in report.flagged()}
        assert flagged == {"magic_square_o16_label"}
        assert report.failures() == []
        assert report.exit_code == 0

    def test_unknown_suite(self):
        """Test the usage error for an unknown suite"""
        with pytest.raises(UsageError):
            run_checks("everything")

    @pytest.mark.slow
    def test_full_run(self):
        """Test that a full run has no failures and flags only known discrepancies"""
        report = run_verify(jobs=4)
        assert report.suite == "all"
        assert report.failures() == []
        assert {r.check_id for r in report.flagged()} == {
            "magic_square_o16_label",
            "yang_mills_quoted_line",
        }
        assert set(report.suite_summaries()) == set(SUITES)


class TestReport:
    """Test report serialization"""

    def setup_method(self):
        """Setup test fixtures"""
        self.report = Report(
            suite="weyl",
            results=[
                CheckResult("a", "Eq 3", "7", "7", CheckStatus.PASS),
                CheckResult("b", "Eq 26 | cell", "O(16)", "so(12)", CheckStatus.FLAGGED),
                CheckResult("c", "§2", "1", "2", CheckStatus.FAIL),
            ],
            timestamp="2024-01-01T00:00:00+00:00",
        )

    def test_summary_and_exit_code(self):
        """Test status counts"""
        assert self.report.summary == {"pass": 1, "fail": 1, "flagged": 1}
        assert not self.report.passed
        assert self.report.exit_code == 1
        assert self.report.engine_version == __version__

    def test_json_roundtrip(self):
        """Test to_json_text / from_json_text"""
        text = self.report.to_json_text()
        assert text.endswith("\n")
        restored = Report.from_json_text(text)
        assert restored == self.report

    def test_summary_mismatch(self):
        """Test that a tampered summary is rejected"""
        data = self.report.to_json()
        data["summary"]["pass"] = 3
        with pytest.raises(DomainError, match="summary"):
            Report.from_json(data)

    def test_malformed(self):
        """Test malformed report documents"""
        with pytest.raises(DomainError, match="Malformed"):
            Report.from_json({"suite": "weyl"})
        with pytest.raises(DomainError, match="not valid JSON"):
            Report.from_json_text("{")

    def test_markdown(self):
        """Test the markdown rendering"""
        text = self.report.render("md")
        assert text.startswith("# Verification report: weyl")
        assert "| b | Eq 26 \\| cell | O(16) | so(12) | flagged |" in text
        assert "pass: 1, fail: 1, flagged: 1" in text

    def test_unknown_format(self):
        """Test an unsupported output format"""
        with pytest.raises(DomainError):
            self.report.render("pdf")

    def test_write(self, tmp_path):
        """Test writing JSON to disk"""
        path = default_report_path(str(tmp_path / "out"), "weyl", "json")
        assert path.name == "report-weyl.json"
        self.report.write(path, "json")
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["summary"] == {"pass": 1, "fail": 1, "flagged": 1}
        assert data["results"][0]["paper_location"] == "Eq 3"
