"""
Verification Reports

Aggregates check results into a report with status counts, serializes it as
JSON or markdown and writes it to disk.
"""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional

from loguru import logger

from . import __version__
from .cache_manager import character_cache
from .checks import CheckResult, CheckStatus, SUITES, registry, run_checks
from .error_handling import EXIT_CHECK_FAILURE, EXIT_OK, DomainError, error_handler
from .rendering import render_report


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class Report:
    suite: str
    results: List[CheckResult]
    engine_version: str = __version__
    timestamp: str = field(default_factory=_now)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for result in self.results:
            counts[result.status.value] += 1
        return counts

    @property
    def passed(self) -> bool:
        return self.summary[CheckStatus.FAIL.value] == 0

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_CHECK_FAILURE

    def flagged(self) -> List[CheckResult]:
        return [r for r in self.results if r.status is CheckStatus.FLAGGED]

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if r.status is CheckStatus.FAIL]

    def suite_summaries(self) -> Dict[str, Dict[str, int]]:
        """Status counts per suite, for suites that contributed results."""
        by_id = {r.check_id: r for r in self.results}
        out: Dict[str, Dict[str, int]] = {}
        for suite in SUITES:
            ids = [c.check_id for c in registry.checks(suite) if c.check_id in by_id]
            if not ids:
                continue
            counts = {status.value: 0 for status in CheckStatus}
            for check_id in ids:
                counts[by_id[check_id].status.value] += 1
            out[suite] = counts
        return out

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "engine_version": self.engine_version,
            "timestamp": self.timestamp,
            "results": [r.to_json() for r in self.results],
            "summary": self.summary,
        }

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Report":
        try:
            report = cls(
                suite=str(data["suite"]),
                results=[CheckResult.from_json(r) for r in data["results"]],
                engine_version=str(data["engine_version"]),
                timestamp=str(data["timestamp"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError(f"Malformed report: {e}") from e
        if "summary" in data and dict(data["summary"]) != report.summary:
            raise DomainError("Report summary does not match its results")
        return report

    @classmethod
    def from_json_text(cls, text: str) -> "Report":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DomainError(f"Report is not valid JSON: {e}") from e
        return cls.from_json(data)

    def to_markdown(self) -> str:
        return render_report(self)

    def render(self, report_format: str) -> str:
        if report_format == "json":
            return self.to_json_text()
        if report_format == "md":
            return self.to_markdown()
        raise DomainError(f"Unknown report format '{report_format}'")

    def write(self, path: Path, report_format: str) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(report_format), encoding="utf-8")
        logger.info(f"Report written to {path}")
        return path


def run_verify(suite: Optional[str] = None, jobs: int = 1) -> Report:
    """Run the selected suite (all when absent) and build its report."""
    name = suite or "all"
    results = run_checks(name, jobs=jobs)
    report = Report(suite=name, results=results)
    logger.info(f"Suite {name}: {report.summary}")
    errors = error_handler.get_error_summary()
    if errors["total_errors"]:
        logger.debug(f"Engine errors recorded: {errors['by_category']}")
    logger.debug(f"Character cache: {character_cache.get_stats()}")
    return report


def default_report_path(directory: str, suite: str, report_format: str) -> Path:
    return Path(directory) / f"report-{suite}.{report_format}"
