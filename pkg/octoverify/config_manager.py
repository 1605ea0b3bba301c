"""
Configuration Management

Run settings for the verifier: defaults, the OCTOVERIFY_OUT environment
variable (also read from a .env file) and command-line overrides, validated
against a small schema. There is no configuration file.
"""

import os
from dataclasses import asdict, dataclass, fields
from typing import Any, Callable, Dict, List, Mapping, Optional

from dotenv import load_dotenv
from loguru import logger

from .error_handling import DomainError

OUTPUT_ENV_VAR = "OCTOVERIFY_OUT"

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
REPORT_FORMATS = ("json", "md")


@dataclass
class ConfigSchema:
    """Configuration schema definition."""
    key: str
    type_hint: type
    description: str = ""
    validation_func: Optional[Callable[[Any], bool]] = None


@dataclass
class VerifySettings:
    """Settings for one verifier run."""

    output_directory: str = "./reports"
    log_level: str = "WARNING"
    jobs: int = 1
    report_format: str = "json"
    # True once output_directory came from the environment or an override.
    output_directory_set: bool = False


class ConfigManager:
    """Builds validated VerifySettings from defaults, environment and overrides."""

    def __init__(self, overrides: Optional[Mapping[str, Any]] = None,
                 environment: Optional[Mapping[str, str]] = None,
                 load_env_file: bool = True):
        self.settings = VerifySettings()
        self.schema = self._define_schema()

        if load_env_file:
            load_dotenv()
        self._load_from_environment(os.environ if environment is None else environment)
        if overrides:
            self._apply_overrides(overrides)

        self._validate()
        logger.debug(f"Configuration loaded: {self.get_summary()}")

    def _define_schema(self) -> List[ConfigSchema]:
        return [
            ConfigSchema("output_directory", str, "Directory for written reports",
                         lambda v: bool(v.strip())),
            ConfigSchema("log_level", str, "Console log level",
                         lambda v: v.upper() in LOG_LEVELS),
            ConfigSchema("jobs", int, "Parallel workers for the check runner", lambda v: v >= 1),
            ConfigSchema("report_format", str, "Report format (json or md)",
                         lambda v: v in REPORT_FORMATS),
        ]

    def _load_from_environment(self, environment: Mapping[str, str]):
        value = environment.get(OUTPUT_ENV_VAR)
        if value:
            self.settings.output_directory = value
            self.settings.output_directory_set = True
            logger.debug(f"Loaded from env: output_directory = {value}")

    def _apply_overrides(self, overrides: Mapping[str, Any]):
        known = {f.name for f in fields(VerifySettings)}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise DomainError(f"Unknown configuration key: {key}")
            setattr(self.settings, key, value)
            if key == "output_directory":
                self.settings.output_directory_set = True

    def _validate(self):
        errors = []
        for item in self.schema:
            value = getattr(self.settings, item.key)
            if isinstance(value, bool) or not isinstance(value, item.type_hint):
                try:
                    value = item.type_hint(value)
                    setattr(self.settings, item.key, value)
                except (TypeError, ValueError):
                    errors.append(f"Invalid type for {item.key}: expected {item.type_hint.__name__}")
                    continue
            if item.validation_func and not item.validation_func(value):
                errors.append(f"Invalid value for {item.key}: {value!r}")
        if errors:
            message = "Configuration validation failed: " + "; ".join(errors)
            logger.error(message)
            raise DomainError(message)
        self.settings.log_level = self.settings.log_level.upper()

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value."""
        return getattr(self.settings, key, default)

    def set(self, key: str, value: Any):
        """Set configuration value and re-validate."""
        if not hasattr(self.settings, key):
            raise DomainError(f"Unknown configuration key: {key}")
        previous = getattr(self.settings, key)
        setattr(self.settings, key, value)
        try:
            self._validate()
        except DomainError:
            setattr(self.settings, key, previous)
            raise
        logger.debug(f"Configuration updated: {key} = {value}")

    def get_summary(self) -> Dict[str, Any]:
        """Get configuration summary for display."""
        summary = asdict(self.settings)
        summary.pop("output_directory_set")
        return summary
