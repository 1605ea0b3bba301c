"""
Error Handling

Exception hierarchy for the algebra engine, a central handler that logs and
records failures, and the mapping from failures to CLI exit codes.
"""

import functools
import hashlib
import sys
import time
import traceback
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Deque, Dict, Iterator, Optional

from loguru import logger


class ErrorSeverity(Enum):
    """Error severity levels."""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ErrorCategory(Enum):
    """Error categories for classification."""
    VALIDATION = "validation"
    ARITHMETIC = "arithmetic"
    UNSUPPORTED = "unsupported"
    REPRESENTATION = "representation"
    RESOURCE = "resource"
    INTERNAL = "internal"
    USAGE = "usage"


# Exit codes of the command-line contract.
EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_MATH_ERROR = 3

_MATH_CATEGORIES = {
    ErrorCategory.VALIDATION,
    ErrorCategory.ARITHMETIC,
    ErrorCategory.UNSUPPORTED,
    ErrorCategory.REPRESENTATION,
    ErrorCategory.RESOURCE,
}


@dataclass
class ErrorContext:
    """Context information for errors."""
    operation: str
    component: str
    details: Dict[str, Any] = field(default_factory=dict)


@dataclass
class EngineError:
    """Structured record of a handled failure."""
    error_id: str
    category: ErrorCategory
    severity: ErrorSeverity
    message: str
    details: str
    context: ErrorContext
    original_exception: Optional[BaseException] = None
    timestamp: float = field(default_factory=time.time)


class OctoverifyError(Exception):
    """Base exception for the engine."""

    category = ErrorCategory.INTERNAL
    severity = ErrorSeverity.HIGH

    def __init__(self, message: str, context: Optional[ErrorContext] = None,
                 original_exception: Optional[BaseException] = None):
        super().__init__(message)
        self.context = context
        self.original_exception = original_exception


class DomainError(OctoverifyError, ValueError):
    """Argument outside the domain of an operation."""
    category = ErrorCategory.VALIDATION
    severity = ErrorSeverity.MEDIUM


class DivisionByZeroError(OctoverifyError, ZeroDivisionError):
    """Inverse of zero in a composition algebra."""
    category = ErrorCategory.ARITHMETIC
    severity = ErrorSeverity.MEDIUM


class UnsupportedError(OctoverifyError):
    """Valid request outside the supported range (e.g. more than nine gammas)."""
    category = ErrorCategory.UNSUPPORTED
    severity = ErrorSeverity.MEDIUM


class NotACharacterError(OctoverifyError):
    """Weight multiset that is not a (virtual) character."""
    category = ErrorCategory.REPRESENTATION
    severity = ErrorSeverity.HIGH


class InvalidProjectionError(OctoverifyError):
    """Projection that does not carry the source lattice into the target weights."""
    category = ErrorCategory.REPRESENTATION
    severity = ErrorSeverity.HIGH


class EnumerationRefusedError(OctoverifyError):
    """Explicit Weyl group enumeration beyond the configured cap."""
    category = ErrorCategory.RESOURCE
    severity = ErrorSeverity.MEDIUM


class InternalError(OctoverifyError):
    """A state that valid mathematics cannot reach."""
    category = ErrorCategory.INTERNAL
    severity = ErrorSeverity.CRITICAL


class UsageError(OctoverifyError):
    """Unparsable command-line input."""
    category = ErrorCategory.USAGE
    severity = ErrorSeverity.LOW

    def __init__(self, message: str, token: Optional[str] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.token = token


class ErrorHandler:
    """Centralized error handling system."""

    def __init__(self, history_size: int = 100):
        self.error_history: Deque[EngineError] = deque(maxlen=history_size)

    def handle_error(self, error: BaseException,
                     context: Optional[ErrorContext] = None) -> EngineError:
        """Record and log an error; the caller decides whether to re-raise."""
        record = self._create_record(error, context)
        self._log_error(record)
        self.error_history.append(record)
        return record

    def _create_record(self, error: BaseException,
                       context: Optional[ErrorContext]) -> EngineError:
        category = self.classify(error)
        severity = error.severity if isinstance(error, OctoverifyError) else ErrorSeverity.HIGH
        error_id = hashlib.md5(
            f"{type(error).__name__}:{str(error)[:100]}:{time.time()}".encode()
        ).hexdigest()[:8]

        if context is None:
            context = getattr(error, "context", None) or ErrorContext(
                operation="unknown",
                component="octoverify",
                details={"python_version": sys.version, "error_type": type(error).__name__},
            )

        return EngineError(
            error_id=error_id,
            category=category,
            severity=severity,
            message=str(error),
            details=self._get_error_details(error),
            context=context,
            original_exception=error,
        )

    @staticmethod
    def classify(error: BaseException) -> ErrorCategory:
        """Category of an exception; foreign exceptions are internal."""
        if isinstance(error, OctoverifyError):
            return error.category
        return ErrorCategory.INTERNAL

    @staticmethod
    def _get_error_details(error: BaseException) -> str:
        details = [f"Exception Type: {type(error).__name__}", f"Message: {error}"]
        if error.__traceback__:
            details.append("Traceback:")
            details.extend(traceback.format_tb(error.__traceback__))
        return "\n".join(details)

    def _log_error(self, record: EngineError):
        """Log error with appropriate level."""
        log_message = f"[{record.error_id}] {record.context.operation}: {record.message}"

        if record.severity == ErrorSeverity.CRITICAL:
            logger.critical(log_message)
        elif record.severity == ErrorSeverity.HIGH:
            logger.error(log_message)
        elif record.severity == ErrorSeverity.MEDIUM:
            logger.warning(log_message)
        else:
            logger.info(log_message)

        logger.debug(f"Error details for {record.error_id}:\n{record.details}")

    def exit_code_for(self, error: BaseException) -> int:
        """Map an exception to the CLI exit code."""
        category = self.classify(error)
        if category == ErrorCategory.USAGE:
            return EXIT_USAGE
        if category in _MATH_CATEGORIES:
            return EXIT_MATH_ERROR
        return EXIT_CHECK_FAILURE

    def clear(self):
        self.error_history.clear()

    def get_error_summary(self) -> Dict[str, Any]:
        """Get error summary statistics."""
        if not self.error_history:
            return {"total_errors": 0}

        category_counts: Dict[str, int] = {}
        severity_counts: Dict[str, int] = {}
        for error in self.error_history:
            category_counts[error.category.value] = category_counts.get(error.category.value, 0) + 1
            severity_counts[error.severity.value] = severity_counts.get(error.severity.value, 0) + 1

        return {
            "total_errors": len(self.error_history),
            "by_category": category_counts,
            "by_severity": severity_counts,
            "recent_errors": [
                {
                    "id": error.error_id,
                    "category": error.category.value,
                    "severity": error.severity.value,
                    "message": error.message[:100],
                }
                for error in list(self.error_history)[-5:]
            ],
        }


# Global error handler instance
error_handler = ErrorHandler()


def handle_errors(operation: Optional[str] = None):
    """Decorator that records failures of the wrapped operation and re-raises them."""

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                context = ErrorContext(
                    operation=operation or func.__name__,
                    component=func.__module__,
                    details={"args": str(args)[:100], "kwargs": str(kwargs)[:100]},
                )
                error_handler.handle_error(e, context)
                raise

        return wrapper
    return decorator


@contextmanager
def error_context(operation: str, component: str = "octoverify",
                  details: Optional[Dict[str, Any]] = None) -> Iterator[None]:
    """Context manager for error handling."""
    try:
        yield
    except Exception as e:
        context = ErrorContext(operation=operation, component=component, details=details or {})
        error_handler.handle_error(e, context)
        raise
