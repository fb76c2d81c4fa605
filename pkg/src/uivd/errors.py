"""
Exception hierarchy for the UIVD kernelization engine.

Library code raises these; the CLI maps them onto exit codes and the MCP
tools turn them into {"success": false, "error": ...} payloads.
"""

from typing import Optional, Tuple


class UIVDError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(UIVDError):
    """Malformed graph file. Carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class DomainError(UIVDError):
    """An operation was called outside its precondition."""


class CertificateError(UIVDError):
    """A claimed proper interval ordering violates the umbrella property."""

    def __init__(self, triple: Tuple[int, int, int], message: Optional[str] = None):
        self.triple = triple
        first, middle, last = triple
        super().__init__(
            message
            or f"umbrella violated: {first} ~ {last} but {middle} breaks the clique between them"
        )


class InternalLogicError(UIVDError):
    """A state the algorithms guarantee cannot happen."""


class BudgetExhausted(UIVDError):
    """Rule 1 or 2 decremented the budget below zero: the instance is NO."""

    def __init__(self, step):
        self.step = step
        super().__init__(f"budget exhausted after rule {step.rule} deleted {list(step.vertices)}")


class OversizeError(UIVDError):
    """Instance too large for the oracle and --force was not given."""
